#include "deltapart/enumerate.hpp"

#include <stdexcept>

namespace deltapart {

Enumerator::Enumerator(Params params) : state_(params) {
  frames_.reserve(static_cast<std::size_t>(params.n) + 1);
}

SearchStats Enumerator::run(const PartitionVisitor& visit) { return run_impl(visit, false); }

SearchStats Enumerator::run_checked(const PartitionVisitor& visit) {
  return run_impl(visit, true);
}

// Assigns the next element the top frame's next candidate label, if any.
// Forced frames resume a scan over small blocks in ascending label order;
// scans resume where they stopped, so a whole forced loop costs one pass
// over 1..max_label.
bool Enumerator::try_advance() {
  Frame& frame = frames_.back();
  if (frame.forced) {
    const int max_label = state_.max_label();
    for (int k = frame.next + 1; k <= max_label; ++k) {
      if (state_.block_size(k) <= state_.delta()) {
        frame.next = k;
        state_.assign(k);
        return true;
      }
    }
    return false;
  }
  if (frame.next > frame.limit) return false;
  state_.assign(frame.next++);
  return true;
}

void Enumerator::unwind() {
  while (state_.assigned_prefix() > 0) state_.unassign();
  frames_.clear();
}

SearchStats Enumerator::run_impl(const PartitionVisitor& visit, bool checked) {
  state_.reset();
  frames_.clear();
  std::vector<int> recount_scratch;

  state_.assign(1);  // element 1 always opens block 1
  for (;;) {
    if (checked) state_.check_against_recount(recount_scratch);

    bool descended = false;
    switch (state_.classify()) {
      case PruneResult::Prune:
        state_.note_prune();
        break;
      case PruneResult::Forced: {
        state_.note_forced();
        // A nonempty small-block set means deficit >= 1, so here the
        // unassigned supply is >= 1 as well: there is an element to force.
        if (checked && state_.assigned_prefix() >= state_.n())
          throw std::logic_error("forced branch with no element left to assign");
        frames_.push_back({0, 0, true});
        descended = try_advance();
        break;
      }
      case PruneResult::Continue:
        if (state_.assigned_prefix() == state_.n()) {
          state_.note_solution();
          bool keep_going;
          try {
            keep_going = visit(state_.view());
          } catch (...) {
            unwind();
            throw;
          }
          if (!keep_going) {
            const SearchStats stats = state_.stats();
            unwind();
            return stats;
          }
        } else {
          frames_.push_back({1, state_.max_label() + 1, false});
          descended = try_advance();
        }
        break;
    }

    if (descended) continue;
    for (;;) {
      if (frames_.empty()) {
        state_.unassign();  // element 1; the traversal is complete
        return state_.stats();
      }
      state_.unassign();
      if (try_advance()) break;
      frames_.pop_back();
    }
  }
}

std::size_t Enumerator::memory_footprint() const {
  return state_.memory_footprint() + frames_.capacity() * sizeof(Frame);
}

SearchStats enumerate(const Params& params, const PartitionVisitor& visit) {
  return Enumerator(params).run(visit);
}

SearchStats enumerate_checked(const Params& params, const PartitionVisitor& visit) {
  return Enumerator(params).run_checked(visit);
}

BigUint count(const Params& params) {
  BigUint total;
  Enumerator(params).run([&](PartitionView) {
    total.increment();
    return true;
  });
  return total;
}

}  // namespace deltapart
