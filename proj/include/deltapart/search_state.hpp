#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "deltapart/types.hpp"

namespace deltapart {

// Node classification for the two pruning rules.
enum class PruneResult {
  Continue,  // no rule applies
  Prune,     // deficit exceeds the unassigned supply: no completion exists
  Forced,    // deficit equals the supply: the next element must join a small block
};

struct PruneDecision {
  PruneResult kind = PruneResult::Continue;
  std::vector<int> forced_blocks;  // ascending small-block labels, Forced only
};

// Mutable search state for the pruned backtracking traversal: the partial
// assignment (a restricted-growth prefix), per-label block sizes, and two
// scalars maintained in constant time per assign/unassign:
//
//   deficit (M)          sum over small blocks of (delta - size + 1), the
//                        number of further elements those blocks still need
//   small_block_count    number of labels whose block is nonempty but has
//                        size <= delta
//
// A small block is one that still violates the minimum-size requirement.
// All bookkeeping is O(1) per transition; recount_* methods recompute the
// same quantities from the raw labels for cross-checking.
//
// Not thread-safe; one state per thread of exploration.
class SearchState {
 public:
  explicit SearchState(Params params)
      : params_(params),
        labels_(static_cast<std::size_t>((validate(params), params.n)), 0),
        sizes_(static_cast<std::size_t>(params.n) + 1, 0) {}

  int n() const { return params_.n; }
  int delta() const { return params_.delta; }
  const Params& params() const { return params_; }

  int assigned_prefix() const { return prefix_; }
  int unassigned_count() const { return params_.n - prefix_; }
  int max_label() const { return max_label_; }
  std::uint64_t deficit() const { return deficit_; }
  int small_block_count() const { return small_block_count_; }
  int block_size(int label) const { return sizes_[static_cast<std::size_t>(label)]; }
  std::span<const int> labels() const { return labels_; }
  PartitionView view() const { return labels_; }
  const SearchStats& stats() const { return stats_; }

  // Assigns the next element to `label`. Restricted-growth rule: label must
  // lie in 1..max_label()+1. Violations are contract errors (asserted).
  void assign(int label) {
    assert(prefix_ < params_.n);
    assert(label >= 1 && label <= max_label_ + 1);
    labels_[static_cast<std::size_t>(prefix_)] = label;
    ++prefix_;
    if (label > max_label_) max_label_ = label;
    const int size_now = ++sizes_[static_cast<std::size_t>(label)];
    if (size_now == 1) {
      deficit_ += static_cast<std::uint64_t>(params_.delta);
      if (params_.delta >= 1) ++small_block_count_;
    } else if (size_now <= params_.delta + 1) {
      // Block was small before this element arrived.
      --deficit_;
      if (size_now == params_.delta + 1) --small_block_count_;
    }
    ++stats_.nodes;
  }

  // Exact inverse of the last assign (stats counters excepted; those are
  // monotone). Calling on an empty state is a contract error.
  void unassign() {
    assert(prefix_ >= 1);
    const int label = labels_[static_cast<std::size_t>(prefix_) - 1];
    labels_[static_cast<std::size_t>(prefix_) - 1] = 0;
    --prefix_;
    const int size_now = --sizes_[static_cast<std::size_t>(label)];
    if (size_now == 0) {
      // Labels are used contiguously, so only the top label can empty out.
      assert(label == max_label_);
      max_label_ = label - 1;
      deficit_ -= static_cast<std::uint64_t>(params_.delta);
      if (params_.delta >= 1) --small_block_count_;
    } else if (size_now <= params_.delta) {
      ++deficit_;
      if (size_now == params_.delta) ++small_block_count_;
    }
  }

  // Applies the pruning rules to the current node, allocation-free.
  PruneResult classify() const {
    if (small_block_count_ == 0) return PruneResult::Continue;
    const auto unassigned = static_cast<std::uint64_t>(params_.n - prefix_);
    if (deficit_ > unassigned) return PruneResult::Prune;
    if (deficit_ == unassigned) return PruneResult::Forced;
    return PruneResult::Continue;
  }

  // classify() plus the materialized small-block list on Forced.
  PruneDecision prune_check() const;

  // Ascending labels of nonempty blocks with size <= delta.
  std::vector<int> small_blocks() const;

  void note_prune() { ++stats_.prunes_deficit; }
  void note_forced() { ++stats_.forced_branches; }
  void note_solution() { ++stats_.solutions; }

  // Recounts from the raw label array, sharing nothing with the
  // incremental updates above. Used by the checked traversal and tests.
  std::uint64_t recount_deficit() const;
  int recount_small_block_count() const;
  int recount_block_size(int label) const;
  // Recounts everything in one pass and throws std::logic_error on any
  // disagreement with the incremental values. scratch is resized to n+1 on
  // first use and handed back zeroed, so a checked traversal allocates once.
  void check_against_recount(std::vector<int>& scratch) const;
  // True when every incremental quantity matches its recount.
  bool counters_consistent() const;

  // Restores the freshly constructed state, stats included.
  void reset();

  // Bytes held by the two label-indexed arrays.
  std::size_t memory_footprint() const;
  // Times small_blocks() has built a set; the traversal itself never does.
  std::uint64_t beta_materializations() const { return beta_materializations_; }

 private:
  Params params_;
  std::vector<int> labels_;  // labels_[i] is element i+1's block, 0 = unassigned
  std::vector<int> sizes_;   // sizes_[j] for labels j in 1..n; index 0 unused
  int prefix_ = 0;
  int max_label_ = 0;
  std::uint64_t deficit_ = 0;
  int small_block_count_ = 0;
  SearchStats stats_;
  mutable std::uint64_t beta_materializations_ = 0;
};

}  // namespace deltapart
