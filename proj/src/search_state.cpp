#include "deltapart/search_state.hpp"

#include <algorithm>

namespace deltapart {

PruneDecision SearchState::prune_check() const {
  PruneDecision decision;
  decision.kind = classify();
  if (decision.kind == PruneResult::Forced) decision.forced_blocks = small_blocks();
  return decision;
}

std::vector<int> SearchState::small_blocks() const {
  ++beta_materializations_;
  std::vector<int> blocks;
  blocks.reserve(static_cast<std::size_t>(small_block_count_));
  for (int j = 1; j <= max_label_; ++j) {
    if (sizes_[static_cast<std::size_t>(j)] <= params_.delta) blocks.push_back(j);
  }
  return blocks;
}

std::uint64_t SearchState::recount_deficit() const {
  std::uint64_t total = 0;
  for (int j = 1; j <= params_.n; ++j) {
    const int size = recount_block_size(j);
    if (size > 0 && size <= params_.delta)
      total += static_cast<std::uint64_t>(params_.delta - size + 1);
  }
  return total;
}

int SearchState::recount_small_block_count() const {
  int count = 0;
  for (int j = 1; j <= params_.n; ++j) {
    const int size = recount_block_size(j);
    if (size > 0 && size <= params_.delta) ++count;
  }
  return count;
}

int SearchState::recount_block_size(int label) const {
  return static_cast<int>(std::count(labels_.begin(), labels_.begin() + prefix_, label));
}

void SearchState::check_against_recount(std::vector<int>& scratch) const {
  scratch.resize(static_cast<std::size_t>(params_.n) + 1, 0);
  for (int i = 0; i < prefix_; ++i) {
    const int label = labels_[static_cast<std::size_t>(i)];
    if (label < 1 || label > params_.n) {
      throw std::logic_error("assigned element carries an out-of-range label");
    }
    ++scratch[static_cast<std::size_t>(label)];
  }
  for (int i = prefix_; i < params_.n; ++i) {
    if (labels_[static_cast<std::size_t>(i)] != 0)
      throw std::logic_error("label set beyond the assigned prefix");
  }
  std::uint64_t deficit = 0;
  int small = 0;
  int max_seen = 0;
  for (int j = 1; j <= params_.n; ++j) {
    const int size = scratch[static_cast<std::size_t>(j)];
    scratch[static_cast<std::size_t>(j)] = 0;
    if (size != sizes_[static_cast<std::size_t>(j)])
      throw std::logic_error("block size table diverged from recount");
    if (size > 0) {
      max_seen = j;
      if (size <= params_.delta) {
        deficit += static_cast<std::uint64_t>(params_.delta - size + 1);
        ++small;
      }
    }
  }
  if (max_seen != max_label_) throw std::logic_error("max label diverged from recount");
  if (deficit != deficit_) throw std::logic_error("deficit diverged from recount");
  if (small != small_block_count_)
    throw std::logic_error("small-block count diverged from recount");
  if ((deficit_ == 0) != (small_block_count_ == 0))
    throw std::logic_error("deficit and small-block count must vanish together");
}

bool SearchState::counters_consistent() const {
  std::vector<int> scratch;
  try {
    check_against_recount(scratch);
  } catch (const std::logic_error&) {
    return false;
  }
  return true;
}

void SearchState::reset() {
  std::fill(labels_.begin(), labels_.end(), 0);
  std::fill(sizes_.begin(), sizes_.end(), 0);
  prefix_ = 0;
  max_label_ = 0;
  deficit_ = 0;
  small_block_count_ = 0;
  stats_ = SearchStats{};
  beta_materializations_ = 0;
}

std::size_t SearchState::memory_footprint() const {
  return labels_.capacity() * sizeof(int) + sizes_.capacity() * sizeof(int);
}

}  // namespace deltapart
