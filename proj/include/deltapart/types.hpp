#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>

namespace deltapart {

// Problem instance: partitions of {1..n} in which every block has more
// than `delta` elements (equivalently, minimum block size delta + 1).
// delta >= n is legal and yields zero results.
struct Params {
  int n = 0;
  int delta = 0;
};

inline void validate(const Params& params) {
  if (params.n < 1) throw std::invalid_argument("n must be at least 1");
  if (params.delta < 0) throw std::invalid_argument("delta must be non-negative");
}

// Instrumentation counters for one traversal. All monotone within a run.
struct SearchStats {
  std::uint64_t nodes = 0;            // element-assignment events
  std::uint64_t prunes_deficit = 0;   // subtrees abandoned by the deficit rule
  std::uint64_t forced_branches = 0;  // nodes whose children were restricted to small blocks
  std::uint64_t solutions = 0;        // partitions reported
};

// Read-only snapshot of a completed partition in restricted-growth form,
// valid only for the duration of the visitor call. Copy to persist.
using PartitionView = std::span<const int>;

// Return false to stop the enumeration early.
using PartitionVisitor = std::function<bool(PartitionView)>;

}  // namespace deltapart
