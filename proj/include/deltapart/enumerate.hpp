#pragma once

#include "deltapart/biguint.hpp"
#include "deltapart/search_state.hpp"
#include "deltapart/types.hpp"

namespace deltapart {

// Streaming depth-first enumerator over restricted-growth strings with the
// deficit-prune and forced-branch rules. Iterative with an explicit frame
// stack, so instances like n = 100000, delta = n-1 run without touching
// platform recursion limits.
//
// Solutions are visited in strictly increasing lexicographic order of their
// restricted-growth strings. The view handed to the visitor dies with the
// callback; copy to keep it. A visitor returning false stops the run after
// state cleanup; visitor exceptions propagate likewise.
class Enumerator {
 public:
  explicit Enumerator(Params params);

  // Runs a full traversal from scratch and returns its stats.
  SearchStats run(const PartitionVisitor& visit);

  // Same traversal, but recounts every incremental counter from the raw
  // labels at every node and throws std::logic_error on any divergence.
  SearchStats run_checked(const PartitionVisitor& visit);

  const SearchState& state() const { return state_; }

  // Bytes in the label-indexed arrays plus the frame stack. Stays put
  // after construction: the traversal allocates nothing per node.
  std::size_t memory_footprint() const;
  std::size_t frame_capacity() const { return frames_.capacity(); }

 private:
  struct Frame {
    int next;     // full: next label to try; forced: last label tried
    int limit;    // full: highest admissible label; unused when forced
    bool forced;  // restrict children to small blocks
  };

  SearchStats run_impl(const PartitionVisitor& visit, bool checked);
  bool try_advance();
  void unwind();

  SearchState state_;
  std::vector<Frame> frames_;
};

// One-shot conveniences over Enumerator.
SearchStats enumerate(const Params& params, const PartitionVisitor& visit);
SearchStats enumerate_checked(const Params& params, const PartitionVisitor& visit);

// Exact number of partitions of {1..n} with min block size delta+1; same
// traversal as enumerate with a counter in place of the visitor.
BigUint count(const Params& params);

}  // namespace deltapart
