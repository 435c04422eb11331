#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltapart/biguint.hpp"
#include "deltapart/types.hpp"

namespace deltapart::oracle {

// Brute-force reference implementations. Nothing here shares search or
// bookkeeping code with the pruned enumerator; this module exists so the
// fast path has something independent to be checked against, and so the
// benchmark harness has a generate-and-test baseline.

// Emits every restricted-growth string of length n in lexicographic order
// (every set partition of {1..n} exactly once). stats.nodes counts one per
// element assignment, matching the pruned enumerator's accounting.
SearchStats all_partitions(int n, const PartitionVisitor& visit);

// Generate-and-test: runs all_partitions and forwards only the strings
// whose every block is larger than delta. The block-size test is a fresh
// recount over the completed string. stats.nodes still reflects the full
// generation; stats.solutions counts only the survivors.
SearchStats naive_scan(int n, int delta, const PartitionVisitor& visit);

struct OracleResult {
  std::vector<std::vector<int>> partitions;  // lexicographically sorted
  SearchStats stats;
};

OracleResult naive_delta_partitions(int n, int delta);

// Bell number via the Bell-triangle recurrence; independent of both
// enumerators. bell_number(0) == 1.
BigUint bell_number(int n);

// First position where two ordered partition lists disagree, if any.
struct Mismatch {
  std::size_t index;         // position in the ordered sequences
  std::string expected;      // oracle-side string ("<end>" when exhausted)
  std::string actual;        // candidate-side string ("<end>" when exhausted)
};

std::optional<Mismatch> first_mismatch(const std::vector<std::vector<int>>& expected,
                                       const std::vector<std::vector<int>>& actual);

}  // namespace deltapart::oracle
