#include "deltapart/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace deltapart::oracle {

namespace {

struct RgsGenerator {
  int n;
  const PartitionVisitor& visit;
  std::vector<int> labels;
  SearchStats stats;

  explicit RgsGenerator(int n, const PartitionVisitor& visit)
      : n(n), visit(visit), labels(static_cast<std::size_t>(n), 0) {}

  // Assigns element i every label in 1..max_used+1, ascending.
  bool descend(int i, int max_used) {
    for (int k = 1; k <= max_used + 1; ++k) {
      labels[static_cast<std::size_t>(i) - 1] = k;
      ++stats.nodes;
      if (i == n) {
        ++stats.solutions;
        if (!visit(labels)) return false;
      } else if (!descend(i + 1, std::max(max_used, k))) {
        return false;
      }
    }
    return true;
  }
};

std::string to_string(PartitionView rgs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    if (i) out << ' ';
    out << rgs[i];
  }
  return out.str();
}

}  // namespace

SearchStats all_partitions(int n, const PartitionVisitor& visit) {
  validate({.n = n, .delta = 0});
  RgsGenerator gen(n, visit);
  gen.descend(1, 0);
  return gen.stats;
}

SearchStats naive_scan(int n, int delta, const PartitionVisitor& visit) {
  validate({.n = n, .delta = delta});
  std::vector<int> block_sizes(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t survivors = 0;
  SearchStats stats = all_partitions(n, [&](PartitionView rgs) {
    int max_label = 0;
    for (const int label : rgs) {
      ++block_sizes[static_cast<std::size_t>(label)];
      max_label = std::max(max_label, label);
    }
    int min_size = n;
    for (int j = 1; j <= max_label; ++j) {
      min_size = std::min(min_size, block_sizes[static_cast<std::size_t>(j)]);
      block_sizes[static_cast<std::size_t>(j)] = 0;
    }
    if (min_size > delta) {
      ++survivors;
      return visit(rgs);
    }
    return true;
  });
  stats.solutions = survivors;
  return stats;
}

OracleResult naive_delta_partitions(int n, int delta) {
  OracleResult result;
  result.stats = naive_scan(n, delta, [&](PartitionView rgs) {
    result.partitions.emplace_back(rgs.begin(), rgs.end());
    return true;
  });
  return result;
}

BigUint bell_number(int n) {
  if (n < 0) throw std::invalid_argument("bell_number: n must be non-negative");
  // Triangle rows: row[0] of row k equals B_k.
  std::vector<BigUint> row{BigUint(1)};
  for (int k = 0; k < n; ++k) {
    std::vector<BigUint> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const BigUint& entry : row) next.push_back(next.back() + entry);
    row = std::move(next);
  }
  return row.front();
}

std::optional<Mismatch> first_mismatch(const std::vector<std::vector<int>>& expected,
                                       const std::vector<std::vector<int>>& actual) {
  const std::size_t common = std::min(expected.size(), actual.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (expected[i] != actual[i])
      return Mismatch{i, to_string(expected[i]), to_string(actual[i])};
  }
  if (expected.size() != actual.size()) {
    const bool expected_longer = expected.size() > actual.size();
    return Mismatch{common, expected_longer ? to_string(expected[common]) : "<end>",
                    expected_longer ? "<end>" : to_string(actual[common])};
  }
  return std::nullopt;
}

}  // namespace deltapart::oracle
