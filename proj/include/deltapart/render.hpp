#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "deltapart/types.hpp"

namespace deltapart {

enum class Format { Rgs, Blocks, Jsonl };

// "1 2 2 1": the restricted-growth string, space separated.
std::string render_rgs(PartitionView view);

// "{1,4}{2,3}": blocks by ascending label, elements ascending inside.
// Elements are 1-based.
std::string render_blocks(PartitionView view);

// {"rgs":[1,2,2,1]}, one JSON object per partition for machine consumers.
std::string render_jsonl(PartitionView view);

std::string render(Format format, PartitionView view);

// Inverses of the two human-readable forms. Validation errors throw
// std::invalid_argument; both insist on canonical restricted-growth input.
std::vector<int> parse_rgs(const std::string& line);
std::vector<int> parse_blocks(const std::string& line);

// Single JSON object with fixed keys: n, delta, nodes, prunes_deficit,
// forced_branches, solutions, elapsed_ns.
std::string render_stats(const SearchStats& stats, const Params& params,
                         std::chrono::nanoseconds elapsed);

}  // namespace deltapart
