#include "deltapart/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace deltapart {

namespace {

void validate_rgs(const std::vector<int>& labels) {
  if (labels.empty()) throw std::invalid_argument("empty partition");
  int max_label = 0;
  for (const int label : labels) {
    if (label < 1 || label > max_label + 1)
      throw std::invalid_argument("not a restricted-growth string");
    max_label = std::max(max_label, label);
  }
}

}  // namespace

std::string render_rgs(PartitionView view) {
  std::string out;
  out.reserve(view.size() * 2);
  for (std::size_t i = 0; i < view.size(); ++i) {
    if (i) out.push_back(' ');
    out.append(std::to_string(view[i]));
  }
  return out;
}

std::string render_blocks(PartitionView view) {
  int max_label = 0;
  for (const int label : view) max_label = std::max(max_label, label);
  std::string out;
  for (int j = 1; j <= max_label; ++j) {
    out.push_back('{');
    bool first = true;
    for (std::size_t i = 0; i < view.size(); ++i) {
      if (view[i] != j) continue;
      if (!first) out.push_back(',');
      out.append(std::to_string(i + 1));
      first = false;
    }
    out.push_back('}');
  }
  return out;
}

std::string render_jsonl(PartitionView view) {
  std::string out = "{\"rgs\":[";
  for (std::size_t i = 0; i < view.size(); ++i) {
    if (i) out.push_back(',');
    out.append(std::to_string(view[i]));
  }
  out.append("]}");
  return out;
}

std::string render(Format format, PartitionView view) {
  switch (format) {
    case Format::Rgs:
      return render_rgs(view);
    case Format::Blocks:
      return render_blocks(view);
    case Format::Jsonl:
      return render_jsonl(view);
  }
  throw std::logic_error("unknown format");
}

std::vector<int> parse_rgs(const std::string& line) {
  std::vector<int> labels;
  std::istringstream in(line);
  int value;
  while (in >> value) labels.push_back(value);
  if (!in.eof()) throw std::invalid_argument("malformed label list");
  validate_rgs(labels);
  return labels;
}

std::vector<int> parse_blocks(const std::string& line) {
  std::vector<std::vector<int>> blocks;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] != '{') throw std::invalid_argument("expected '{'");
    const std::size_t close = line.find('}', pos);
    if (close == std::string::npos) throw std::invalid_argument("unterminated block");
    std::vector<int> elements;
    std::string chunk;
    std::istringstream in(line.substr(pos + 1, close - pos - 1));
    while (std::getline(in, chunk, ',')) {
      std::size_t used = 0;
      const int element = std::stoi(chunk, &used);
      if (used != chunk.size()) throw std::invalid_argument("malformed element");
      elements.push_back(element);
    }
    if (elements.empty()) throw std::invalid_argument("empty block");
    blocks.push_back(std::move(elements));
    pos = close + 1;
  }
  std::size_t total = 0;
  for (const auto& block : blocks) total += block.size();
  std::vector<int> labels(total, 0);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    for (const int element : blocks[j]) {
      if (element < 1 || static_cast<std::size_t>(element) > total)
        throw std::invalid_argument("element out of range");
      if (labels[static_cast<std::size_t>(element) - 1] != 0)
        throw std::invalid_argument("duplicate element");
      labels[static_cast<std::size_t>(element) - 1] = static_cast<int>(j) + 1;
    }
  }
  validate_rgs(labels);
  return labels;
}

std::string render_stats(const SearchStats& stats, const Params& params,
                         std::chrono::nanoseconds elapsed) {
  nlohmann::ordered_json record;
  record["n"] = params.n;
  record["delta"] = params.delta;
  record["nodes"] = stats.nodes;
  record["prunes_deficit"] = stats.prunes_deficit;
  record["forced_branches"] = stats.forced_branches;
  record["solutions"] = stats.solutions;
  record["elapsed_ns"] = elapsed.count();
  return record.dump();
}

}  // namespace deltapart
