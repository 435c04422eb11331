// deltapart: enumerate and count set partitions whose blocks all have more
// than delta elements. Subcommands: enum, count, verify, bench.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <chrono>
#include <csignal>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deltapart/enumerate.hpp"
#include "deltapart/oracle.hpp"
#include "deltapart/render.hpp"

namespace {

using deltapart::Params;
using deltapart::PartitionView;
using Clock = std::chrono::steady_clock;

constexpr int kUsageError = 2;

struct Range {
  int lo = 0;
  int hi = 0;
};

// "7" or "3..9".
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  std::size_t used = 0;
  Range range;
  if (dots == std::string::npos) {
    range.lo = range.hi = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad range: " + text);
  } else {
    range.lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("bad range: " + text);
    const std::string tail = text.substr(dots + 2);
    range.hi = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("bad range: " + text);
  }
  if (range.lo > range.hi) throw std::invalid_argument("empty range: " + text);
  return range;
}

void warn_if_delta_too_large(const Params& params) {
  if (params.delta >= params.n) {
    std::cerr << "warning: delta (" << params.delta << ") >= n (" << params.n
              << "); no partition can have a block that large, output is empty\n";
  }
}

bool write_line(const std::string& line) {
  if (std::fputs(line.c_str(), stdout) == EOF) return false;
  return std::fputc('\n', stdout) != EOF;
}

int cmd_enum(const Params& params, deltapart::Format format,
             std::optional<std::uint64_t> limit, bool with_stats, bool quiet) {
  warn_if_delta_too_large(params);
  std::uint64_t emitted = 0;
  const auto started = Clock::now();
  const auto stats = deltapart::enumerate(params, [&](PartitionView view) {
    if (limit && emitted >= *limit) return false;
    if (!quiet && !write_line(deltapart::render(format, view))) return false;
    ++emitted;
    return !(limit && emitted >= *limit);
  });
  const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - started);
  std::fflush(stdout);
  if (with_stats) std::cerr << deltapart::render_stats(stats, params, elapsed) << "\n";
  return 0;
}

int cmd_count(const Params& params) {
  warn_if_delta_too_large(params);
  std::cout << deltapart::count(params).to_string() << "\n";
  return 0;
}

int cmd_verify(int max_n) {
  bool all_pass = true;
  bool detailed = false;
  for (int n = 1; n <= max_n; ++n) {
    for (int delta = 0; delta < n; ++delta) {
      std::vector<std::vector<int>> smart;
      deltapart::enumerate({.n = n, .delta = delta}, [&](PartitionView view) {
        smart.emplace_back(view.begin(), view.end());
        return true;
      });
      const auto naive = deltapart::oracle::naive_delta_partitions(n, delta);
      const auto diff = deltapart::oracle::first_mismatch(naive.partitions, smart);
      if (!diff) {
        std::cout << "PASS n=" << n << " delta=" << delta << " partitions=" << smart.size()
                  << "\n";
        continue;
      }
      all_pass = false;
      std::cout << "FAIL n=" << n << " delta=" << delta << "\n";
      if (!detailed) {
        std::cerr << "mismatch at n=" << n << " delta=" << delta << " index=" << diff->index
                  << ": naive='" << diff->expected << "' smart='" << diff->actual << "'\n";
        detailed = true;
      }
    }
  }
  return all_pass ? 0 : 1;
}

struct BenchTimes {
  std::uint64_t best_ns = 0;
  deltapart::SearchStats stats;
};

template <typename RunFn>
BenchTimes time_best_of(int repetitions, RunFn&& run) {
  BenchTimes result;
  for (int rep = 0; rep < repetitions; ++rep) {
    const auto started = Clock::now();
    result.stats = run();
    const auto ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - started).count());
    if (rep == 0 || ns < result.best_ns) result.best_ns = ns;
  }
  return result;
}

// Exact node count of the naive generator: one assignment per
// restricted-growth prefix, so sum of B_i for i = 1..n.
deltapart::BigUint naive_node_estimate(int n) {
  deltapart::BigUint total;
  for (int i = 1; i <= n; ++i) total += deltapart::oracle::bell_number(i);
  return total;
}

int cmd_bench(const std::string& n_spec, const std::string& delta_spec, int repetitions,
              std::uint64_t node_budget) {
  const Range n_range = parse_range(n_spec);
  if (n_range.lo < 1) throw std::invalid_argument("n must be at least 1");
  std::cout << "n,delta,smart_nodes,smart_ns,naive_nodes,naive_ns,solutions\n";
  bool counts_agree = true;
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    const Range delta_range =
        delta_spec == "n-1" ? Range{n - 1, n - 1} : parse_range(delta_spec);
    for (int delta = delta_range.lo; delta <= delta_range.hi; ++delta) {
      const Params params{.n = n, .delta = delta};
      const auto smart = time_best_of(repetitions, [&] {
        return deltapart::enumerate(params, [](PartitionView) { return true; });
      });
      std::cout << n << "," << delta << "," << smart.stats.nodes << "," << smart.best_ns << ",";
      const auto naive_nodes = naive_node_estimate(n);
      if (!naive_nodes.fits_u64() || naive_nodes.to_u64() > node_budget) {
        std::cout << "skipped,skipped," << smart.stats.solutions << "\n";
        continue;
      }
      const auto naive = time_best_of(repetitions, [&] {
        return deltapart::oracle::naive_scan(n, delta, [](PartitionView) { return true; });
      });
      std::cout << naive.stats.nodes << "," << naive.best_ns << "," << smart.stats.solutions
                << "\n";
      if (naive.stats.solutions != smart.stats.solutions) {
        counts_agree = false;
        std::cerr << "solution count mismatch at n=" << n << " delta=" << delta
                  << ": smart=" << smart.stats.solutions << " naive=" << naive.stats.solutions
                  << "\n";
      }
    }
  }
  return counts_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGPIPE, SIG_IGN);  // surface broken pipes as write errors

  CLI::App app{
      "deltapart: stream or count the set partitions of {1..n} in which every "
      "block has more than delta elements (minimum block size delta+1).\n"
      "delta is expected to be below n; larger values are accepted with a "
      "warning and yield empty output."};
  app.require_subcommand(1);

  int n = 0;
  int delta = 0;
  std::string format_name = "rgs";
  std::optional<std::uint64_t> limit;
  bool with_stats = false;
  bool quiet = false;

  auto* enum_cmd = app.add_subcommand("enum", "Stream every qualifying partition to stdout");
  enum_cmd->add_option("--n", n, "Number of elements")->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("--delta", delta, "Minimum block size minus one")
      ->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"rgs", "blocks", "jsonl"}));
  enum_cmd->add_option("--limit", limit, "Stop after this many partitions");
  enum_cmd->add_flag("--stats", with_stats, "Emit a JSON stats record to stderr");
  enum_cmd->add_flag("--quiet", quiet, "Run the traversal without printing partitions");

  auto* count_cmd = app.add_subcommand("count", "Print the exact number of partitions");
  count_cmd->add_option("--n", n, "Number of elements")->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--delta", delta, "Minimum block size minus one")
      ->check(CLI::NonNegativeNumber);

  int max_n = 9;
  auto* verify_cmd =
      app.add_subcommand("verify", "Compare the pruned enumerator against the naive oracle");
  verify_cmd->add_option("--max-n", max_n, "Largest n to verify")->check(CLI::PositiveNumber);

  std::string bench_n = "1..10";
  std::string bench_delta = "n-1";
  int repetitions = 3;
  std::uint64_t node_budget = 100'000'000;
  auto* bench_cmd = app.add_subcommand("bench", "CSV timing grid: pruned vs generate-and-test");
  bench_cmd->add_option("--n", bench_n, "n or range, e.g. 12 or 1..20");
  bench_cmd->add_option("--delta", bench_delta, "delta, range, or the literal n-1");
  bench_cmd->add_option("--reps", repetitions, "Repetitions per cell (minimum time wins)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--node-budget", node_budget,
                        "Skip the naive side of cells whose full tree exceeds this many nodes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kUsageError;
  }

  try {
    if (*enum_cmd) {
      deltapart::Format format = deltapart::Format::Rgs;
      if (format_name == "blocks") format = deltapart::Format::Blocks;
      if (format_name == "jsonl") format = deltapart::Format::Jsonl;
      return cmd_enum({.n = n, .delta = delta}, format, limit, with_stats, quiet);
    }
    if (*count_cmd) return cmd_count({.n = n, .delta = delta});
    if (*verify_cmd) return cmd_verify(max_n);
    return cmd_bench(bench_n, bench_delta, repetitions, node_budget);
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kUsageError;
  }
}
