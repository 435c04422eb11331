#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <vector>

#include "deltapart/biguint.hpp"
#include "deltapart/enumerate.hpp"
#include "deltapart/oracle.hpp"
#include "deltapart/render.hpp"
#include "deltapart/search_state.hpp"

namespace py = pybind11;

namespace {

using deltapart::BigUint;
using deltapart::Params;
using deltapart::PartitionView;
using deltapart::PruneResult;
using deltapart::SearchState;
using deltapart::SearchStats;

py::object to_py_int(const BigUint& value) {
  const std::string digits = value.to_string();
  PyObject* raw = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!raw) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(raw);
}

std::vector<int> to_labels(PartitionView view) { return {view.begin(), view.end()}; }

// None or a truthy value keeps the stream going; False stops it.
deltapart::PartitionVisitor wrap_callback(const py::function& callback) {
  return [callback](PartitionView view) -> bool {
    py::object result = callback(to_labels(view));
    if (result.is_none()) return true;
    return py::cast<bool>(result);
  };
}

void check_assignable(const SearchState& state, int label) {
  if (state.assigned_prefix() >= state.n())
    throw std::invalid_argument("every element is already assigned");
  if (label < 1 || label > state.max_label() + 1)
    throw std::invalid_argument("label must be in 1..max_label+1 (restricted growth)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Enumerate and count set partitions whose blocks all have more than "
            "delta elements, with a pruned backtracking search plus a naive "
            "generate-and-test oracle.";

  py::class_<SearchStats>(m, "SearchStats")
      .def(py::init<>())
      .def_readonly("nodes", &SearchStats::nodes)
      .def_readonly("prunes_deficit", &SearchStats::prunes_deficit)
      .def_readonly("forced_branches", &SearchStats::forced_branches)
      .def_readonly("solutions", &SearchStats::solutions)
      .def("__repr__", [](const SearchStats& stats) {
        return "SearchStats(nodes=" + std::to_string(stats.nodes) +
               ", prunes_deficit=" + std::to_string(stats.prunes_deficit) +
               ", forced_branches=" + std::to_string(stats.forced_branches) +
               ", solutions=" + std::to_string(stats.solutions) + ")";
      });

  py::enum_<PruneResult>(m, "PruneResult")
      .value("CONTINUE", PruneResult::Continue)
      .value("PRUNE", PruneResult::Prune)
      .value("FORCED", PruneResult::Forced);

  py::class_<SearchState>(m, "SearchState")
      .def(py::init([](int n, int delta) { return SearchState(Params{.n = n, .delta = delta}); }),
           py::arg("n"), py::arg("delta"))
      .def_property_readonly("n", &SearchState::n)
      .def_property_readonly("delta", &SearchState::delta)
      .def_property_readonly("assigned_prefix", &SearchState::assigned_prefix)
      .def_property_readonly("max_label", &SearchState::max_label)
      .def_property_readonly("deficit", &SearchState::deficit)
      .def_property_readonly("small_block_count", &SearchState::small_block_count)
      .def_property_readonly("labels",
                             [](const SearchState& state) { return to_labels(state.labels()); })
      .def_property_readonly("stats", &SearchState::stats,
                             py::return_value_policy::copy)
      .def("assign",
           [](SearchState& state, int label) {
             check_assignable(state, label);
             state.assign(label);
           },
           py::arg("label"))
      .def("unassign",
           [](SearchState& state) {
             if (state.assigned_prefix() == 0)
               throw std::invalid_argument("nothing is assigned");
             state.unassign();
           })
      .def("small_blocks", &SearchState::small_blocks)
      .def("prune_check", [](const SearchState& state) {
        const auto decision = state.prune_check();
        return py::make_tuple(decision.kind, decision.forced_blocks);
      });

  m.def(
      "enumerate_partitions",
      [](int n, int delta, const py::function& callback) {
        return deltapart::enumerate(Params{.n = n, .delta = delta}, wrap_callback(callback));
      },
      py::arg("n"), py::arg("delta"), py::arg("callback"),
      "Invoke callback(labels) once per partition, in lexicographic order of "
      "the restricted-growth strings. Return False from the callback to stop.");

  m.def(
      "partitions",
      [](int n, int delta, std::optional<std::uint64_t> limit) {
        std::vector<std::vector<int>> out;
        if (limit && *limit == 0) {
          deltapart::validate(Params{.n = n, .delta = delta});
          return out;
        }
        deltapart::enumerate(Params{.n = n, .delta = delta}, [&](PartitionView view) {
          out.push_back(to_labels(view));
          return !(limit && out.size() >= *limit);
        });
        return out;
      },
      py::arg("n"), py::arg("delta"), py::arg("limit") = py::none(),
      "Collect the qualifying partitions as lists of block labels.");

  m.def(
      "count",
      [](int n, int delta) { return to_py_int(deltapart::count(Params{.n = n, .delta = delta})); },
      py::arg("n"), py::arg("delta"), "Exact number of qualifying partitions.");

  m.def(
      "bell_number", [](int n) { return to_py_int(deltapart::oracle::bell_number(n)); },
      py::arg("n"), "Bell number via the triangle recurrence.");

  m.def(
      "all_partitions",
      [](int n) {
        std::vector<std::vector<int>> out;
        deltapart::oracle::all_partitions(n, [&](PartitionView view) {
          out.push_back(to_labels(view));
          return true;
        });
        return out;
      },
      py::arg("n"), "Every set partition of {1..n} as restricted-growth strings.");

  m.def(
      "naive_delta_partitions",
      [](int n, int delta) {
        auto result = deltapart::oracle::naive_delta_partitions(n, delta);
        return py::make_tuple(std::move(result.partitions), result.stats);
      },
      py::arg("n"), py::arg("delta"),
      "Generate-and-test oracle: (partitions, stats) with nodes counting the "
      "full unpruned generation.");

  m.def("render_rgs",
        [](const std::vector<int>& labels) { return deltapart::render_rgs(labels); },
        py::arg("labels"));
  m.def("render_blocks",
        [](const std::vector<int>& labels) { return deltapart::render_blocks(labels); },
        py::arg("labels"));
  m.def("parse_rgs", &deltapart::parse_rgs, py::arg("line"));
  m.def("parse_blocks", &deltapart::parse_blocks, py::arg("line"));
}
