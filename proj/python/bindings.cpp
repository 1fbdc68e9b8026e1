#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "ddaeconn/bench.hpp"
#include "ddaeconn/connections.hpp"
#include "ddaeconn/errors.hpp"
#include "ddaeconn/oracles.hpp"

namespace py = pybind11;
using namespace ddaeconn;

namespace {

py::tuple group_tuple(const VariableGroup& g) { return py::make_tuple(g.var, g.shift); }

Digraph make_digraph(std::vector<NodeId> nodes, const std::vector<std::pair<NodeId, NodeId>>& arcs) {
  std::vector<Arc> as;
  as.reserve(arcs.size());
  for (const auto& [u, v] : arcs) as.push_back({u, v});
  return Digraph(std::move(nodes), std::move(as));
}

py::list arc_list(const std::vector<Arc>& arcs) {
  py::list out;
  for (const Arc& a : arcs) out.append(py::make_tuple(a.from, a.to));
  return out;
}

py::dict connection_dict(const Connection& c, std::optional<ConnectionClass> cls) {
  py::list triples;
  for (const Triple& t : c.triples) triples.append(py::make_tuple(t.from, group_tuple(t.group), t.to));
  py::dict d;
  d["triples"] = triples;
  if (cls) d["class"] = to_string(*cls);
  d["degenerate"] = c.degenerate();
  return d;
}

/// Parsed system together with its matching, kept so that repeated queries
/// do not redo the structural analysis.
class System {
 public:
  explicit System(const std::string& document)
      : structure_(parse_ddae(document)),
        graph_(build_shifting_graph(structure_)),
        ddae_graph_(build_ddae_graph(structure_)),
        result_(compute_matching(graph_)) {}

  int n_equations() const { return structure_.n_equations; }
  int n_variables() const { return structure_.n_variables; }
  std::string to_json() const { return serialize_ddae(structure_); }

  py::list matchable() const {
    py::list out;
    for (const VariableGroup& g : highest_shift_groups(graph_)) out.append(group_tuple(g));
    return out;
  }

  py::dict matching() const {
    py::dict out;
    for (const auto& [eq, g] : result_.matching.pairs()) out[py::int_(eq)] = group_tuple(g);
    return out;
  }

  std::vector<EqId> exposed() const {
    std::vector<EqId> out;
    for (const ReachReport& r : result_.exposed) out.push_back(r.exposed);
    return out;
  }

  py::dict reach(EqId j) const {
    const ReachReport r = alternating_reach(graph_, result_.matching, j);
    py::list groups;
    for (const VariableGroup& g : r.reached_groups) groups.append(group_tuple(g));
    py::dict d;
    d["exposed"] = r.exposed;
    d["equations"] = r.reached_eqs;
    d["groups"] = groups;
    return d;
  }

  py::dict connection_graph(EqId j) const {
    const ConnectionGraph h = build_connection_graph(graph_, result_.matching, alternating_reach(graph_, result_.matching, j));
    py::dict weights;
    for (const auto& [arc, g] : h.weight) weights[py::make_tuple(arc.from, arc.to)] = group_tuple(g);
    py::dict d;
    d["root"] = h.root;
    d["nodes"] = std::vector<NodeId>(h.graph.nodes().begin(), h.graph.nodes().end());
    d["arcs"] = arc_list({h.graph.arcs().begin(), h.graph.arcs().end()});
    d["weights"] = weights;
    return d;
  }

  py::list connections(EqId j, bool classify, std::uint64_t limit) const {
    std::vector<std::pair<Connection, std::optional<ConnectionClass>>> found;
    EnumOptions options;
    options.limit = limit;
    bool truncated = false;
    std::uint64_t seen = 0;
    // One extra tree is requested so that an exhausted limit can be told
    // apart from a result of exactly `limit` connections.
    if (limit > 0) options.limit = limit + 1;
    {
      py::gil_scoped_release release;
      find_all_connections(
          graph_, result_.matching, j,
          [&](const Connection& c) {
            if (limit > 0 && ++seen > limit) {
              truncated = true;
              return;
            }
            std::optional<ConnectionClass> cls;
            if (classify) cls = classify_connection(c, ddae_graph_);
            found.emplace_back(c, cls);
          },
          options);
    }
    if (truncated) throw LimitExceeded("more than " + std::to_string(limit) + " connections");
    py::list out;
    for (const auto& [c, cls] : found) out.append(connection_dict(c, cls));
    return out;
  }

 private:
  DdaeStructure structure_;
  ShiftingGraph graph_;
  DdaeGraph ddae_graph_;
  MatchingResult result_;
};

py::list trees_to_list(const std::vector<Arborescence>& trees) {
  py::list out;
  for (const Arborescence& t : trees) out.append(arc_list(t.arcs));
  return out;
}

}  // namespace

PYBIND11_MODULE(_ddaeconn, m) {
  m.doc() = "Structural connections of delay differential-algebraic systems";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());
  py::register_exception<LimitExceeded>(m, "LimitExceeded", error.ptr());

  py::class_<System>(m, "System", "A parsed system with its maximum matching of highest-shift groups.")
      .def(py::init<const std::string&>(), py::arg("document"), "Parse a JSON system document.")
      .def_property_readonly("n_equations", &System::n_equations)
      .def_property_readonly("n_variables", &System::n_variables)
      .def("to_json", &System::to_json)
      .def("matchable", &System::matchable, "Highest-shift groups as (var, shift) tuples.")
      .def("matching", &System::matching, "Equation -> (var, shift).")
      .def("exposed", &System::exposed, "Equations left unmatched.")
      .def("reach", &System::reach, py::arg("exposed"))
      .def("connection_graph", &System::connection_graph, py::arg("exposed"))
      .def("connections", &System::connections, py::arg("exposed"), py::arg("classify") = false,
           py::arg("limit") = 0,
           "All connections of an exposed equation. Raises LimitExceeded when more than `limit` exist.");

  m.def(
      "enumerate_arborescences",
      [](std::vector<NodeId> nodes, const std::vector<std::pair<NodeId, NodeId>>& arcs, NodeId root,
         std::uint64_t limit) {
        const Digraph g = make_digraph(std::move(nodes), arcs);
        std::vector<Arborescence> trees;
        EnumOptions options;
        options.limit = limit;
        {
          py::gil_scoped_release release;
          enumerate_arborescences(g, root, [&](const Arborescence& t) { trees.push_back(t); }, options);
        }
        return trees_to_list(trees);
      },
      py::arg("nodes"), py::arg("arcs"), py::arg("root"), py::arg("limit") = 0,
      "Spanning arborescences rooted at `root`, in emission order, each as a list of arcs.");

  m.def(
      "count_arborescences",
      [](std::vector<NodeId> nodes, const std::vector<std::pair<NodeId, NodeId>>& arcs, NodeId root) {
        return count_arborescences(make_digraph(std::move(nodes), arcs), root);
      },
      py::arg("nodes"), py::arg("arcs"), py::arg("root"), "Directed matrix-tree count.");

  m.def(
      "brute_force_arborescences",
      [](std::vector<NodeId> nodes, const std::vector<std::pair<NodeId, NodeId>>& arcs, NodeId root,
         std::size_t cap) {
        return trees_to_list(brute_force_arborescences(make_digraph(std::move(nodes), arcs), root, cap));
      },
      py::arg("nodes"), py::arg("arcs"), py::arg("root"), py::arg("cap") = kBruteForceNodeCap);

  m.def(
      "run_bench",
      [](const std::string& kind, int n_from, int n_to, const std::vector<std::string>& methods,
         double time_limit) {
        const auto k = parse_scenario_kind(kind);
        if (!k) throw InputError("unknown scenario '" + kind + "'");
        std::vector<BenchMethod> ms;
        for (const std::string& name : methods) {
          if (name == "grow") {
            ms.push_back(BenchMethod::Grow);
          } else if (name == "naive") {
            ms.push_back(BenchMethod::Naive);
          } else {
            throw InputError("unknown method '" + name + "'");
          }
        }
        std::vector<BenchRecord> records;
        {
          py::gil_scoped_release release;
          records = run_bench(*k, n_from, n_to, ms, time_limit);
        }
        py::list out;
        for (const BenchRecord& r : records) {
          py::dict d;
          d["kind"] = to_string(r.kind);
          d["n"] = r.n;
          d["method"] = to_string(r.method);
          d["count"] = r.count;
          d["elapsed_s"] = r.elapsed_s;
          d["completed"] = r.completed;
          out.append(d);
        }
        return out;
      },
      py::arg("kind"), py::arg("n_from"), py::arg("n_to"), py::arg("methods") = std::vector<std::string>{"grow"},
      py::arg("time_limit") = 600.0);
}
