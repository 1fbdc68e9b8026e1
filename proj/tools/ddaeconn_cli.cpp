// Command-line front end: structural analysis, connection enumeration,
// arborescence tools and the scenario benchmark.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddaeconn/bench.hpp"
#include "ddaeconn/connections.hpp"
#include "ddaeconn/errors.hpp"
#include "ddaeconn/oracles.hpp"

namespace {

using namespace ddaeconn;
using nlohmann::ordered_json;

constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json group_json(const VariableGroup& v) { return {v.var, v.shift}; }

int cmd_analyze(const std::string& input, const std::string& format) {
  const DdaeStructure s = parse_ddae(read_file(input));
  const ShiftingGraph g = build_shifting_graph(s);
  const MatchingResult mr = compute_matching(g);

  if (format == "text") {
    std::cout << "equations: " << s.n_equations << ", variables: " << s.n_variables << '\n';
    std::cout << "shifting graph edges:\n";
    for (const auto& [i, v] : g.edges()) std::cout << "  F" << i << " - " << group_name(v) << '\n';
    std::cout << "matching:\n";
    for (const auto& [i, v] : mr.matching.pairs()) std::cout << "  F" << i << " <- " << group_name(v) << '\n';
    for (const ReachReport& r : mr.exposed) {
      std::cout << "exposed F" << r.exposed << ", reaches {";
      for (std::size_t k = 0; k < r.reached_eqs.size(); ++k) {
        std::cout << (k ? ", " : "") << 'F' << r.reached_eqs[k];
      }
      std::cout << "}\n";
    }
    return 0;
  }

  ordered_json eq_nodes = ordered_json::array();
  for (EqId i = 1; i <= g.n_equations(); ++i) eq_nodes.push_back(i);
  ordered_json group_nodes = ordered_json::array();
  for (const VariableGroup& v : g.groups()) group_nodes.push_back(group_json(v));
  ordered_json edges = ordered_json::array();
  for (const auto& [i, v] : g.edges()) edges.push_back({i, group_json(v)});

  ordered_json matchable = ordered_json::array();
  for (const VariableGroup& v : highest_shift_groups(g)) matchable.push_back(group_json(v));
  ordered_json matching = ordered_json::array();
  for (const auto& [i, v] : mr.matching.pairs()) matching.push_back({i, group_json(v)});
  ordered_json exposed = ordered_json::array();
  for (const ReachReport& r : mr.exposed) {
    const ConnectionGraph h = build_connection_graph(g, mr.matching, r);
    exposed.push_back({{"eq", r.exposed},
                       {"reach", r.reached_eqs},
                       {"connection_graph", ordered_json::parse(serialize_digraph(h.graph, h.root))}});
  }

  ordered_json doc;
  doc["shifting_graph"] = {{"eq_nodes", eq_nodes}, {"group_nodes", group_nodes}, {"edges", edges}};
  doc["matchable"] = matchable;
  doc["matching"] = matching;
  doc["exposed"] = exposed;
  std::cout << doc.dump() << '\n';
  return 0;
}

int cmd_connections(const std::string& input, EqId exposed, bool classify, bool verbose,
                    std::uint64_t limit, const std::string& format) {
  const DdaeStructure s = parse_ddae(read_file(input));
  const ShiftingGraph g = build_shifting_graph(s);
  const DdaeGraph gd = build_ddae_graph(s);
  const MatchingResult mr = compute_matching(g);
  if (exposed < 1 || exposed > g.n_equations()) {
    throw IndexOutOfRange("equation " + std::to_string(exposed) + " not in system");
  }

  const ReachReport reach = alternating_reach(g, mr.matching, exposed);
  const ConnectionGraph h = build_connection_graph(g, mr.matching, reach);
  if (!is_exposed(g, mr.matching, exposed)) throw NotExposed("F" + std::to_string(exposed) + " is not exposed");

  ArborescenceEnumerator enumerator(h.graph);
  EnumOptions options;
  options.limit = limit;
  enumerator.run(
      h.root,
      [&](const Arborescence& t) {
        const Connection c = tree_to_connection(t, h);
        std::optional<ConnectionClass> cls;
        if (classify) cls = classify_connection(c, gd);
        if (format == "text") {
          if (cls) std::cout << to_string(*cls) << ": ";
          std::cout << format_connection(c) << '\n';
          return;
        }
        if (!verbose) {
          std::cout << serialize_connection(c, cls) << '\n';
          return;
        }
        ordered_json line = ordered_json::parse(serialize_connection(c, cls));
        ordered_json witnesses = ordered_json::array();
        for (const TripleWitness& w : connection_witnesses(c, gd)) {
          if (w.shared) {
            witnesses.push_back({w.shared->var, w.shared->shift, w.shared->deriv});
          } else {
            witnesses.push_back(nullptr);
          }
        }
        line["witnesses"] = std::move(witnesses);
        std::cout << line.dump() << '\n';
      },
      options);
  return enumerator.completed() ? 0 : kExitLimit;
}

RootedDigraph load_graph(const std::string& path, std::optional<NodeId> root) {
  RootedDigraph g = parse_digraph(read_file(path));
  if (root) g.root = root;
  if (!g.root) throw InputError("no root given (use --root or a \"root\" field)");
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Find all connections of exposed equations in the shifting step of delay DAEs"};
  app.require_subcommand(1);

  std::string input, graph_path, format = "json", scenario, method = "grow", csv_path;
  EqId exposed = 0;
  std::optional<NodeId> root;
  std::uint64_t limit = 0;
  std::size_t cap = kBruteForceNodeCap;
  bool classify = false, verbose = false;
  int n_from = 0, n_to = 0;
  double time_limit = 600.0;

  auto* analyze = app.add_subcommand("analyze", "Shifting graph, matching and exposed equations");
  analyze->add_option("--input", input, "DDAE structure JSON")->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* connections = app.add_subcommand("connections", "All connections of an exposed equation");
  connections->add_option("--input", input, "DDAE structure JSON")->required();
  connections->add_option("--exposed", exposed, "Exposed equation index")->required();
  connections->add_flag("--classify", classify, "Mark each connection explicit or implicit");
  connections->add_flag("--verbose", verbose, "Include per-triple shared occurrences");
  connections->add_option("--limit", limit, "Stop after N connections (0 = no limit)");
  connections->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* arbs = app.add_subcommand("arborescences", "Enumerate spanning arborescences of a digraph");
  arbs->add_option("--graph", graph_path, "Digraph JSON")->required();
  arbs->add_option("--root", root);
  arbs->add_option("--limit", limit, "Stop after N trees (0 = no limit)");

  auto* count = app.add_subcommand("count", "Count arborescences with the matrix-tree determinant");
  count->add_option("--graph", graph_path, "Digraph JSON")->required();
  count->add_option("--root", root);

  auto* oracle = app.add_subcommand("oracle", "Brute-force arborescences over all arc subsets");
  oracle->add_option("--graph", graph_path, "Digraph JSON")->required();
  oracle->add_option("--root", root);
  oracle->add_option("--cap", cap, "Maximum node count");

  auto* bench = app.add_subcommand("bench", "Connection counts and timings for the test scenarios");
  bench->add_option("--scenario", scenario)->required()->check(CLI::IsMember({"banded", "triangular", "complete"}));
  bench->add_option("--from", n_from)->required();
  bench->add_option("--to", n_to)->required();
  bench->add_option("--method", method)->check(CLI::IsMember({"grow", "naive", "both"}));
  bench->add_option("--time-limit", time_limit, "Seconds per cell");
  bench->add_option("--csv", csv_path, "Write records as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(input, format);
    if (connections->parsed()) return cmd_connections(input, exposed, classify, verbose, limit, format);

    if (arbs->parsed()) {
      const RootedDigraph g = load_graph(graph_path, root);
      ArborescenceEnumerator enumerator(g.graph);
      EnumOptions options;
      options.limit = limit;
      enumerator.run(
          *g.root, [](const Arborescence& t) { std::cout << serialize_arborescence(t) << '\n'; }, options);
      return enumerator.completed() ? 0 : kExitLimit;
    }
    if (count->parsed()) {
      const RootedDigraph g = load_graph(graph_path, root);
      std::cout << count_arborescences(g.graph, *g.root) << '\n';
      return 0;
    }
    if (oracle->parsed()) {
      const RootedDigraph g = load_graph(graph_path, root);
      for (const Arborescence& t : brute_force_arborescences(g.graph, *g.root, cap)) {
        std::cout << serialize_arborescence(t) << '\n';
      }
      return 0;
    }
    if (bench->parsed()) {
      std::vector<BenchMethod> methods;
      if (method != "naive") methods.push_back(BenchMethod::Grow);
      if (method != "grow") methods.push_back(BenchMethod::Naive);
      const auto records = run_bench(*parse_scenario_kind(scenario), n_from, n_to, methods, time_limit);
      std::cout << std::left << std::setw(12) << "kind" << std::setw(5) << "n" << std::setw(7) << "method"
                << std::setw(12) << "N" << "time[s]\n";
      for (const BenchRecord& r : records) {
        std::ostringstream elapsed;
        elapsed << std::fixed << std::setprecision(3) << r.elapsed_s;
        std::cout << std::left << std::setw(12) << to_string(r.kind) << std::setw(5) << r.n << std::setw(7)
                  << to_string(r.method) << std::setw(12)
                  << (r.completed ? std::to_string(r.count) : ">=" + std::to_string(r.count))
                  << (r.completed ? elapsed.str() : ">" + elapsed.str()) << '\n';
      }
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw InputError("cannot write " + csv_path);
        write_bench_csv(out, records);
      }
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  }
  return 0;
}
