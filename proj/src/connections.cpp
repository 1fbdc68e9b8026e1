#include "ddaeconn/connections.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ddaeconn/errors.hpp"

namespace ddaeconn {

Connection make_connection(std::vector<Triple> triples) {
  std::sort(triples.begin(), triples.end(), [](const Triple& a, const Triple& b) {
    return std::tie(a.to, a.from, a.group) < std::tie(b.to, b.from, b.group);
  });
  return Connection{std::move(triples)};
}

std::string to_string(ConnectionClass c) { return c == ConnectionClass::Explicit ? "explicit" : "implicit"; }

namespace {

void require_exposed(const ShiftingGraph& g, const Matching& m, EqId j) {
  if (j < 1 || j > g.n_equations()) throw IndexOutOfRange("equation " + std::to_string(j) + " not in graph");
  if (m.is_matched(j)) throw NotExposed("F" + std::to_string(j) + " is matched");
  if (!is_exposed(g, m, j)) {
    throw NotExposed("F" + std::to_string(j) + " has an augmenting path and is not exposed");
  }
}

}  // namespace

Connection tree_to_connection(const Arborescence& t, const ConnectionGraph& h) {
  std::vector<Triple> triples;
  triples.reserve(t.arcs.size());
  for (const Arc& a : t.arcs) {
    auto it = h.weight.find(a);
    if (it == h.weight.end()) {
      throw ArcNotInGraph("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                          ") is not in the connection graph");
    }
    triples.push_back({a.from, it->second, a.to});
  }
  return make_connection(std::move(triples));
}

std::uint64_t find_all_connections(const ShiftingGraph& g, const Matching& m, EqId j,
                                   const ConnectionVisitor& visit, const EnumOptions& options) {
  require_exposed(g, m, j);
  const ReachReport reach = alternating_reach(g, m, j);
  const ConnectionGraph h = build_connection_graph(g, m, reach);
  return enumerate_arborescences(
      h.graph, h.root, [&](const Arborescence& t) { visit(tree_to_connection(t, h)); }, options);
}

std::vector<Connection> find_all_connections(const ShiftingGraph& g, const Matching& m, EqId j) {
  std::vector<Connection> out;
  find_all_connections(g, m, j, [&](const Connection& c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_connection(const Connection& c, const ShiftingGraph& g, const Matching& m, EqId j,
                       const ReachReport& reach) {
  if (reach.exposed != j || m.is_matched(j)) return false;
  const std::set<EqId> reached(reach.reached_eqs.begin(), reach.reached_eqs.end());
  if (reached.contains(j)) return false;
  if (c.triples.empty()) return reached.empty();
  if (c.triples.size() != reached.size()) return false;

  std::set<EqId> heads;
  bool anchored = false;
  for (const Triple& t : c.triples) {
    if (!reached.contains(t.to) || !heads.insert(t.to).second) return false;
    if (m.group_of(t.to) != t.group) return false;
    if (!g.has_edge(t.from, t.group) || m.group_of(t.from) == t.group) return false;
    if (t.from != j && !reached.contains(t.from)) return false;
    anchored = anchored || t.from == j;
  }
  if (!anchored) return false;

  // Every head must hang off j; with one in-arc per head this also rules out
  // cycles.
  std::set<EqId> seen{j};
  std::deque<EqId> queue{j};
  while (!queue.empty()) {
    const EqId u = queue.front();
    queue.pop_front();
    for (const Triple& t : c.triples) {
      if (t.from == u && seen.insert(t.to).second) queue.push_back(t.to);
    }
  }
  return seen.size() == reached.size() + 1;
}

std::vector<TripleWitness> connection_witnesses(const Connection& c, const DdaeGraph& gd) {
  std::vector<TripleWitness> out;
  out.reserve(c.triples.size());
  for (const Triple& t : c.triples) {
    TripleWitness w{t, std::nullopt};
    if (t.from >= 1 && t.from <= gd.n_equations() && t.to >= 1 && t.to <= gd.n_equations()) {
      for (const VarOccurrence& o : gd.neighbors(t.from)) {
        if (o.var == t.group.var && o.shift == t.group.shift && gd.has_edge(t.to, o)) {
          w.shared = o;
          break;
        }
      }
    }
    out.push_back(w);
  }
  return out;
}

ConnectionClass classify_connection(const Connection& c, const DdaeGraph& gd) {
  const auto witnesses = connection_witnesses(c, gd);
  const bool all_shared = std::all_of(witnesses.begin(), witnesses.end(),
                                      [](const TripleWitness& w) { return w.shared.has_value(); });
  return all_shared ? ConnectionClass::Explicit : ConnectionClass::Implicit;
}

std::string serialize_connection(const Connection& c, std::optional<ConnectionClass> cls) {
  nlohmann::ordered_json triples = nlohmann::ordered_json::array();
  for (const Triple& t : c.triples) {
    triples.push_back({t.from, {t.group.var, t.group.shift}, t.to});
  }
  nlohmann::ordered_json doc;
  doc["triples"] = std::move(triples);
  if (cls) doc["class"] = to_string(*cls);
  if (c.degenerate()) doc["degenerate"] = true;
  return doc.dump();
}

std::string format_connection(const Connection& c) {
  if (c.triples.empty()) return "(empty)";
  std::ostringstream out;
  for (std::size_t k = 0; k < c.triples.size(); ++k) {
    const Triple& t = c.triples[k];
    if (k > 0) out << ", ";
    out << 'F' << t.from << " -[" << group_name(t.group) << "]-> F" << t.to;
  }
  return out.str();
}

}  // namespace ddaeconn
