#include "ddaeconn/connection_graph.hpp"

#include <algorithm>

#include "ddaeconn/errors.hpp"

namespace ddaeconn {

ConnectionGraph build_connection_graph(const ShiftingGraph& g, const Matching& m,
                                       const ReachReport& report) {
  const EqId j = report.exposed;
  auto in_range = [&](EqId e) { return e >= 1 && e <= g.n_equations(); };
  if (!in_range(j)) throw InconsistentReport("exposed equation F" + std::to_string(j) + " not in graph");
  if (m.is_matched(j)) throw InconsistentReport("exposed equation F" + std::to_string(j) + " is matched");

  std::vector<NodeId> nodes{j};
  for (EqId e : report.reached_eqs) {
    if (!in_range(e)) throw InconsistentReport("reached equation F" + std::to_string(e) + " not in graph");
    if (e == j) throw InconsistentReport("exposed equation listed as reached");
    if (!m.is_matched(e)) throw InconsistentReport("reached equation F" + std::to_string(e) + " is unmatched");
    nodes.push_back(e);
  }
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw InconsistentReport("reached equations contain duplicates");
  }

  ConnectionGraph h;
  h.root = j;
  std::vector<Arc> arcs;
  for (EqId head : report.reached_eqs) {
    const VariableGroup v = *m.group_of(head);
    for (EqId tail : g.equations_of(v)) {
      if (tail == head) continue;  // {F_head, v} is the matching edge itself
      if (!std::binary_search(nodes.begin(), nodes.end(), tail)) continue;
      arcs.push_back({tail, head});
      h.weight.emplace(Arc{tail, head}, v);
    }
  }
  h.graph = Digraph(std::move(nodes), std::move(arcs));
  return h;
}

}  // namespace ddaeconn
