#pragma once

#include <map>
#include <vector>

#include "ddaeconn/digraph.hpp"
#include "ddaeconn/matching.hpp"

namespace ddaeconn {

/// Directed graph over C_{F_j} ∪ {F_j}. Arc (i, l) stands for the alternating
/// path F_i - v - F_l where v is the group matched to F_l; the weight of the
/// arc is that group.
struct ConnectionGraph {
  EqId root = 0;
  Digraph graph;
  std::map<Arc, VariableGroup> weight;

  std::span<const NodeId> nodes() const { return graph.nodes(); }
  std::span<const Arc> arcs() const { return graph.arcs(); }
};

/// Throws InconsistentReport if the report names equations outside g, an
/// exposed equation that is matched, or unmatched members of reached_eqs.
ConnectionGraph build_connection_graph(const ShiftingGraph& g, const Matching& m,
                                       const ReachReport& report);

}  // namespace ddaeconn
