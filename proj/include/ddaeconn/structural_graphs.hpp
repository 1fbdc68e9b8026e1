#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ddaeconn/ddae_structure.hpp"

namespace ddaeconn {

/// All derivative orders of variable `var` at shift `shift`, collapsed into
/// one node of the shifting graph.
struct VariableGroup {
  int var = 1;
  int shift = 0;

  friend auto operator<=>(const VariableGroup&, const VariableGroup&) = default;
};

std::string group_name(const VariableGroup& g);

using GroupEdge = std::pair<EqId, VariableGroup>;

/// Bipartite graph between equations 1..n and variable groups.
///
/// Group nodes exist iff some edge touches them. Equations without any
/// incident edge are kept as isolated nodes.
class ShiftingGraph {
 public:
  ShiftingGraph() = default;
  /// Throws IndexOutOfRange if an edge names an equation outside 1..n.
  ShiftingGraph(int n_equations, std::vector<GroupEdge> edges);

  int n_equations() const { return n_equations_; }
  /// Sorted ascending by (var, shift).
  std::span<const VariableGroup> groups() const { return groups_; }
  /// Groups adjacent to equation i, sorted ascending.
  std::span<const VariableGroup> neighbors(EqId i) const;
  /// Equations adjacent to group g, sorted ascending. Empty if g is absent.
  std::span<const EqId> equations_of(const VariableGroup& g) const;
  bool has_edge(EqId i, const VariableGroup& g) const;
  bool has_group(const VariableGroup& g) const;
  /// All edges sorted by (i, var, shift).
  std::vector<GroupEdge> edges() const;

  friend bool operator==(const ShiftingGraph&, const ShiftingGraph&) = default;

 private:
  std::size_t group_slot(const VariableGroup& g) const;

  int n_equations_ = 0;
  std::vector<VariableGroup> groups_;
  std::vector<std::vector<VariableGroup>> adjacency_;    // per equation
  std::vector<std::vector<EqId>> group_adjacency_;       // per group slot
};

using OccurrenceEdge = std::pair<EqId, VarOccurrence>;

/// Bipartite graph between equations and concrete variable occurrences.
class DdaeGraph {
 public:
  DdaeGraph() = default;
  DdaeGraph(int n_equations, std::vector<OccurrenceEdge> edges);

  int n_equations() const { return n_equations_; }
  std::span<const VarOccurrence> var_nodes() const { return var_nodes_; }
  std::span<const VarOccurrence> neighbors(EqId i) const;
  bool has_edge(EqId i, const VarOccurrence& o) const;
  std::vector<OccurrenceEdge> edges() const;

 private:
  int n_equations_ = 0;
  std::vector<VarOccurrence> var_nodes_;
  std::vector<std::vector<VarOccurrence>> adjacency_;
};

ShiftingGraph build_shifting_graph(const DdaeStructure& s);
DdaeGraph build_ddae_graph(const DdaeStructure& s);

/// Groups (k,p) with p >= 0 and no (k,p') present for p' > p. These are the
/// only groups a matching may use. Sorted ascending.
std::vector<VariableGroup> highest_shift_groups(const ShiftingGraph& g);

}  // namespace ddaeconn
