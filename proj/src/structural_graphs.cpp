#include "ddaeconn/structural_graphs.hpp"

#include <algorithm>

#include "ddaeconn/errors.hpp"

namespace ddaeconn {

namespace {

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_equation(EqId i, int n) {
  if (i < 1 || i > n) {
    throw IndexOutOfRange("equation " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

std::string group_name(const VariableGroup& g) {
  std::string name;
  if (g.shift != 0) name = "S[" + std::to_string(g.shift) + "]";
  return name + "x" + std::to_string(g.var);
}

ShiftingGraph::ShiftingGraph(int n_equations, std::vector<GroupEdge> edges)
    : n_equations_(n_equations), adjacency_(static_cast<std::size_t>(std::max(n_equations, 0))) {
  if (n_equations < 0) throw BadSize("negative equation count");
  sort_unique(edges);
  for (const auto& [i, grp] : edges) {
    check_equation(i, n_equations);
    adjacency_[static_cast<std::size_t>(i - 1)].push_back(grp);
    groups_.push_back(grp);
  }
  sort_unique(groups_);
  group_adjacency_.resize(groups_.size());
  for (const auto& [i, grp] : edges) group_adjacency_[group_slot(grp)].push_back(i);
}

std::size_t ShiftingGraph::group_slot(const VariableGroup& g) const {
  auto it = std::lower_bound(groups_.begin(), groups_.end(), g);
  if (it == groups_.end() || *it != g) return groups_.size();
  return static_cast<std::size_t>(it - groups_.begin());
}

std::span<const VariableGroup> ShiftingGraph::neighbors(EqId i) const {
  check_equation(i, n_equations_);
  return adjacency_[static_cast<std::size_t>(i - 1)];
}

std::span<const EqId> ShiftingGraph::equations_of(const VariableGroup& g) const {
  const std::size_t slot = group_slot(g);
  if (slot == groups_.size()) return {};
  return group_adjacency_[slot];
}

bool ShiftingGraph::has_edge(EqId i, const VariableGroup& g) const {
  if (i < 1 || i > n_equations_) return false;
  const auto& adj = adjacency_[static_cast<std::size_t>(i - 1)];
  return std::binary_search(adj.begin(), adj.end(), g);
}

bool ShiftingGraph::has_group(const VariableGroup& g) const {
  return std::binary_search(groups_.begin(), groups_.end(), g);
}

std::vector<GroupEdge> ShiftingGraph::edges() const {
  std::vector<GroupEdge> out;
  for (EqId i = 1; i <= n_equations_; ++i) {
    for (const VariableGroup& g : adjacency_[static_cast<std::size_t>(i - 1)]) out.emplace_back(i, g);
  }
  return out;
}

DdaeGraph::DdaeGraph(int n_equations, std::vector<OccurrenceEdge> edges)
    : n_equations_(n_equations), adjacency_(static_cast<std::size_t>(std::max(n_equations, 0))) {
  if (n_equations < 0) throw BadSize("negative equation count");
  sort_unique(edges);
  for (const auto& [i, occ] : edges) {
    check_equation(i, n_equations);
    adjacency_[static_cast<std::size_t>(i - 1)].push_back(occ);
    var_nodes_.push_back(occ);
  }
  sort_unique(var_nodes_);
}

std::span<const VarOccurrence> DdaeGraph::neighbors(EqId i) const {
  check_equation(i, n_equations_);
  return adjacency_[static_cast<std::size_t>(i - 1)];
}

bool DdaeGraph::has_edge(EqId i, const VarOccurrence& o) const {
  if (i < 1 || i > n_equations_) return false;
  const auto& adj = adjacency_[static_cast<std::size_t>(i - 1)];
  return std::binary_search(adj.begin(), adj.end(), o);
}

std::vector<OccurrenceEdge> DdaeGraph::edges() const {
  std::vector<OccurrenceEdge> out;
  for (EqId i = 1; i <= n_equations_; ++i) {
    for (const VarOccurrence& o : adjacency_[static_cast<std::size_t>(i - 1)]) out.emplace_back(i, o);
  }
  return out;
}

ShiftingGraph build_shifting_graph(const DdaeStructure& s) {
  std::vector<GroupEdge> edges;
  for (const EquationStruct& e : s.equations) {
    for (const VarOccurrence& o : e.occurrences) edges.push_back({e.index, {o.var, o.shift}});
  }
  return ShiftingGraph(s.n_equations, std::move(edges));
}

DdaeGraph build_ddae_graph(const DdaeStructure& s) {
  std::vector<OccurrenceEdge> edges;
  for (const EquationStruct& e : s.equations) {
    for (const VarOccurrence& o : e.occurrences) edges.push_back({e.index, o});
  }
  return DdaeGraph(s.n_equations, std::move(edges));
}

std::vector<VariableGroup> highest_shift_groups(const ShiftingGraph& g) {
  // groups() is sorted by (var, shift), so the last entry per var has the
  // highest shift.
  std::vector<VariableGroup> out;
  const auto groups = g.groups();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const bool last_of_var = k + 1 == groups.size() || groups[k + 1].var != groups[k].var;
    if (last_of_var && groups[k].shift >= 0) out.push_back(groups[k]);
  }
  return out;
}

}  // namespace ddaeconn
