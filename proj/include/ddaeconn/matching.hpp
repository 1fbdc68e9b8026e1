#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ddaeconn/structural_graphs.hpp"

namespace ddaeconn {

/// Injective assignment of equations to variable groups.
class Matching {
 public:
  Matching() = default;

  std::optional<VariableGroup> group_of(EqId i) const;
  std::optional<EqId> equation_of(const VariableGroup& g) const;
  bool is_matched(EqId i) const { return by_eq_.contains(i); }

  /// Assigns g to i, replacing whatever i held before. Throws
  /// std::invalid_argument if g is already held by another equation.
  void assign(EqId i, const VariableGroup& g);
  void unassign(EqId i);

  std::size_t size() const { return by_eq_.size(); }
  bool empty() const { return by_eq_.empty(); }
  /// Pairs in ascending equation order.
  const std::map<EqId, VariableGroup>& pairs() const { return by_eq_; }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::map<EqId, VariableGroup> by_eq_;
  std::map<VariableGroup, EqId> by_group_;
};

/// Result of an alternating-path search from an unmatched equation.
struct ReachReport {
  EqId exposed = 0;
  /// Equations reachable from `exposed` by alternating paths (excluding it).
  std::vector<EqId> reached_eqs;
  /// Matched groups passed through on the way; each is matched to a member
  /// of reached_eqs.
  std::vector<VariableGroup> reached_groups;

  friend bool operator==(const ReachReport&, const ReachReport&) = default;
};

struct AugmentResult {
  bool success = false;
  Matching matching;
  /// Equations and groups visited by the search. On failure this is exactly
  /// the alternating-path reach of the start equation.
  ReachReport report;
};

/// Depth-first augmenting-path search from unmatched equation i (Pantelides
/// style: a free matchable neighbour is taken first, otherwise the search
/// recurses through matched groups in ascending order).
AugmentResult augment_path(const ShiftingGraph& g, const Matching& m, EqId i,
                           std::span<const VariableGroup> matchable);

struct MatchingResult {
  Matching matching;
  std::vector<ReachReport> exposed;
};

/// Processes equations in ascending order; each equation that cannot be
/// augmented is reported as exposed together with its alternating reach.
MatchingResult compute_matching(const ShiftingGraph& g);

/// Equations reachable from the unmatched equation j by alternating paths.
/// Throws NotExposed if j is matched, IndexOutOfRange if j is not an equation.
ReachReport alternating_reach(const ShiftingGraph& g, const Matching& m, EqId j);

/// True iff j is unmatched and no augmenting path from j to a free matchable
/// group exists.
bool is_exposed(const ShiftingGraph& g, const Matching& m, EqId j);

}  // namespace ddaeconn
