#include "ddaeconn/matching.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "ddaeconn/errors.hpp"

namespace ddaeconn {

std::optional<VariableGroup> Matching::group_of(EqId i) const {
  auto it = by_eq_.find(i);
  if (it == by_eq_.end()) return std::nullopt;
  return it->second;
}

std::optional<EqId> Matching::equation_of(const VariableGroup& g) const {
  auto it = by_group_.find(g);
  if (it == by_group_.end()) return std::nullopt;
  return it->second;
}

void Matching::assign(EqId i, const VariableGroup& g) {
  auto held = by_group_.find(g);
  if (held != by_group_.end() && held->second != i) {
    throw std::invalid_argument("group " + group_name(g) + " already matched to F" +
                                std::to_string(held->second));
  }
  unassign(i);
  by_eq_[i] = g;
  by_group_[g] = i;
}

void Matching::unassign(EqId i) {
  auto it = by_eq_.find(i);
  if (it == by_eq_.end()) return;
  by_group_.erase(it->second);
  by_eq_.erase(it);
}

namespace {

class AugmentSearch {
 public:
  AugmentSearch(const ShiftingGraph& g, Matching& m, std::span<const VariableGroup> matchable)
      : g_(g), m_(m), matchable_(matchable) {}

  bool run(EqId i) {
    visited_eqs_.insert(i);
    const auto nbrs = g_.neighbors(i);
    for (const VariableGroup& v : nbrs) {
      if (is_matchable(v) && !m_.equation_of(v)) {
        m_.assign(i, v);
        return true;
      }
    }
    for (const VariableGroup& v : nbrs) {
      if (!is_matchable(v) || visited_groups_.contains(v)) continue;
      const auto holder = m_.equation_of(v);
      if (!holder || *holder == i) continue;
      visited_groups_.insert(v);
      if (run(*holder)) {
        m_.assign(i, v);
        return true;
      }
    }
    return false;
  }

  ReachReport report(EqId start) const {
    ReachReport r;
    r.exposed = start;
    for (EqId e : visited_eqs_) {
      if (e != start) r.reached_eqs.push_back(e);
    }
    r.reached_groups.assign(visited_groups_.begin(), visited_groups_.end());
    return r;
  }

 private:
  bool is_matchable(const VariableGroup& v) const {
    return std::binary_search(matchable_.begin(), matchable_.end(), v);
  }

  const ShiftingGraph& g_;
  Matching& m_;
  std::span<const VariableGroup> matchable_;
  std::set<EqId> visited_eqs_;
  std::set<VariableGroup> visited_groups_;
};

std::vector<VariableGroup> sorted_copy(std::span<const VariableGroup> groups) {
  std::vector<VariableGroup> out(groups.begin(), groups.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

AugmentResult augment_path(const ShiftingGraph& g, const Matching& m, EqId i,
                           std::span<const VariableGroup> matchable) {
  if (m.is_matched(i)) throw std::invalid_argument("augment_path: F" + std::to_string(i) + " is matched");
  const std::vector<VariableGroup> allowed = sorted_copy(matchable);
  AugmentResult result;
  result.matching = m;
  AugmentSearch search(g, result.matching, allowed);
  result.success = search.run(i);
  result.report = search.report(i);
  if (!result.success) result.matching = m;
  return result;
}

MatchingResult compute_matching(const ShiftingGraph& g) {
  const std::vector<VariableGroup> matchable = highest_shift_groups(g);
  MatchingResult out;
  for (EqId i = 1; i <= g.n_equations(); ++i) {
    AugmentResult r = augment_path(g, out.matching, i, matchable);
    if (r.success) {
      out.matching = std::move(r.matching);
    } else {
      out.exposed.push_back(std::move(r.report));
    }
  }
  return out;
}

ReachReport alternating_reach(const ShiftingGraph& g, const Matching& m, EqId j) {
  if (j < 1 || j > g.n_equations()) {
    throw IndexOutOfRange("equation " + std::to_string(j) + " not in graph");
  }
  if (m.is_matched(j)) throw NotExposed("F" + std::to_string(j) + " is matched");

  std::set<EqId> eqs{j};
  std::set<VariableGroup> groups;
  std::deque<EqId> queue{j};
  while (!queue.empty()) {
    const EqId e = queue.front();
    queue.pop_front();
    const auto own = m.group_of(e);
    for (const VariableGroup& v : g.neighbors(e)) {
      if (own && *own == v) continue;  // matching edge, not a valid first step
      const auto holder = m.equation_of(v);
      if (!holder) continue;
      groups.insert(v);
      if (eqs.insert(*holder).second) queue.push_back(*holder);
    }
  }
  ReachReport r;
  r.exposed = j;
  for (EqId e : eqs) {
    if (e != j) r.reached_eqs.push_back(e);
  }
  r.reached_groups.assign(groups.begin(), groups.end());
  return r;
}

bool is_exposed(const ShiftingGraph& g, const Matching& m, EqId j) {
  if (j < 1 || j > g.n_equations() || m.is_matched(j)) return false;
  return !augment_path(g, m, j, highest_shift_groups(g)).success;
}

}  // namespace ddaeconn
