#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ddaeconn/errors.hpp"
#include "ddaeconn/matching.hpp"
#include "fixtures.hpp"

using namespace ddaeconn;
using testing::x1;
using testing::x2;
using testing::x3;

namespace {

ShiftingGraph random_graph(std::mt19937& rng, int n, int groups, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<GroupEdge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= groups; ++k) {
      if (edge(rng)) edges.push_back({i, {k, 0}});
    }
  }
  return ShiftingGraph(n, edges);
}

}  // namespace

TEST_CASE("augment_path on the delay chain") {
  const ShiftingGraph g = build_shifting_graph(testing::delay_chain());
  const auto matchable = highest_shift_groups(g);

  const AugmentResult first = augment_path(g, Matching{}, 1, matchable);
  CHECK(first.success);
  CHECK(first.matching.group_of(1) == x1);
  CHECK(first.matching.size() == 1);

  Matching m;
  m.assign(1, x1);
  m.assign(2, x2);
  const AugmentResult stuck = augment_path(g, m, 3, matchable);
  CHECK_FALSE(stuck.success);
  CHECK(stuck.matching == m);
  CHECK(stuck.report.reached_eqs == std::vector<EqId>{1, 2});
}

TEST_CASE("augment_path from an isolated equation") {
  const ShiftingGraph g(1, {});
  const AugmentResult r = augment_path(g, Matching{}, 1, {});
  CHECK_FALSE(r.success);
  CHECK(r.report.reached_eqs.empty());
}

TEST_CASE("augment_path reroutes through matched groups") {
  // F1 holds a; F2 only sees a, so F1 must move over to b.
  const VariableGroup a{1, 0}, b{2, 0};
  const ShiftingGraph g(2, {{1, a}, {1, b}, {2, a}});
  Matching m;
  m.assign(1, a);
  const AugmentResult r = augment_path(g, m, 2, std::vector<VariableGroup>{a, b});
  CHECK(r.success);
  CHECK(r.matching.group_of(1) == b);
  CHECK(r.matching.group_of(2) == a);
}

TEST_CASE("compute_matching on the worked examples") {
  {
    const MatchingResult r = compute_matching(build_shifting_graph(testing::delay_chain()));
    CHECK(r.matching.pairs() == std::map<EqId, VariableGroup>{{1, x1}, {2, x2}});
    REQUIRE(r.exposed.size() == 1);
    CHECK(r.exposed[0].exposed == 3);
    CHECK(r.exposed[0].reached_eqs == std::vector<EqId>{1, 2});
  }
  {
    const MatchingResult r = compute_matching(build_shifting_graph(testing::coupled_delays()));
    CHECK(r.matching.pairs() == std::map<EqId, VariableGroup>{{1, x1}, {2, x2}, {3, x3}});
    REQUIRE(r.exposed.size() == 1);
    CHECK(r.exposed[0].exposed == 4);
    CHECK(r.exposed[0].reached_eqs == std::vector<EqId>{1, 2, 3});
  }
  {
    const MatchingResult r = compute_matching(ShiftingGraph(1, {{1, {1, 0}}}));
    CHECK(r.matching.size() == 1);
    CHECK(r.exposed.empty());
  }
}

TEST_CASE("alternating_reach") {
  const ShiftingGraph chain = build_shifting_graph(testing::delay_chain());
  Matching m;
  m.assign(1, x1);
  m.assign(2, x2);
  const ReachReport r = alternating_reach(chain, m, 3);
  CHECK(r.reached_eqs == std::vector<EqId>{1, 2});
  CHECK(r.reached_groups == std::vector<VariableGroup>{x1, x2});
  CHECK_THROWS_AS(alternating_reach(chain, m, 1), NotExposed);

  const ShiftingGraph coupled = build_shifting_graph(testing::coupled_delays());
  Matching mc;
  mc.assign(1, x1);
  mc.assign(2, x2);
  mc.assign(3, x3);
  CHECK(alternating_reach(coupled, mc, 4).reached_eqs == std::vector<EqId>{1, 2, 3});

  const ShiftingGraph lonely(2, {{1, {1, 0}}});
  Matching ml;
  ml.assign(1, {1, 0});
  CHECK(alternating_reach(lonely, ml, 2).reached_eqs.empty());
}

TEST_CASE("matching properties on random graphs") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const int groups = std::uniform_int_distribution<int>(1, 7)(rng);
    const ShiftingGraph g = random_graph(rng, n, groups, 0.35);
    const auto matchable = highest_shift_groups(g);
    const MatchingResult r = compute_matching(g);

    CHECK(r.matching.size() + r.exposed.size() == static_cast<std::size_t>(n));
    std::set<VariableGroup> used;
    for (const auto& [i, v] : r.matching.pairs()) {
      CHECK(g.has_edge(i, v));
      CHECK(used.insert(v).second);
      CHECK(std::binary_search(matchable.begin(), matchable.end(), v));
    }
    for (const ReachReport& rep : r.exposed) {
      // Still exposed against the final matching, and the reach agrees with
      // an independent breadth-first traversal.
      const AugmentResult again = augment_path(g, r.matching, rep.exposed, matchable);
      CHECK_FALSE(again.success);
      const ReachReport now = alternating_reach(g, r.matching, rep.exposed);
      CHECK(again.report.reached_eqs == now.reached_eqs);
      CHECK(std::find(now.reached_eqs.begin(), now.reached_eqs.end(), rep.exposed) == now.reached_eqs.end());
      for (const VariableGroup& v : now.reached_groups) {
        const auto holder = r.matching.equation_of(v);
        REQUIRE(holder.has_value());
        CHECK(std::binary_search(now.reached_eqs.begin(), now.reached_eqs.end(), *holder));
      }
      for (EqId e : now.reached_eqs) CHECK(r.matching.is_matched(e));
    }

    // Adding an edge never shrinks the reach.
    for (const ReachReport& rep : r.exposed) {
      auto edges = g.edges();
      edges.push_back({std::uniform_int_distribution<int>(1, n)(rng),
                       {std::uniform_int_distribution<int>(1, groups)(rng), 0}});
      const ShiftingGraph bigger(n, edges);
      const ReachReport before = alternating_reach(g, r.matching, rep.exposed);
      const ReachReport after = alternating_reach(bigger, r.matching, rep.exposed);
      CHECK(std::includes(after.reached_eqs.begin(), after.reached_eqs.end(), before.reached_eqs.begin(),
                          before.reached_eqs.end()));
    }
  }
}
