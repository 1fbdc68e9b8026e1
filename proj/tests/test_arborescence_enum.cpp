#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ddaeconn/arborescence_enum.hpp"
#include "ddaeconn/errors.hpp"
#include "ddaeconn/oracles.hpp"
#include "fixtures.hpp"
#include "random_digraph.hpp"

using namespace ddaeconn;

namespace {

const Digraph chain_h({1, 2, 3}, {{2, 1}, {3, 1}, {3, 2}});
const Digraph coupled_h({1, 2, 3, 4}, {{1, 2}, {1, 3}, {2, 3}, {3, 2}, {4, 1}, {4, 2}, {4, 3}});

std::vector<Arborescence> collect(const Digraph& g, NodeId root, const EnumOptions& options = {}) {
  std::vector<Arborescence> out;
  enumerate_arborescences(g, root, [&](const Arborescence& t) { out.push_back(t); }, options);
  return out;
}

std::vector<Arborescence> sorted(std::vector<Arborescence> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool contains_all(const Arborescence& t, const std::vector<Arc>& arcs) {
  return std::all_of(arcs.begin(), arcs.end(), [&](const Arc& a) {
    return std::find(t.arcs.begin(), t.arcs.end(), a) != t.arcs.end();
  });
}

}  // namespace

TEST_CASE("digraph construction rejects malformed input") {
  CHECK_THROWS_AS(Digraph({1, 2}, {{1, 1}}), InvalidGraph);
  CHECK_THROWS_AS(Digraph({1, 2}, {{1, 3}}), InvalidGraph);
  CHECK_THROWS_AS(Digraph({1, 2}, {{1, 2}, {1, 2}}), InvalidGraph);
  CHECK_THROWS_AS(Digraph({1, 1}, {}), InvalidGraph);
}

TEST_CASE("delay-chain connection graph has two trees, emitted in reference order") {
  const auto trees = collect(chain_h, 3);
  REQUIRE(trees.size() == 2);
  CHECK(trees[0] == Arborescence{3, {{3, 1}, {3, 2}}});
  CHECK(trees[1] == Arborescence{3, {{2, 1}, {3, 2}}});
}

TEST_CASE("coupled-system connection graph has the eight reference trees in order") {
  const auto trees = collect(coupled_h, 4);
  CHECK(trees == testing::coupled_trees_in_reference_order());
}

TEST_CASE("single node yields the trivial tree") {
  const Digraph g({7}, {});
  const auto trees = collect(g, 7);
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].arcs.empty());
  CHECK(trees[0].root == 7);
}

TEST_CASE("complete digraph on three nodes") {
  const Digraph g({1, 2, 3}, {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}});
  const auto trees = sorted(collect(g, 1));
  // Expected set frozen from the subset brute force.
  const std::vector<Arborescence> expected = brute_force_arborescences(g, 1);
  CHECK(trees == expected);
  CHECK(trees == std::vector<Arborescence>{{1, {{1, 2}, {1, 3}}}, {1, {{1, 2}, {2, 3}}}, {1, {{1, 3}, {3, 2}}}});
}

TEST_CASE("graphs not rooted at the root have no trees") {
  const Digraph g({1, 2, 3}, {{1, 2}, {3, 2}});
  CHECK(collect(g, 1).empty());
  CHECK(count_arborescences(g, 1) == 0);
  CHECK_THROWS_AS(collect(g, 9), RootNotInGraph);
}

TEST_CASE("descendants") {
  const Arborescence l{3, {{2, 1}, {3, 2}}};
  CHECK(descendants(l, 2) == std::vector<NodeId>{1, 2});
  CHECK(descendants(l, 1) == std::vector<NodeId>{1});
  CHECK(descendants(l, 3) == std::vector<NodeId>{1, 2, 3});
}

TEST_CASE("bridge test on the delay-chain graph") {
  const Arborescence last{3, {{3, 1}, {3, 2}}};
  // (3,2) deleted from the full graph: nothing else enters F2.
  CHECK(is_bridge(Digraph({1, 2, 3}, {{2, 1}, {3, 1}}), {3, 2}, last));
  // (3,1) deleted: (2,1) remains and F2 is a nondescendant of F1.
  CHECK_FALSE(is_bridge(Digraph({1, 2, 3}, {{2, 1}, {3, 2}}), {3, 1}, last));
  // Only entry into v.
  CHECK(is_bridge(Digraph({1, 2}, {}), {1, 2}, Arborescence{1, {{1, 2}}}));
}

TEST_CASE("enumeration matches both oracles on random digraphs") {
  std::mt19937 rng(2024);
  std::size_t total_bridge_tests = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const Digraph g = testing::random_digraph(rng, n, 14);
    const NodeId root = std::uniform_int_distribution<int>(1, n)(rng);

    ArborescenceEnumerator enumerator(g);
    std::vector<Arborescence> trees;
    std::size_t bridge_tests = 0;
    EnumOptions options;
    options.on_bridge = [&](const ArborescenceEnumerator& e, const Arc& arc, bool bridge) {
      ++bridge_tests;
      const Digraph working = e.working_graph();
      const std::vector<Arc> partial = e.partial_tree();
      std::size_t extensions = 0;
      for (const Arborescence& t : brute_force_arborescences(working, root)) {
        if (contains_all(t, partial)) ++extensions;
      }
      CHECK(bridge == (extensions == 0));
      CHECK(is_bridge(working, arc, e.last_tree()) == bridge);
    };
    const std::uint64_t count =
        enumerator.run(root, [&](const Arborescence& t) { trees.push_back(t); }, options);

    CHECK(count == trees.size());
    for (const Arborescence& t : trees) CHECK(is_spanning_arborescence(g, t));
    const auto unique = sorted(trees);
    CHECK(std::adjacent_find(unique.begin(), unique.end()) == unique.end());
    CHECK(unique == brute_force_arborescences(g, root));
    CHECK(count == count_arborescences(g, root));
    CHECK(enumerator.working_graph() == g);
    CHECK(enumerator.completed());
    total_bridge_tests += bridge_tests;
  }
  CHECK(total_bridge_tests > 100);
}

TEST_CASE("limit and cancel abort cleanly and restore the graph") {
  const Digraph g({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 4}, {4, 1}, {4, 2}, {4, 3}});
  REQUIRE(count_arborescences(g, 1) == 16);

  ArborescenceEnumerator enumerator(g);
  std::vector<Arborescence> got;
  EnumOptions limited;
  limited.limit = 5;
  CHECK(enumerator.run(1, [&](const Arborescence& t) { got.push_back(t); }, limited) == 5);
  CHECK_FALSE(enumerator.completed());
  CHECK(enumerator.working_graph() == g);
  CHECK(enumerator.partial_tree().empty());

  // Reusable after an aborted run.
  got.clear();
  CHECK(enumerator.run(1, [&](const Arborescence& t) { got.push_back(t); }) == 16);
  CHECK(enumerator.completed());
  CHECK(sorted(got) == brute_force_arborescences(g, 1));

  EnumOptions exact;
  exact.limit = 16;
  CHECK(enumerator.run(1, [](const Arborescence&) {}, exact) == 16);
  CHECK(enumerator.completed());

  int polls = 0;
  EnumOptions cancelled;
  cancelled.cancel = [&] { return ++polls > 3; };
  CHECK(enumerator.run(1, [](const Arborescence&) {}, cancelled) == 3);
  CHECK_FALSE(enumerator.completed());
  CHECK(enumerator.working_graph() == g);
}

TEST_CASE("digraph and tree JSON") {
  const RootedDigraph parsed = parse_digraph(R"({"nodes":[1,2,3],"root":3,"arcs":[[3,2],[2,1],[3,1]]})");
  CHECK(parsed.graph == chain_h);
  CHECK(parsed.root == 3);
  CHECK(serialize_digraph(chain_h, 3) == R"({"nodes":[1,2,3],"root":3,"arcs":[[2,1],[3,1],[3,2]]})");
  CHECK(serialize_arborescence({3, {{3, 2}, {2, 1}}}) == R"({"root":3,"arcs":[[2,1],[3,2]]})");
  CHECK_THROWS_AS(parse_digraph("[1,2"), MalformedDocument);
  CHECK_THROWS_AS(parse_digraph(R"({"nodes":[1],"arcs":[],"extra":1})"), SchemaViolation);
  CHECK_THROWS_AS(parse_digraph(R"({"nodes":[1,2],"arcs":[[1,1]]})"), InvalidGraph);
}
