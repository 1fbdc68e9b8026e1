#include "ddaeconn/oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "ddaeconn/errors.hpp"

namespace ddaeconn {

std::vector<Arborescence> brute_force_arborescences(const Digraph& g, NodeId root,
                                                    std::size_t node_cap) {
  if (!g.has_node(root)) throw RootNotInGraph("root " + std::to_string(root) + " is not a node");
  if (g.node_count() > node_cap) {
    throw CapExceeded("brute force limited to " + std::to_string(node_cap) + " nodes, graph has " +
                      std::to_string(g.node_count()));
  }

  std::vector<Arborescence> found;
  const std::size_t k = g.node_count() - 1;
  const auto arcs = g.arcs();
  if (k > arcs.size()) return found;

  // Lexicographic walk over k-subsets of arc indices.
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  Arborescence candidate{root, {}};
  while (true) {
    candidate.arcs.clear();
    for (std::size_t idx : pick) candidate.arcs.push_back(arcs[idx]);
    if (is_spanning_arborescence(g, candidate)) found.push_back(candidate);

    std::size_t pos = k;
    while (pos > 0 && pick[pos - 1] == arcs.size() - k + pos - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t q = pos; q < k; ++q) pick[q] = pick[q - 1] + 1;
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::uint64_t count_arborescences(const Digraph& g, NodeId root) {
  using boost::multiprecision::cpp_int;

  const int r = g.index_of(root);
  if (r < 0) throw RootNotInGraph("root " + std::to_string(root) + " is not a node");
  const int n = static_cast<int>(g.node_count());
  if (n == 1) return 1;

  // Reduced in-degree Laplacian: indices skip the root.
  auto reduced = [r](int v) { return v < r ? v : v - 1; };
  const int dim = n - 1;
  std::vector<std::vector<cpp_int>> a(static_cast<std::size_t>(dim),
                                      std::vector<cpp_int>(static_cast<std::size_t>(dim), 0));
  for (const Arc& arc : g.arcs()) {
    const int u = g.index_of(arc.from);
    const int v = g.index_of(arc.to);
    if (v == r) continue;
    const auto rv = static_cast<std::size_t>(reduced(v));
    a[rv][rv] += 1;
    if (u != r) a[static_cast<std::size_t>(reduced(u))][rv] -= 1;
  }

  // Bareiss fraction-free elimination.
  cpp_int prev_pivot = 1;
  bool negate = false;
  for (std::size_t k = 0; k < static_cast<std::size_t>(dim); ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < a.size() && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == a.size()) return 0;
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < a.size(); ++i) {
      for (std::size_t j = k + 1; j < a.size(); ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev_pivot;
      }
      a[i][k] = 0;
    }
    prev_pivot = a[k][k];
  }
  cpp_int det = a.back().back();
  if (negate) det = -det;
  if (det < 0) throw std::logic_error("negative arborescence count");
  if (det > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("arborescence count exceeds 64 bits");
  }
  return det.convert_to<std::uint64_t>();
}

}  // namespace ddaeconn
