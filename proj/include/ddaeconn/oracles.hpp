#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ddaeconn/digraph.hpp"

namespace ddaeconn {

inline constexpr std::size_t kBruteForceNodeCap = 8;

/// Every (|V|-1)-subset of arcs that forms a spanning arborescence rooted at
/// `root`, sorted. Throws CapExceeded above `node_cap` nodes and
/// RootNotInGraph.
std::vector<Arborescence> brute_force_arborescences(const Digraph& g, NodeId root,
                                                    std::size_t node_cap = kBruteForceNodeCap);

/// Directed matrix-tree count: determinant of the in-degree Laplacian with
/// the root row and column removed, by exact fraction-free elimination.
/// Throws RootNotInGraph, std::overflow_error if the count exceeds 64 bits.
std::uint64_t count_arborescences(const Digraph& g, NodeId root);

}  // namespace ddaeconn
