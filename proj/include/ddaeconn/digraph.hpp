#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ddaeconn {

using NodeId = int;

struct Arc {
  NodeId from = 0;
  NodeId to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Simple directed graph: no self-loops, no parallel arcs. Node ids are
/// arbitrary integers; nodes and arcs are kept sorted.
class Digraph {
 public:
  Digraph() = default;
  /// Throws InvalidGraph on duplicate nodes, dangling endpoints, self-loops
  /// or parallel arcs.
  Digraph(std::vector<NodeId> nodes, std::vector<Arc> arcs);

  std::span<const NodeId> nodes() const { return nodes_; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  bool has_node(NodeId v) const;
  bool has_arc(const Arc& a) const;
  /// Position of v in nodes(), or -1.
  int index_of(NodeId v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<NodeId> nodes_;
  std::vector<Arc> arcs_;
};

/// Spanning out-tree. Arcs are sorted ascending by (from, to).
struct Arborescence {
  NodeId root = 0;
  std::vector<Arc> arcs;

  friend auto operator<=>(const Arborescence&, const Arborescence&) = default;
};

/// Empty iff t is a spanning arborescence of g rooted at t.root: |V|-1 arcs
/// all present in g, one in-arc per non-root node, none into the root, and
/// every node reachable from the root.
std::vector<std::string> arborescence_violations(const Digraph& g, const Arborescence& t);

inline bool is_spanning_arborescence(const Digraph& g, const Arborescence& t) {
  return arborescence_violations(g, t).empty();
}

/// Nodes reachable from v using arcs of t, including v. Sorted.
std::vector<NodeId> descendants(const Arborescence& t, NodeId v);

/// Bridge test against the last tree: true iff `g` (the working graph with
/// `e` and all processed arcs already removed) has no arc (u, e.to) where u
/// is a nondescendant of e.to in `last`.
bool is_bridge(const Digraph& g, const Arc& e, const Arborescence& last);

/// Digraph interchange JSON: {"nodes": [...], "root": id, "arcs": [[u,v],...]}.
/// "root" is optional on input. Throws MalformedDocument / SchemaViolation /
/// InvalidGraph.
struct RootedDigraph {
  Digraph graph;
  std::optional<NodeId> root;
};
RootedDigraph parse_digraph(std::string_view document);
std::string serialize_digraph(const Digraph& g, std::optional<NodeId> root);

/// One JSON line: {"root": r, "arcs": [[u,v],...]}.
std::string serialize_arborescence(const Arborescence& t);

}  // namespace ddaeconn
