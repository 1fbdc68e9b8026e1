#include "ddaeconn/digraph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <json.hpp>

#include "ddaeconn/errors.hpp"

namespace ddaeconn {

using nlohmann::json;
using nlohmann::ordered_json;

Digraph::Digraph(std::vector<NodeId> nodes, std::vector<Arc> arcs)
    : nodes_(std::move(nodes)), arcs_(std::move(arcs)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw InvalidGraph("duplicate node id");
  }
  std::sort(arcs_.begin(), arcs_.end());
  for (const Arc& a : arcs_) {
    if (a.from == a.to) throw InvalidGraph("self-loop at node " + std::to_string(a.from));
    if (!has_node(a.from) || !has_node(a.to)) {
      throw InvalidGraph("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                         ") has an endpoint outside the node set");
    }
  }
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw InvalidGraph("parallel arcs");
  }
}

bool Digraph::has_node(NodeId v) const { return std::binary_search(nodes_.begin(), nodes_.end(), v); }

bool Digraph::has_arc(const Arc& a) const { return std::binary_search(arcs_.begin(), arcs_.end(), a); }

int Digraph::index_of(NodeId v) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  if (it == nodes_.end() || *it != v) return -1;
  return static_cast<int>(it - nodes_.begin());
}

std::vector<std::string> arborescence_violations(const Digraph& g, const Arborescence& t) {
  std::vector<std::string> out;
  if (!g.has_node(t.root)) {
    out.push_back("root " + std::to_string(t.root) + " not in graph");
    return out;
  }
  if (t.arcs.size() + 1 != g.node_count()) {
    out.push_back("expected " + std::to_string(g.node_count() - 1) + " arcs, got " +
                  std::to_string(t.arcs.size()));
  }
  std::map<NodeId, int> indegree;
  std::map<NodeId, std::vector<NodeId>> children;
  for (const Arc& a : t.arcs) {
    if (!g.has_arc(a)) {
      out.push_back("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) + ") not in graph");
    }
    ++indegree[a.to];
    children[a.from].push_back(a.to);
  }
  if (indegree.contains(t.root)) out.push_back("root has an incoming arc");
  for (NodeId v : g.nodes()) {
    if (v != t.root && indegree[v] != 1) {
      out.push_back("node " + std::to_string(v) + " has in-degree " + std::to_string(indegree[v]));
    }
  }
  std::vector<NodeId> seen{t.root};
  std::deque<NodeId> queue{t.root};
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId w : children[u]) {
      if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
        seen.push_back(w);
        queue.push_back(w);
      }
    }
  }
  if (seen.size() != g.node_count()) out.push_back("not every node is reachable from the root");
  return out;
}

std::vector<NodeId> descendants(const Arborescence& t, NodeId v) {
  std::vector<NodeId> out{v};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const Arc& a : t.arcs) {
      if (a.from == out[k] && std::find(out.begin(), out.end(), a.to) == out.end()) {
        out.push_back(a.to);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_bridge(const Digraph& g, const Arc& e, const Arborescence& last) {
  const std::vector<NodeId> below = descendants(last, e.to);
  for (const Arc& a : g.arcs()) {
    if (a.to != e.to || a == e) continue;
    if (!std::binary_search(below.begin(), below.end(), a.from)) return false;
  }
  return true;
}

RootedDigraph parse_digraph(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw MalformedDocument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaViolation("digraph: expected an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "nodes" && key != "arcs" && key != "root") {
      throw SchemaViolation("digraph: unknown field \"" + key + "\"");
    }
  }
  if (!doc.contains("nodes") || !doc.contains("arcs")) {
    throw SchemaViolation("digraph: \"nodes\" and \"arcs\" are required");
  }
  std::vector<NodeId> nodes;
  std::vector<Arc> arcs;
  try {
    nodes = doc.at("nodes").get<std::vector<NodeId>>();
    for (const json& a : doc.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw SchemaViolation("digraph: arcs must be [from,to] pairs");
      arcs.push_back({a.at(0).get<NodeId>(), a.at(1).get<NodeId>()});
    }
  } catch (const json::exception& e) {
    throw SchemaViolation(std::string("digraph: ") + e.what());
  }
  RootedDigraph out{Digraph(std::move(nodes), std::move(arcs)), std::nullopt};
  if (doc.contains("root")) {
    if (!doc.at("root").is_number_integer()) throw SchemaViolation("digraph: \"root\" must be an integer");
    out.root = doc.at("root").get<NodeId>();
  }
  return out;
}

std::string serialize_digraph(const Digraph& g, std::optional<NodeId> root) {
  ordered_json doc;
  doc["nodes"] = std::vector<NodeId>(g.nodes().begin(), g.nodes().end());
  if (root) doc["root"] = *root;
  ordered_json arcs = ordered_json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.from, a.to});
  doc["arcs"] = std::move(arcs);
  return doc.dump();
}

std::string serialize_arborescence(const Arborescence& t) {
  ordered_json arcs = ordered_json::array();
  std::vector<Arc> sorted = t.arcs;
  std::sort(sorted.begin(), sorted.end());
  for (const Arc& a : sorted) arcs.push_back({a.from, a.to});
  ordered_json doc;
  doc["root"] = t.root;
  doc["arcs"] = std::move(arcs);
  return doc.dump();
}

}  // namespace ddaeconn
