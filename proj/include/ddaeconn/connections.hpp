#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ddaeconn/arborescence_enum.hpp"
#include "ddaeconn/connection_graph.hpp"

namespace ddaeconn {

/// Alternating path F_from - group - F_to: {F_from, group} is a non-matching
/// edge and group is matched to F_to.
struct Triple {
  EqId from = 0;
  VariableGroup group;
  EqId to = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// A set of alternating triples covering every reached equation exactly once
/// and forming a tree hanging from the exposed equation. Triples are kept
/// sorted by `to` (the heads are distinct, so this is a total order).
struct Connection {
  std::vector<Triple> triples;

  bool degenerate() const { return triples.empty(); }
  friend auto operator<=>(const Connection&, const Connection&) = default;
};

Connection make_connection(std::vector<Triple> triples);

enum class ConnectionClass { Explicit, Implicit };

std::string to_string(ConnectionClass c);

using ConnectionVisitor = std::function<void(const Connection&)>;

/// All connections for the exposed equation j: builds the connection graph
/// and converts each of its arborescences rooted at j. When j reaches no
/// other equation, a single empty connection is emitted. Throws NotExposed.
std::uint64_t find_all_connections(const ShiftingGraph& g, const Matching& m, EqId j,
                                   const ConnectionVisitor& visit, const EnumOptions& options = {});

/// Collecting overload; result sorted.
std::vector<Connection> find_all_connections(const ShiftingGraph& g, const Matching& m, EqId j);

/// Replaces each arc (i, l) of t by (i, weight(i, l), l). Throws ArcNotInGraph.
Connection tree_to_connection(const Arborescence& t, const ConnectionGraph& h);

/// Checks the connection definition against (g, m, j, reach): alternating
/// triples, each reached equation covered once, anchored at j, acyclic and
/// connected.
bool verify_connection(const Connection& c, const ShiftingGraph& g, const Matching& m, EqId j,
                       const ReachReport& reach);

/// Per-triple evidence for classification: a concrete occurrence of the
/// triple's group shared by both equations, if any.
struct TripleWitness {
  Triple triple;
  std::optional<VarOccurrence> shared;
};

std::vector<TripleWitness> connection_witnesses(const Connection& c, const DdaeGraph& gd);

/// Explicit iff every triple has a shared concrete occurrence in gd.
ConnectionClass classify_connection(const Connection& c, const DdaeGraph& gd);

/// {"triples": [[i,[k,p],l],...]} plus "class" when given and "degenerate"
/// for the empty connection. Single line.
std::string serialize_connection(const Connection& c,
                                 std::optional<ConnectionClass> cls = std::nullopt);

/// e.g. "F3 -[x2]-> F2, F2 -[x1]-> F1".
std::string format_connection(const Connection& c);

}  // namespace ddaeconn
