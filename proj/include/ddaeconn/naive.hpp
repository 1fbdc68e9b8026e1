#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ddaeconn/connections.hpp"

namespace ddaeconn {

struct NaiveOptions {
  /// Maximum number of search states expanded; 0 means unlimited.
  std::uint64_t max_states = 0;
  /// Polled periodically; returning true throws LimitExceeded.
  std::function<bool()> cancel;
};

struct NaiveResult {
  /// Verified, deduplicated connections found so far, sorted.
  std::vector<Connection> connections;
  /// Ordered triple sequences expanded by the search.
  std::uint64_t states = 0;
  bool completed = true;
};

/// Like naive_all_connections but returns partial results instead of
/// throwing when a limit is hit.
NaiveResult naive_search(const ShiftingGraph& g, const Matching& m, EqId j,
                         const NaiveOptions& options = {});

/// Baseline: depth-first search over ordered sequences of alternating
/// triples read straight off the shifting graph. Every ordering of the same
/// connection is generated, so results are deduplicated as sets afterwards
/// and filtered with verify_connection. Throws NotExposed, LimitExceeded.
std::vector<Connection> naive_all_connections(const ShiftingGraph& g, const Matching& m, EqId j,
                                              const NaiveOptions& options = {});

}  // namespace ddaeconn
