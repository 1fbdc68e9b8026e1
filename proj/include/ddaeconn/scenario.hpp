#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ddaeconn/matching.hpp"

namespace ddaeconn {

enum class ScenarioKind { Banded, Triangular, Complete };

std::string to_string(ScenarioKind k);
std::optional<ScenarioKind> parse_scenario_kind(std::string_view name);

/// Benchmark instance: n equations, n-1 groups v_k = (k, 0) all of highest
/// shift, F_i matched to v_i for i < n, F_n exposed and adjacent to every
/// group. The remaining rows follow the kind:
///   banded      F_i adjacent to v_{i-1}, v_i, v_{i+1}
///   triangular  F_i adjacent to v_i .. v_{n-1}
///   complete    F_i adjacent to every group
struct Scenario {
  ScenarioKind kind = ScenarioKind::Banded;
  int n = 0;
  ShiftingGraph graph;
  Matching matching;
  EqId exposed = 0;
};

/// Throws BadSize for n < 2.
Scenario generate_scenario(ScenarioKind kind, int n);

}  // namespace ddaeconn
