#include "ddaeconn/scenario.hpp"

#include "ddaeconn/errors.hpp"

namespace ddaeconn {

std::string to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::Banded: return "banded";
    case ScenarioKind::Triangular: return "triangular";
    case ScenarioKind::Complete: return "complete";
  }
  return "unknown";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) {
  if (name == "banded") return ScenarioKind::Banded;
  if (name == "triangular") return ScenarioKind::Triangular;
  if (name == "complete") return ScenarioKind::Complete;
  return std::nullopt;
}

Scenario generate_scenario(ScenarioKind kind, int n) {
  if (n < 2) throw BadSize("scenario size must be >= 2, got " + std::to_string(n));

  const int groups = n - 1;
  auto adjacent = [&](int i, int k) {
    if (i == n) return true;
    switch (kind) {
      case ScenarioKind::Banded: return k >= i - 1 && k <= i + 1;
      case ScenarioKind::Triangular: return k >= i;
      case ScenarioKind::Complete: return true;
    }
    return false;
  };

  std::vector<GroupEdge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= groups; ++k) {
      if (adjacent(i, k)) edges.push_back({i, VariableGroup{k, 0}});
    }
  }

  Scenario s;
  s.kind = kind;
  s.n = n;
  s.graph = ShiftingGraph(n, std::move(edges));
  for (int i = 1; i < n; ++i) s.matching.assign(i, VariableGroup{i, 0});
  s.exposed = n;
  return s;
}

}  // namespace ddaeconn
