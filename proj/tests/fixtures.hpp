#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ddaeconn/connections.hpp"
#include "ddaeconn/ddae_structure.hpp"

namespace ddaeconn::testing {

// x1' = f1;  x1' = x2 + f2;  0 = x1 + x2 + x3(t - tau) + f3
inline DdaeStructure delay_chain() {
  DdaeStructure s;
  s.n_equations = 3;
  s.n_variables = 3;
  s.equations = {
      {1, "F1", {{1, 0, 1}}},
      {2, "F2", {{1, 0, 1}, {2, 0, 0}}},
      {3, "F3", {{1, 0, 0}, {2, 0, 0}, {3, -1, 0}}},
  };
  return s;
}

// x1' = x2 + x3;  x2' = x3 + x2(t - tau);  x3' = x2 + x3(t - tau);
// 0 = x1 + x2 + x3 + x4(t - tau)
inline DdaeStructure coupled_delays() {
  DdaeStructure s;
  s.n_equations = 4;
  s.n_variables = 4;
  s.equations = {
      {1, "F1", {{1, 0, 1}, {2, 0, 0}, {3, 0, 0}}},
      {2, "F2", {{2, 0, 1}, {3, 0, 0}, {2, -1, 0}}},
      {3, "F3", {{3, 0, 1}, {2, 0, 0}, {3, -1, 0}}},
      {4, "F4", {{1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, -1, 0}}},
  };
  return s;
}

inline constexpr VariableGroup x1{1, 0};
inline constexpr VariableGroup x2{2, 0};
inline constexpr VariableGroup x3{3, 0};

// The two connections for F3 of the delay chain.
inline Connection chain_c1() { return make_connection({{3, x2, 2}, {2, x1, 1}}); }
inline Connection chain_c2() { return make_connection({{3, x1, 1}, {3, x2, 2}}); }

// The eight connections for F4 of the coupled system.
inline std::vector<Connection> coupled_connections() {
  std::vector<Connection> out = {
      make_connection({{4, x1, 1}, {1, x2, 2}, {2, x3, 3}}),
      make_connection({{4, x1, 1}, {1, x2, 2}, {1, x3, 3}}),
      make_connection({{4, x1, 1}, {1, x2, 2}, {4, x3, 3}}),
      make_connection({{4, x1, 1}, {1, x3, 3}, {3, x2, 2}}),
      make_connection({{4, x1, 1}, {1, x3, 3}, {4, x2, 2}}),
      make_connection({{4, x1, 1}, {4, x2, 2}, {2, x3, 3}}),
      make_connection({{4, x1, 1}, {4, x2, 2}, {4, x3, 3}}),
      make_connection({{4, x1, 1}, {4, x3, 3}, {3, x2, 2}}),
  };
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Arborescence> coupled_trees_in_reference_order() {
  return {
      {4, {{1, 2}, {2, 3}, {4, 1}}},
      {4, {{1, 2}, {1, 3}, {4, 1}}},
      {4, {{1, 2}, {4, 1}, {4, 3}}},
      {4, {{1, 3}, {3, 2}, {4, 1}}},
      {4, {{1, 3}, {4, 1}, {4, 2}}},
      {4, {{2, 3}, {4, 1}, {4, 2}}},
      {4, {{4, 1}, {4, 2}, {4, 3}}},
      {4, {{3, 2}, {4, 1}, {4, 3}}},
  };
}


}  // namespace ddaeconn::testing
