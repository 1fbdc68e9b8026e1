#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ddaeconn {

using EqId = int;

/// One appearance of Δ_{shift·τ} x_var^{(deriv)} in an equation.
struct VarOccurrence {
  int var = 1;
  int shift = 0;
  int deriv = 0;

  friend auto operator<=>(const VarOccurrence&, const VarOccurrence&) = default;
};

struct EquationStruct {
  EqId index = 1;
  std::string label;
  std::vector<VarOccurrence> occurrences;

  friend bool operator==(const EquationStruct&, const EquationStruct&) = default;
};

/// Structural incidence of a delay DAE: which variable occurrences appear in
/// which equation. Shifts are integer multiples of a single delay τ.
struct DdaeStructure {
  int n_equations = 0;
  int n_variables = 0;
  /// equations[i - 1] describes equation i.
  std::vector<EquationStruct> equations;

  const EquationStruct& equation(EqId i) const { return equations.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const DdaeStructure&, const DdaeStructure&) = default;
};

/// Parses the JSON interchange format. Throws MalformedDocument,
/// SchemaViolation, IndexOutOfRange or DuplicateOccurrence.
DdaeStructure parse_ddae(std::string_view document);

/// Canonical JSON serialization: equations by index, occurrences sorted.
std::string serialize_ddae(const DdaeStructure& s);

/// One human-readable entry per violated invariant; empty when valid.
std::vector<std::string> validate(const DdaeStructure& s);

std::string default_label(EqId i);

/// ASCII display name, e.g. `x1'` or `S[-1]x3`.
std::string occurrence_name(const VarOccurrence& o);

}  // namespace ddaeconn
