#include "ddaeconn/ddae_structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ddaeconn/errors.hpp"

namespace ddaeconn {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void require_exact_keys(const json& obj, std::initializer_list<const char*> required,
                        std::initializer_list<const char*> optional, const std::string& where) {
  if (!obj.is_object()) throw SchemaViolation(where + ": expected an object");
  for (const char* key : required) {
    if (!obj.contains(key)) throw SchemaViolation(where + ": missing field \"" + key + "\"");
  }
  for (const auto& [key, _] : obj.items()) {
    auto known = [&](const char* k) { return key == k; };
    if (std::none_of(required.begin(), required.end(), known) &&
        std::none_of(optional.begin(), optional.end(), known)) {
      throw SchemaViolation(where + ": unknown field \"" + key + "\"");
    }
  }
}

int get_int(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw SchemaViolation(where + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

std::string default_label(EqId i) { return "F" + std::to_string(i); }

std::string occurrence_name(const VarOccurrence& o) {
  std::string name;
  if (o.shift != 0) name = "S[" + std::to_string(o.shift) + "]";
  name += "x" + std::to_string(o.var);
  name.append(static_cast<std::size_t>(std::max(o.deriv, 0)), '\'');
  return name;
}

DdaeStructure parse_ddae(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw MalformedDocument(std::string("malformed JSON: ") + e.what());
  }

  require_exact_keys(doc, {"n_equations", "n_variables", "equations"}, {}, "document");
  DdaeStructure s;
  s.n_equations = get_int(doc, "n_equations", "document");
  s.n_variables = get_int(doc, "n_variables", "document");
  if (s.n_equations < 1) throw SchemaViolation("n_equations must be >= 1");
  if (s.n_variables < 1) throw SchemaViolation("n_variables must be >= 1");

  const json& eqs = doc.at("equations");
  if (!eqs.is_array()) throw SchemaViolation("\"equations\" must be an array");
  if (eqs.size() != static_cast<std::size_t>(s.n_equations)) {
    throw IndexOutOfRange("expected " + std::to_string(s.n_equations) + " equations, got " +
                          std::to_string(eqs.size()));
  }

  s.equations.resize(static_cast<std::size_t>(s.n_equations));
  std::vector<bool> seen(static_cast<std::size_t>(s.n_equations), false);
  for (const json& e : eqs) {
    require_exact_keys(e, {"index", "occurrences"}, {"label"}, "equation");
    const int index = get_int(e, "index", "equation");
    const std::string where = "equation " + std::to_string(index);
    if (index < 1 || index > s.n_equations) {
      throw IndexOutOfRange("equation index " + std::to_string(index) + " outside 1.." +
                            std::to_string(s.n_equations));
    }
    if (seen[static_cast<std::size_t>(index - 1)]) {
      throw IndexOutOfRange("equation index " + std::to_string(index) + " given twice");
    }
    seen[static_cast<std::size_t>(index - 1)] = true;

    EquationStruct& out = s.equations[static_cast<std::size_t>(index - 1)];
    out.index = index;
    if (e.contains("label")) {
      if (!e.at("label").is_string()) throw SchemaViolation(where + ": \"label\" must be a string");
      out.label = e.at("label").get<std::string>();
    } else {
      out.label = default_label(index);
    }

    const json& occs = e.at("occurrences");
    if (!occs.is_array()) throw SchemaViolation(where + ": \"occurrences\" must be an array");
    std::set<VarOccurrence> unique;
    for (const json& o : occs) {
      require_exact_keys(o, {"var", "shift", "deriv"}, {}, where + " occurrence");
      VarOccurrence occ{get_int(o, "var", where), get_int(o, "shift", where),
                        get_int(o, "deriv", where)};
      if (occ.var < 1 || occ.var > s.n_variables) {
        throw IndexOutOfRange(where + ": variable index " + std::to_string(occ.var) +
                              " outside 1.." + std::to_string(s.n_variables));
      }
      if (occ.shift < -1) throw SchemaViolation(where + ": shift must be >= -1");
      if (occ.deriv < 0) throw SchemaViolation(where + ": deriv must be >= 0");
      if (!unique.insert(occ).second) {
        throw DuplicateOccurrence(where + ": occurrence " + occurrence_name(occ) + " listed twice");
      }
      out.occurrences.push_back(occ);
    }
  }
  return s;
}

std::string serialize_ddae(const DdaeStructure& s) {
  ordered_json eqs = ordered_json::array();
  for (const EquationStruct& e : s.equations) {
    std::vector<VarOccurrence> occs = e.occurrences;
    std::sort(occs.begin(), occs.end());
    ordered_json jo = ordered_json::array();
    for (const VarOccurrence& o : occs) {
      jo.push_back({{"var", o.var}, {"shift", o.shift}, {"deriv", o.deriv}});
    }
    eqs.push_back({{"index", e.index}, {"label", e.label}, {"occurrences", std::move(jo)}});
  }
  ordered_json doc = {{"n_equations", s.n_equations},
              {"n_variables", s.n_variables},
              {"equations", std::move(eqs)}};
  return doc.dump();
}

std::vector<std::string> validate(const DdaeStructure& s) {
  std::vector<std::string> out;
  if (s.n_equations < 1) out.push_back("n_equations must be >= 1");
  if (s.n_variables < 1) out.push_back("n_variables must be >= 1");
  if (s.equations.size() != static_cast<std::size_t>(std::max(s.n_equations, 0))) {
    out.push_back("equation count " + std::to_string(s.equations.size()) +
                  " differs from n_equations " + std::to_string(s.n_equations));
  }
  for (std::size_t pos = 0; pos < s.equations.size(); ++pos) {
    const EquationStruct& e = s.equations[pos];
    const std::string where = "equation at position " + std::to_string(pos + 1);
    if (e.index != static_cast<EqId>(pos + 1)) {
      out.push_back(where + " has index " + std::to_string(e.index));
    }
    std::set<VarOccurrence> unique;
    for (const VarOccurrence& o : e.occurrences) {
      if (o.var < 1 || o.var > s.n_variables) {
        out.push_back(where + ": variable index " + std::to_string(o.var) + " out of range");
      }
      if (o.shift < -1) out.push_back(where + ": shift " + std::to_string(o.shift) + " < -1");
      if (o.deriv < 0) out.push_back(where + ": deriv " + std::to_string(o.deriv) + " < 0");
      if (!unique.insert(o).second) {
        out.push_back(where + ": duplicate occurrence " + occurrence_name(o));
      }
    }
  }
  return out;
}

}  // namespace ddaeconn
