#include "ipc/proof_io.hpp"

namespace ipc {

using nlohmann::json;

namespace {

struct JustToJson {
  json operator()(const AxiomStep& s) const {
    json subst = json::array();
    for (const auto& f : s.subst) subst.push_back(print(f));
    return {{"kind", "axiom"}, {"scheme", scheme_name(s.scheme)}, {"subst", std::move(subst)}};
  }
  json operator()(const HypStep& s) const { return {{"kind", "hyp"}, {"index", s.index}}; }
  json operator()(const MpStep& s) const { return {{"kind", "mp"}, {"major", s.major}, {"minor", s.minor}}; }
};

const json& field(const json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) throw FormatError(where + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw FormatError(where + ": missing field '" + name + "'");
  return *it;
}

Formula formula_field(const json& value, const std::string& where) {
  if (!value.is_string()) throw FormatError(where + ": formula must be a string");
  try {
    return parse(value.get<std::string>());
  } catch (const ParseError& e) {
    throw FormatError(where + ": " + e.what());
  }
}

std::size_t index_field(const json& obj, const char* name, const std::string& where) {
  const json& v = field(obj, name, where);
  if (!v.is_number_unsigned()) throw FormatError(where + ": '" + name + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

Justification just_from_json(const json& j, const std::string& where) {
  const json& kind = field(j, "kind", where);
  if (!kind.is_string()) throw FormatError(where + ": 'kind' must be a string");
  const auto k = kind.get<std::string>();
  if (k == "axiom") {
    const json& scheme = field(j, "scheme", where);
    if (!scheme.is_string()) throw FormatError(where + ": 'scheme' must be a string");
    AxiomStep step{Scheme::K, {}};
    try {
      step.scheme = scheme_from_name(scheme.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(where + ": " + e.what());
    }
    const json& subst = field(j, "subst", where);
    if (!subst.is_array()) throw FormatError(where + ": 'subst' must be an array");
    for (const auto& s : subst) step.subst.push_back(formula_field(s, where));
    return step;
  }
  if (k == "hyp") return HypStep{index_field(j, "index", where)};
  if (k == "mp") return MpStep{index_field(j, "major", where), index_field(j, "minor", where)};
  throw FormatError(where + ": unknown justification kind '" + k + "'");
}

}  // namespace

json proof_to_json(const Proof& p) {
  json hyps = json::array();
  for (const auto& h : p.hypotheses()) hyps.push_back(print(h));
  json lines = json::array();
  for (const auto& line : p.lines())
    lines.push_back({{"formula", print(line.formula)}, {"just", std::visit(JustToJson{}, line.just)}});
  return {{"hypotheses", std::move(hyps)}, {"lines", std::move(lines)}};
}

Proof proof_from_json(const json& doc) {
  const json& hyps = field(doc, "hypotheses", "document");
  const json& lines = field(doc, "lines", "document");
  if (!hyps.is_array()) throw FormatError("document: 'hypotheses' must be an array");
  if (!lines.is_array()) throw FormatError("document: 'lines' must be an array");

  std::vector<Formula> hypotheses;
  for (std::size_t i = 0; i < hyps.size(); ++i)
    hypotheses.push_back(formula_field(hyps[i], "hypothesis " + std::to_string(i)));

  std::vector<Line> out;
  out.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string where = "line " + std::to_string(i);
    Formula f = formula_field(field(lines[i], "formula", where), where);
    out.push_back(Line{std::move(f), just_from_json(field(lines[i], "just", where), where)});
  }
  return Proof(std::move(hypotheses), std::move(out));
}

std::string write_proof(const Proof& p) { return proof_to_json(p).dump() + "\n"; }

Proof read_proof(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  }
  return proof_from_json(doc);
}

}  // namespace ipc
