#ifndef MICROLOG_SERIALIZE_HPP
#define MICROLOG_SERIALIZE_HPP

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "microlog/derivation.hpp"
#include "microlog/formula.hpp"
#include "microlog/oracle.hpp"
#include "microlog/prover.hpp"
#include "microlog/sequent.hpp"
#include "microlog/syntax.hpp"

// JSON interchange format. Keys are emitted in the order shown; readers
// accept any key order and ignore unknown keys.
//
//   Formula         {"type":"pro","name":"p"} | {"type":"falsity"}
//                   | {"type":"imp","antecedent":F,"consequent":F}
//   Sequent         {"a":[name...],"b":[name...],"c":[F...],"d":[F...]}
//   Interpretation  [name...]   (the true atoms, sorted)
//   Derivation      {"rule":R,"conclusion":S,"premises":[D...]}
//   Verdict         {"verdict":"proved","derivation":D}
//                   | {"verdict":"refuted","countermodels":[I...],"leaves":[S...]}
//
// R is one of LShiftPro, RShiftPro, LFalsityAxiom, RFalsityDrop, LImpBranch,
// RImpMove, BasicAxiom.
namespace microlog {

using Json = nlohmann::ordered_json;

inline Json to_json_value(const PropId& id) { return id.name(); }

inline Json to_json_value(const Formula& f) {
  return f.visit(overloaded{
      [](const Formula::Pro& p) { return Json{{"type", "pro"}, {"name", p.id.name()}}; },
      [](const Formula::Falsity&) { return Json{{"type", "falsity"}}; },
      [](const Formula::Imp& imp) {
        return Json{{"type", "imp"},
                    {"antecedent", to_json_value(imp.antecedent)},
                    {"consequent", to_json_value(imp.consequent)}};
      },
  });
}

template <typename Range>
Json to_json_array(const Range& items) {
  Json out = Json::array();
  for (const auto& x : items) out.push_back(to_json_value(x));
  return out;
}

inline Json to_json_value(const Sequent& s) {
  return Json{{"a", to_json_array(s.a)}, {"b", to_json_array(s.b)}, {"c", to_json_array(s.c)}, {"d", to_json_array(s.d)}};
}

inline Json to_json_value(const Interpretation& i) { return to_json_array(i.true_props()); }

inline Json to_json_value(const Derivation& d) {
  return Json{{"rule", std::string(to_string(d.rule))},
              {"conclusion", to_json_value(d.conclusion)},
              {"premises", to_json_array(d.premises)}};
}

inline Json to_json_value(const Verdict& v) {
  if (v.proved()) return Json{{"verdict", "proved"}, {"derivation", to_json_value(v.derivation())}};
  const Refuted& r = v.refutation();
  return Json{{"verdict", "refuted"},
              {"countermodels", to_json_array(r.countermodels)},
              {"leaves", to_json_array(r.leaves)}};
}

inline Json to_json_value(const oracle::TruthTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows)
    rows.push_back(Json{{"true", to_json_value(row.interpretation)}, {"value", row.value}});
  return Json{{"atoms", to_json_array(t.atoms)}, {"rows", std::move(rows)}};
}

template <typename T>
std::string to_json(const T& x) {
  return to_json_value(x).dump();
}

namespace json_detail {

[[noreturn]] inline void schema_error(const std::string& expected, const Json& found) {
  throw ParseError(0, expected, found.is_discarded() ? "nothing" : "JSON " + std::string(found.type_name()));
}

inline const Json& field(const Json& obj, const char* key, const std::string& context) {
  if (!obj.is_object()) schema_error(context + " object", obj);
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(0, context + " with key \"" + key + "\"", "no such key");
  return *it;
}

inline PropId prop_from(const Json& j) {
  if (!j.is_string()) schema_error("proposition name string", j);
  auto name = j.get<std::string>();
  if (!PropId::is_valid(name)) throw ParseError(0, "valid proposition name", "\"" + name + "\"");
  return PropId(std::move(name));
}

inline Formula formula_from(const Json& j) {
  const Json& tag = field(j, "type", "formula");
  if (!tag.is_string()) schema_error("formula type string", tag);
  const auto type = tag.get<std::string>();
  if (type == "pro") return Formula::pro(prop_from(field(j, "name", "pro formula")));
  if (type == "falsity") return Formula::falsity();
  if (type == "imp")
    return Formula::imp(formula_from(field(j, "antecedent", "imp formula")),
                        formula_from(field(j, "consequent", "imp formula")));
  throw ParseError(0, "formula type pro, falsity or imp", "\"" + type + "\"");
}

template <typename T, typename Reader>
std::vector<T> array_from(const Json& j, Reader read, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " array", j);
  std::vector<T> out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(read(x));
  return out;
}

inline Sequent sequent_from(const Json& j) {
  return Sequent{List<PropId>::from_range(array_from<PropId>(field(j, "a", "sequent"), prop_from, "atom")),
                 List<PropId>::from_range(array_from<PropId>(field(j, "b", "sequent"), prop_from, "atom")),
                 List<Formula>::from_range(array_from<Formula>(field(j, "c", "sequent"), formula_from, "formula")),
                 List<Formula>::from_range(array_from<Formula>(field(j, "d", "sequent"), formula_from, "formula"))};
}

inline Interpretation interpretation_from(const Json& j) {
  return Interpretation::from_range(array_from<PropId>(j, prop_from, "interpretation"));
}

inline Derivation derivation_from(const Json& j) {
  const Json& name = field(j, "rule", "derivation");
  if (!name.is_string()) schema_error("rule name string", name);
  auto rule = rule_from_string(name.get<std::string>());
  if (!rule) throw ParseError(0, "rule name", "\"" + name.get<std::string>() + "\"");
  return Derivation{sequent_from(field(j, "conclusion", "derivation")), *rule,
                    array_from<Derivation>(field(j, "premises", "derivation"), derivation_from, "premise")};
}

inline Verdict verdict_from(const Json& j) {
  const Json& tag = field(j, "verdict", "verdict");
  if (tag == "proved") return Verdict{Proved{derivation_from(field(j, "derivation", "proved verdict"))}};
  if (tag == "refuted") {
    Refuted r;
    r.countermodels =
        array_from<Interpretation>(field(j, "countermodels", "refuted verdict"), interpretation_from, "countermodel");
    r.leaves = array_from<Sequent>(field(j, "leaves", "refuted verdict"), sequent_from, "leaf");
    if (r.countermodels.empty()) throw ParseError(0, "at least one countermodel", "an empty list");
    return Verdict{std::move(r)};
  }
  throw ParseError(0, "verdict \"proved\" or \"refuted\"", tag.dump());
}

inline Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t pos = e.byte == 0 ? 0 : e.byte - 1;
    if (pos > text.size()) pos = text.size();
    throw ParseError(pos, "well-formed JSON", e.what());
  }
}

}  // namespace json_detail

template <typename T>
T from_json(std::string_view text);

template <>
inline Formula from_json<Formula>(std::string_view text) {
  return json_detail::formula_from(json_detail::parse_text(text));
}
template <>
inline Sequent from_json<Sequent>(std::string_view text) {
  return json_detail::sequent_from(json_detail::parse_text(text));
}
template <>
inline Interpretation from_json<Interpretation>(std::string_view text) {
  return json_detail::interpretation_from(json_detail::parse_text(text));
}
template <>
inline Derivation from_json<Derivation>(std::string_view text) {
  return json_detail::derivation_from(json_detail::parse_text(text));
}
template <>
inline Verdict from_json<Verdict>(std::string_view text) {
  return json_detail::verdict_from(json_detail::parse_text(text));
}

}  // namespace microlog

#endif  // MICROLOG_SERIALIZE_HPP
