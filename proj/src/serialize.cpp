#include "haarcay/serialize.hpp"

#include <algorithm>
#include <cctype>

#include "haarcay/error.hpp"

namespace haarcay {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw PreconditionError(std::string("family spec needs integer field '") + key + "'");
  return j.at(key).get<int>();
}

}  // namespace

FamilySpec family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string())
    throw PreconditionError("family spec must be an object with a string 'family'");
  const std::string f = lower(j.at("family").get<std::string>());
  if (f == "cyclic" || f == "z") return {CyclicSpec{get_int(j, "n")}};
  if (f == "dihedral" || f == "d") return {DihedralSpec{get_int(j, "n")}};
  if (f == "quaternion" || f == "q8") return {QuaternionSpec{}};
  if (f == "mpmn") return {MpmnSpec{get_int(j, "p"), get_int(j, "m"), get_int(j, "n")}};
  if (f == "mpmn1") return {Mpmn1Spec{get_int(j, "p"), get_int(j, "m"), get_int(j, "n")}};
  if (f == "millermoreno" || f == "mm") {
    MillerMorenoSpec s{get_int(j, "p"), get_int(j, "n"), get_int(j, "q"), get_int(j, "m"), std::nullopt};
    if (j.contains("matrix") && !j.at("matrix").is_null()) s.matrix = j.at("matrix").get<std::vector<std::vector<int>>>();
    return {s};
  }
  if (f == "presented") {
    PresentedSpec s;
    s.ngens = get_int(j, "ngens");
    if (!j.contains("relators") || !j.at("relators").is_array())
      throw PreconditionError("Presented spec needs a 'relators' array");
    s.relators = j.at("relators").get<std::vector<std::string>>();
    if (j.contains("letters")) s.letters = j.at("letters").get<std::string>();
    return {s};
  }
  if (f == "directproduct" || f == "product") {
    if (!j.contains("factors") || !j.at("factors").is_array())
      throw PreconditionError("DirectProduct spec needs a 'factors' array");
    DirectProductSpec s;
    for (const auto& x : j.at("factors")) s.factors.push_back(family_from_json(x));
    return {s};
  }
  throw PreconditionError("unknown family '" + j.at("family").get<std::string>() + "'");
}

Json family_to_json(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) return {{"family", "Cyclic"}, {"n", s.n}};
        else if constexpr (std::is_same_v<T, DihedralSpec>) return {{"family", "Dihedral"}, {"n", s.n}};
        else if constexpr (std::is_same_v<T, QuaternionSpec>) return {{"family", "Quaternion"}};
        else if constexpr (std::is_same_v<T, MpmnSpec>) return {{"family", "MpMN"}, {"p", s.p}, {"m", s.m}, {"n", s.n}};
        else if constexpr (std::is_same_v<T, Mpmn1Spec>) return {{"family", "MpMN1"}, {"p", s.p}, {"m", s.m}, {"n", s.n}};
        else if constexpr (std::is_same_v<T, MillerMorenoSpec>) {
          Json j{{"family", "MillerMoreno"}, {"p", s.p}, {"n", s.n}, {"q", s.q}, {"m", s.m}};
          if (s.matrix) j["matrix"] = *s.matrix;
          return j;
        } else if constexpr (std::is_same_v<T, PresentedSpec>) {
          Json j{{"family", "Presented"}, {"ngens", s.ngens}, {"relators", s.relators}};
          if (!s.letters.empty()) j["letters"] = s.letters;
          return j;
        } else {
          Json f = Json::array();
          for (const auto& x : s.factors) f.push_back(family_to_json(x));
          return {{"family", "DirectProduct"}, {"factors", f}};
        }
      },
      spec.value);
}

Json group_to_json(const GroupTable& h) {
  Json gens = Json::object();
  for (const auto& g : h.gens()) gens[g.label] = g.element;
  Json table = Json::array();
  for (Element x = 0; x < h.order(); ++x) {
    Json row = Json::array();
    for (Element y = 0; y < h.order(); ++y) row.push_back(h.mul(x, y));
    table.push_back(std::move(row));
  }
  return {{"order", h.order()}, {"tag", h.family_tag()}, {"generators", gens}, {"mult", table}};
}

Json perm_to_json(const Perm& p) { return p.images(); }

Json certificate_to_json(const Certificate& c) {
  Json j{{"verdict", to_string(c.verdict)}, {"method", c.method}, {"aut_order", c.aut_order}, {"nodes", c.nodes}};
  if (!c.regular_generators.empty()) {
    Json g = Json::array();
    for (const auto& p : c.regular_generators) g.push_back(perm_to_json(p));
    j["regular_generators"] = g;
  }
  if (c.delta) j["delta"] = {{"alpha", c.delta->alpha}, {"x", c.delta->x}, {"y", c.delta->y}};
  if (!c.orbits.empty()) j["orbits"] = c.orbits;
  if (!c.budget_report.empty()) j["budget_report"] = c.budget_report;
  return j;
}

Json basic_sets_to_json(const TransitivityModule& m) { return m.basic_sets(); }

Json law_report_to_json(const LawReport& r) {
  Json laws = Json::array();
  for (const auto& l : r.laws) {
    Json x{{"law", l.law}, {"pass", l.pass}};
    if (!l.pass) x["counterexample"] = l.counterexample;
    laws.push_back(std::move(x));
  }
  return {{"pass", r.all_pass()}, {"laws", laws}};
}

}  // namespace haarcay
