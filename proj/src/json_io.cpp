#include "ncribbon/json_io.hpp"

#include <algorithm>

namespace ncribbon {

namespace {

std::string json_var_name(uint32_t v, bool multivariate) {
  std::string base = var::is_t(v) ? "t" : "q";
  if (multivariate) base += "_" + std::to_string(var::index(v));
  return base;
}

uint32_t var_from_name(const std::string& name, VarFamily family) {
  if (name.empty() || (name[0] != 'q' && name[0] != 't')) throw ParseError("bad variable " + name);
  bool is_t = name[0] == 't';
  if (name.size() == 1) {
    if (family.is_multivariate()) throw ParseError("two-param variable in a multivariate family");
    return is_t ? var::t : var::q;
  }
  if (name[1] != '_' || !family.is_multivariate())
    throw ParseError("variable does not match the family: " + name);
  uint32_t i = static_cast<uint32_t>(std::stoul(name.substr(2)));
  return is_t ? var::ti(i) : var::qi(i);
}

std::string flavor_name(BasisFlavor f) {
  return f == BasisFlavor::Multivariate ? "multivariate" : "single";
}

BasisFlavor flavor_from_name(const std::string& s) {
  if (s == "multivariate") return BasisFlavor::Multivariate;
  if (s == "single") return BasisFlavor::SingleParam;
  throw ParseError("unknown flavor " + s);
}

BasisKind kind_from_name(const std::string& s) {
  for (BasisKind k : {BasisKind::Homogeneous, BasisKind::Ribbon, BasisKind::HallLittlewood,
                      BasisKind::Macdonald, BasisKind::ModifiedMacdonald,
                      BasisKind::ModifiedHallLittlewood, BasisKind::GammaSchur})
    if (basis_kind_name(k) == s) return k;
  throw ParseError("unknown basis " + s);
}

Json parts_json(const Composition& c) {
  Json arr = Json::array();
  for (uint32_t p : c.parts()) arr.push_back(p);
  return arr;
}

Composition composition_from_json(const Json& arr) {
  std::vector<uint32_t> parts;
  for (const auto& v : arr) parts.push_back(v.get<uint32_t>());
  return Composition::from_parts(parts);
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  const bool mv = p.family().is_multivariate();
  Json arr = Json::array();
  for (const auto& term : p.terms()) {
    Json exps = Json::object();
    Monomial display = term.mono;
    std::sort(display.begin(), display.end(), [](const auto& a, const auto& b) {
      auto key = [](uint32_t v) { return std::pair(var::is_t(v), var::index(v)); };
      return key(a.first) < key(b.first);
    });
    for (const auto& [v, e] : display) exps[json_var_name(v, mv)] = e;
    arr.push_back({{"exponents", exps}, {"coefficient", term.coeff.str()}});
  }
  return arr;
}

LaurentPoly poly_from_json(const Json& j, VarFamily family) {
  LaurentPoly p(family);
  for (const auto& rec : j) {
    Monomial m;
    for (const auto& [name, e] : rec.at("exponents").items())
      m.emplace_back(var_from_name(name, family), e.get<int32_t>());
    p += LaurentPoly::monomial(family, m, Int(rec.at("coefficient").get<std::string>()));
  }
  return p;
}

Json to_json(const NcsfElement& e) {
  Json j = Json::object();
  j["degree"] = e.degree();
  j["basis"] = basis_kind_name(e.basis().kind);
  j["flavor"] = flavor_name(e.basis().flavor);
  j["inverted_t"] = e.basis().inverted_t;
  j["family"] = e.family().is_multivariate() ? Json{{"kind", "multivariate"},
                                                    {"arity", e.family().arity}}
                                             : Json{{"kind", "two-param"}};
  if (e.basis().level) j["level"] = parts_json(*e.basis().level);
  Json terms = Json::array();
  for (const auto& [c, p] : e.coeffs())
    terms.push_back({{"composition", parts_json(c)}, {"poly", to_json(p)}});
  j["terms"] = std::move(terms);
  return j;
}

NcsfElement element_from_json(const Json& j) {
  uint32_t degree = j.at("degree").get<uint32_t>();
  BasisTag tag;
  tag.kind = kind_from_name(j.at("basis").get<std::string>());
  tag.flavor = flavor_from_name(j.at("flavor").get<std::string>());
  tag.inverted_t = j.value("inverted_t", false);
  if (j.contains("level")) tag.level = composition_from_json(j.at("level"));
  VarFamily family = VarFamily::two_param();
  if (j.contains("family") && j.at("family").at("kind") == "multivariate")
    family = VarFamily::multivariate(j.at("family").at("arity").get<uint32_t>());
  else if (!j.contains("family") && tag.flavor == BasisFlavor::Multivariate)
    family = VarFamily::multivariate(degree - 1);
  NcsfElement e(degree, tag, family);
  for (const auto& rec : j.at("terms"))
    e.add_term(composition_from_json(rec.at("composition")),
               poly_from_json(rec.at("poly"), family));
  return e;
}

Json to_json(const StructuredOperator& op) {
  Json j = Json::object();
  j["degree"] = op.degree();
  if (op.ordering()) {
    j["ordering"] = {{"kind", "phi-gamma"}, {"level", parts_json(op.ordering()->gamma())}};
  } else {
    j["ordering"] = {{"kind", "phi"}};
  }
  Json factors = Json::array();
  for (uint32_t i = 1; i < op.degree(); ++i) {
    const auto& f = op.factor(i);
    Json entries = Json::array();
    for (const auto& p : f.entries) entries.push_back(to_json(p));
    factors.push_back(
        {{"descent", i}, {"rows", f.rows}, {"cols", f.cols}, {"entries", std::move(entries)}});
  }
  j["factors"] = std::move(factors);
  return j;
}

}  // namespace ncribbon
