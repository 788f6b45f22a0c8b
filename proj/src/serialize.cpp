#include "kptau/serialize.hpp"

#include <algorithm>

#include "kptau/error.hpp"

namespace kptau {

Json poly_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json exps = Json::object();
    for (const auto& f : t.mono.factors()) exps[var_name(f.var)] = f.exp;
    terms.push_back({{"coeff", rational_to_string(t.coeff)}, {"exps", exps}});
  }
  return terms;
}

Polynomial poly_from_json(const Json& j) {
  if (!j.is_array()) fail(Errc::invalid_input, "polynomial JSON must be an array of terms");
  std::vector<Term> terms;
  for (const auto& item : j) {
    if (!item.contains("coeff")) fail(Errc::invalid_input, "term without coeff");
    Rational c = parse_rational(item.at("coeff").get<std::string>());
    std::vector<VarPow> factors;
    if (item.contains("exps")) {
      for (const auto& [name, exp] : item.at("exps").items()) {
        auto var = parse_var_name(name);
        if (!var) fail(Errc::invalid_input, "unknown variable '" + name + "'");
        int e = exp.get<int>();
        if (e < 1) fail(Errc::invalid_input, "exponents must be positive");
        factors.push_back({*var, e});
      }
    }
    std::sort(factors.begin(), factors.end(),
              [](const VarPow& a, const VarPow& b) { return a.var < b.var; });
    for (size_t i = 1; i < factors.size(); ++i)
      if (factors[i].var == factors[i - 1].var)
        fail(Errc::invalid_input, "duplicate variable in term");
    terms.push_back({Monomial(std::move(factors)), std::move(c)});
  }
  return Polynomial::from_terms(std::move(terms));
}

Json ratfun_to_json(const RationalFunction& f) {
  return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RationalFunction ratfun_from_json(const Json& j) {
  if (j.is_array()) return RationalFunction(poly_from_json(j));  // bare polynomial
  Polynomial num = poly_from_json(j.at("num"));
  Polynomial den =
      j.contains("den") ? poly_from_json(j.at("den")) : Polynomial(Rational(1));
  return RationalFunction::fraction(std::move(num), std::move(den));
}

Json shift_table_to_json(const ShiftTable& c) {
  Json out = Json::object();
  for (const auto& [idx, v] : c)
    if (v != 0) out[std::to_string(idx)] = rational_to_string(v);
  return out;
}

ShiftTable shift_table_from_json(const Json& j) {
  if (!j.is_object()) fail(Errc::invalid_input, "shift table must be a JSON object");
  ShiftTable out;
  for (const auto& [key, val] : j.items()) {
    int idx = 0;
    try {
      idx = std::stoi(key);
    } catch (...) {
      fail(Errc::invalid_input, "shift table key '" + key + "' is not an index");
    }
    if (idx < 1) fail(Errc::invalid_input, "shift table indices start at 1");
    Rational r = parse_rational(val.get<std::string>());
    if (r != 0) out[idx] = std::move(r);
  }
  return out;
}

Json tau_to_json(const TauFunction& t) {
  return Json{{"level", t.level}, {"poly", poly_to_json(t.poly)}};
}

TauFunction tau_from_json(const Json& j) {
  if (j.is_array()) return {poly_from_json(j), 0};  // bare polynomial, level 0
  TauFunction t;
  t.poly = poly_from_json(j.at("poly"));
  t.level = j.value("level", 0);
  return t;
}

Json chain_to_json(const TauChain& c) {
  Json out = Json::array();
  for (const auto& t : c.taus) out.push_back(tau_to_json(t));
  return out;
}

TauChain chain_from_json(const Json& j) {
  if (!j.is_array()) fail(Errc::invalid_input, "chain must be a JSON array");
  TauChain c;
  for (const auto& item : j) c.taus.push_back(tau_from_json(item));
  for (size_t i = 1; i < c.taus.size(); ++i)
    if (c.taus[i].level != c.taus[i - 1].level + 1)
      fail(Errc::invalid_input, "chain levels must be consecutive");
  return c;
}

Json psdo_to_json(const PseudoDiffOp& op) {
  Json coeffs = Json::object();
  for (const auto& [o, c] : op.coeffs()) coeffs[std::to_string(o)] = ratfun_to_json(c);
  Json out{{"coeffs", coeffs}};
  if (!op.is_exact()) out["floor"] = op.floor();
  return out;
}

PseudoDiffOp psdo_from_json(const Json& j) {
  PseudoDiffOp op;
  if (j.contains("floor")) op.set_floor(j.at("floor").get<int>());
  for (const auto& [key, val] : j.at("coeffs").items()) {
    int order = 0;
    try {
      order = std::stoi(key);
    } catch (...) {
      fail(Errc::invalid_input, "operator order '" + key + "' is not an integer");
    }
    op.set_coeff(order, ratfun_from_json(val));
  }
  return op;
}

Json spectrum_to_json(const PeriodicSpectrum& v) {
  return Json{{"head", v.head}, {"tail_start", v.tail_start}};
}

Json verdict_to_json(const Verdict& v) {
  Json out{{"pass", v.pass}};
  if (v.witness) {
    Json exps = Json::object();
    for (const auto& f : v.witness->mono.factors()) exps[var_name(f.var)] = f.exp;
    out["witness"] = Json{{"coeff", rational_to_string(v.witness->coeff)}, {"monomial", exps}};
  } else {
    out["witness"] = nullptr;
  }
  if (!v.checked.empty()) {
    Json checked = Json::array();
    for (const auto& t : v.checked) checked.push_back({t[0], t[1], t[2]});
    out["checked"] = checked;
  }
  if (!v.detail.empty()) {
    Json detail = Json::parse(v.detail, nullptr, false);
    out["detail"] = detail.is_discarded() ? Json(v.detail) : detail;
  }
  return out;
}

Json laurent_to_json(const LaurentSymbol& f) {
  Json out = Json::object();
  for (const auto& [k, c] : f.coeffs)
    if (c != 0) out[std::to_string(k)] = rational_to_string(c);
  return out;
}

LaurentSymbol laurent_from_json(const Json& j) {
  LaurentSymbol f;
  for (const auto& [key, val] : j.items()) {
    int k = 0;
    try {
      k = std::stoi(key);
    } catch (...) {
      fail(Errc::invalid_input, "Laurent exponent '" + key + "' is not an integer");
    }
    Rational c = parse_rational(val.get<std::string>());
    if (c != 0) f.coeffs[k] = std::move(c);
  }
  return f;
}

std::string dump_canonical(const Json& j, bool pretty) {
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace kptau
