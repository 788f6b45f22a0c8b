#include "kptau/ratfun.hpp"

#include <algorithm>

#include "kptau/error.hpp"

namespace kptau {

bool PolyOrder::operator()(const Polynomial& a, const Polynomial& b) const {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  size_t n = std::min(ta.size(), tb.size());
  for (size_t i = 0; i < n; ++i) {
    auto ord = ta[i].mono.order(tb[i].mono);
    if (ord != std::strong_ordering::equal) return ord < 0;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)) {}

RationalFunction RationalFunction::fraction(Polynomial num, Polynomial den) {
  if (den.is_zero()) fail(Errc::division_by_zero, "rational function with zero denominator");
  RationalFunction f(std::move(num));
  f.push_den_factor(std::move(den), 1);
  f.reduce();
  return f;
}

bool RationalFunction::is_one() const {
  if (den_mono_.is_constant() && den_factors_.empty()) return num_ == Polynomial(Rational(1));
  return num_ == den();
}

bool RationalFunction::is_constant() const {
  return den_mono_.is_constant() && den_factors_.empty() && num_.is_constant();
}

Polynomial RationalFunction::den() const {
  Polynomial d = Polynomial::from_terms({{den_mono_, Rational(1)}});
  for (const auto& [f, e] : den_factors_)
    for (int i = 0; i < e; ++i) d = d * f;
  return d;
}

void RationalFunction::push_den_factor(Polynomial f, int exp) {
  if (exp == 0) return;
  if (f.is_zero()) fail(Errc::division_by_zero, "zero denominator factor");
  // peel off the monomial part and the content; fold scalars into the numerator
  Monomial mono = f.monomial_content();
  if (!mono.is_constant()) {
    f = f.divided_by_monomial(mono);
    for (int i = 0; i < exp; ++i) den_mono_ = den_mono_.times(mono);
  }
  Rational c = f.content();
  if (f.leading_term().coeff < 0) c = -c;
  if (c != 1) {
    f = f * (Rational(1) / c);
    Rational scale(1);
    for (int i = 0; i < exp; ++i) scale /= c;
    num_ = num_ * scale;
  }
  if (f.is_constant()) return;  // became 1
  den_factors_[std::move(f)] += exp;
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_mono_ = Monomial{};
    den_factors_.clear();
    return;
  }
  if (!den_mono_.is_constant()) {
    Monomial g = num_.monomial_content().gcd(den_mono_);
    if (!g.is_constant()) {
      num_ = num_.divided_by_monomial(g);
      den_mono_ = den_mono_.divided_by(g);
    }
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  // common denominator: lcm of the monomial parts, factorwise max exponents
  Monomial g = den_mono_.gcd(other.den_mono_);
  Monomial lift_a = other.den_mono_.divided_by(g);  // multiply into a's side
  Monomial lift_b = den_mono_.divided_by(g);

  RationalFunction out;
  out.den_mono_ = den_mono_.times(lift_a);
  out.den_factors_ = den_factors_;
  for (const auto& [f, e] : other.den_factors_) {
    auto it = out.den_factors_.find(f);
    if (it == out.den_factors_.end())
      out.den_factors_[f] = e;
    else
      it->second = std::max(it->second, e);
  }
  Polynomial mult_a = Polynomial::from_terms({{lift_a, Rational(1)}});
  Polynomial mult_b = Polynomial::from_terms({{lift_b, Rational(1)}});
  for (const auto& [f, e] : out.den_factors_) {
    auto ita = den_factors_.find(f);
    int ea = ita == den_factors_.end() ? 0 : ita->second;
    auto itb = other.den_factors_.find(f);
    int eb = itb == other.den_factors_.end() ? 0 : itb->second;
    for (int i = ea; i < e; ++i) mult_a = mult_a * f;
    for (int i = eb; i < e; ++i) mult_b = mult_b * f;
  }
  out.num_ = num_ * mult_a + other.num_ * mult_b;
  out.reduce();
  return out;
}

RationalFunction RationalFunction::operator-(const RationalFunction& other) const {
  return *this + (-other);
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
  if (is_zero() || other.is_zero()) return {};
  RationalFunction out;
  out.num_ = num_ * other.num_;
  out.den_mono_ = den_mono_.times(other.den_mono_);
  out.den_factors_ = den_factors_;
  for (const auto& [f, e] : other.den_factors_) out.den_factors_[f] += e;
  out.reduce();
  return out;
}

RationalFunction RationalFunction::operator*(const Rational& c) const {
  if (c == 0) return {};
  RationalFunction out = *this;
  out.num_ = out.num_ * c;
  return out;
}

RationalFunction RationalFunction::operator/(const RationalFunction& other) const {
  if (other.is_zero()) fail(Errc::division_by_zero, "division by zero rational function");
  if (is_zero()) return {};
  RationalFunction out;
  out.num_ = num_ * other.den();
  out.den_mono_ = den_mono_;
  out.den_factors_ = den_factors_;
  out.push_den_factor(other.num_, 1);
  out.reduce();
  return out;
}

RationalFunction RationalFunction::diff(int j, VarFamily family) const {
  if (is_zero()) return {};
  // d(num/D) = num'/D - num * (D'/D) / D with D = mono * prod f_i^{e_i}
  RationalFunction out;
  out.num_ = num_.diff(j, family);
  out.den_mono_ = den_mono_;
  out.den_factors_ = den_factors_;

  VarId v{family, j};
  int mono_exp = den_mono_.exponent_of(v);
  if (mono_exp > 0) {
    RationalFunction part;
    part.num_ = num_ * Rational(-mono_exp);
    part.den_mono_ = den_mono_.times(Monomial::variable(v));
    part.den_factors_ = den_factors_;
    part.reduce();
    out += part;
  }
  for (const auto& [f, e] : den_factors_) {
    Polynomial fd = f.diff(j, family);
    if (fd.is_zero()) continue;
    RationalFunction part;
    part.num_ = num_ * fd * Rational(-e);
    part.den_mono_ = den_mono_;
    part.den_factors_ = den_factors_;
    part.den_factors_[f] += 1;
    part.reduce();
    out += part;
  }
  out.reduce();
  return out;
}

bool RationalFunction::equals(const RationalFunction& other) const {
  if (den_mono_ == other.den_mono_ && den_factors_ == other.den_factors_)
    return num_ == other.num_;
  return num_ * other.den() == other.num_ * den();
}

std::string RationalFunction::to_string() const {
  if (den_mono_.is_constant() && den_factors_.empty()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den().to_string() + ")";
}

}  // namespace kptau
