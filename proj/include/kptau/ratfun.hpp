#pragma once

#include <map>
#include <string>

#include "kptau/polynomial.hpp"

namespace kptau {

// Deterministic total order on canonical polynomials (used for map keys).
struct PolyOrder {
  bool operator()(const Polynomial& a, const Polynomial& b) const;
};

// Exact rational function num/den over Q[t,y]. The denominator is held in a
// lazily factored shape (monomial part times primitive polynomial factors with
// exponents), which keeps sums and derivatives of tau-quotients from
// multiplying denominators together. Reduction is limited to integer content
// and the common monomial factor; no polynomial GCD is ever computed.
// Equality is decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() = default;  // zero
  explicit RationalFunction(Polynomial num);
  explicit RationalFunction(Rational c) : RationalFunction(Polynomial(std::move(c))) {}
  static RationalFunction fraction(Polynomial num, Polynomial den);
  static RationalFunction one() { return RationalFunction(Rational(1)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const;  // element of Q
  const Polynomial& num() const { return num_; }
  Polynomial den() const;  // materialized denominator (primitive, positive content)

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction&) const;
  RationalFunction operator-(const RationalFunction&) const;
  RationalFunction operator*(const RationalFunction&) const;
  // Throws Error(division_by_zero) when dividing by zero.
  RationalFunction operator/(const RationalFunction&) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction operator*(const Rational& c) const;

  // d/d(t_j) by the quotient rule (or of any family's variable).
  RationalFunction diff(int j, VarFamily family = VarFamily::T) const;

  bool equals(const RationalFunction&) const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.equals(b);
  }

  std::string to_string() const;

 private:
  void push_den_factor(Polynomial f, int exp);
  void reduce();

  Polynomial num_;
  Monomial den_mono_;
  std::map<Polynomial, int, PolyOrder> den_factors_;
};

}  // namespace kptau
