#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kptau/rational.hpp"

namespace kptau {

enum class VarFamily : unsigned char { T, Y };

// Variable t_i or y_i, i >= 1. Canonical order: t_1 < t_2 < ... < y_1 < y_2 < ...
// Both families carry weight i for the weighted grading (deg t_i = deg y_i = i).
struct VarId {
  VarFamily family = VarFamily::T;
  int index = 1;

  static VarId t(int i) { return {VarFamily::T, i}; }
  static VarId y(int i) { return {VarFamily::Y, i}; }
  int weight() const { return index; }

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

std::string var_name(VarId v);                       // "t3", "y1"
std::optional<VarId> parse_var_name(std::string_view);

struct VarPow {
  VarId var;
  int exp = 1;  // > 0
  friend bool operator==(const VarPow&, const VarPow&) = default;
};

// Sparse exponent vector: variables strictly increasing, exponents positive.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<VarPow> factors);  // must be canonical
  static Monomial variable(VarId v, int exp = 1);

  bool is_constant() const { return factors_.empty(); }
  long weight() const;
  int exponent_of(VarId v) const;
  const std::vector<VarPow>& factors() const { return factors_; }

  Monomial times(const Monomial& other) const;
  // Componentwise min (the gcd monomial).
  Monomial gcd(const Monomial& other) const;
  // Componentwise difference; requires other <= this componentwise.
  Monomial divided_by(const Monomial& other) const;
  bool divisible_by(const Monomial& other) const;

  // Weighted-graded order: weight first, ties broken lexicographically on the
  // factor list (earlier variable first; for equal variables the higher
  // exponent sorts first). Total, deterministic.
  std::strong_ordering order(const Monomial& other) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.order(b) < 0; }

  size_t hash() const;
  std::string to_string() const;

 private:
  std::vector<VarPow> factors_;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

using ShiftTable = std::map<int, Rational>;  // index -> constant, finite support

// Sparse exact multivariate polynomial over Q in t_i (and y_i), kept in
// canonical form: terms sorted by monomial order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational constant);
  static Polynomial variable(VarId v, int exp = 1);
  static Polynomial constant(long n) { return Polynomial(Rational(n)); }
  // Takes unsorted/duplicated terms and canonicalizes.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // -1 for the zero polynomial.
  long weighted_degree() const;
  Rational coefficient(const Monomial& m) const;
  const Term& leading_term() const;   // greatest monomial
  const Term& trailing_term() const;  // least monomial

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial&) const;
  Polynomial operator-(const Polynomial&) const;
  Polynomial operator*(const Polynomial&) const;
  Polynomial& operator+=(const Polynomial&);
  Polynomial& operator-=(const Polynomial&);
  Polynomial operator*(const Rational&) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // d/d(var_j of family); exact partial derivative.
  Polynomial diff(int j, VarFamily family = VarFamily::T) const;
  // Substitute x_k -> x_k + c_k for every entry of the table (missing read as 0).
  Polynomial shift(const ShiftTable& c, VarFamily family = VarFamily::T) const;
  // Substitute one variable by an arbitrary polynomial.
  Polynomial substitute(VarId v, const Polynomial& replacement) const;
  // Rename every T variable to the same-index Y variable (or back).
  Polynomial rename_family(VarFamily from, VarFamily to) const;
  // Evaluate with every variable of `family` set from the table (missing = 0);
  // variables of the other family must not occur.
  Rational evaluate(const ShiftTable& values, VarFamily family = VarFamily::T) const;

  // gcd of coefficients, sign chosen so content > 0; 0 for the zero polynomial.
  Rational content() const;
  Monomial monomial_content() const;
  Polynomial divided_by_monomial(const Monomial& m) const;

  // Exact division in Q[t,y]; nullopt if the division leaves a remainder.
  static std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den);

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// Fraction-free determinant (Bareiss) over the polynomial ring. Rows of `m`
// must form a square matrix.
Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m);
// Laplace-expansion determinant, kept as an independent cross-check route.
Polynomial det_poly_cofactor(const std::vector<std::vector<Polynomial>>& m);

}  // namespace kptau
