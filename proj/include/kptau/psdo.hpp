#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>

#include "kptau/ratfun.hpp"

namespace kptau {

enum class OpPart { plus, minus };

// Formal pseudodifferential operator sum_{floor <= j <= N} P_j(t) d^j with
// rational-function coefficients, stored left of d^j. `floor` is the lowest
// order whose coefficient is guaranteed exact; kExactFloor marks a finite
// operator that is exact at every order (absent entries are true zeros).
class PseudoDiffOp {
 public:
  static constexpr int kExactFloor = std::numeric_limits<int>::min() / 2;

  PseudoDiffOp() = default;  // zero operator, exact
  static PseudoDiffOp identity() { return d(0); }
  static PseudoDiffOp d(int order);  // the operator \partial^order
  static PseudoDiffOp monomial(RationalFunction coeff, int order);
  static PseudoDiffOp multiplication(RationalFunction f) { return monomial(std::move(f), 0); }

  int floor() const { return floor_; }
  bool is_exact() const { return floor_ == kExactFloor; }
  bool empty() const { return coeffs_.empty(); }
  // Highest stored order; floor() for an operator with no stored terms.
  int max_order() const;
  int min_order() const;
  const std::map<int, RationalFunction, std::greater<int>>& coeffs() const { return coeffs_; }
  // Zero for absent orders >= floor; throws Error(floor_too_high) below the floor.
  RationalFunction coeff(int order) const;

  void set_coeff(int order, RationalFunction f);
  void set_floor(int floor);
  // Drops coefficients below `floor` and raises the floor (never lowers it).
  PseudoDiffOp truncated(int floor) const;

  PseudoDiffOp operator-() const;
  PseudoDiffOp operator+(const PseudoDiffOp&) const;
  PseudoDiffOp operator-(const PseudoDiffOp&) const;
  PseudoDiffOp& operator+=(const PseudoDiffOp& o) { return *this = *this + o; }
  // Left multiplication by a function (coefficientwise, exact).
  PseudoDiffOp scaled(const RationalFunction& f) const;
  PseudoDiffOp scaled(const Rational& c) const { return scaled(RationalFunction(c)); }

  std::string to_string() const;

 private:
  std::map<int, RationalFunction, std::greater<int>> coeffs_;
  int floor_ = kExactFloor;
};

// Tail-depth constant K of the default working floor -(K + max order) used
// when a composition acquires an infinite tail. CLI-overridable.
int default_tail_depth();
void set_default_tail_depth(int k);

// Composition via A d^k o B d^l = sum_i binom(k,i) (d^i A) B d^{k+l-i}, with
// the generalized binomial for k < 0. The result floor is the exactness bound
// max(a.floor + b.maxorder, b.floor + a.maxorder), deepened to `work_floor`
// (default -(K + max order)) when an infinite tail appears.
PseudoDiffOp compose(const PseudoDiffOp& a, const PseudoDiffOp& b,
                     std::optional<int> work_floor = std::nullopt);
PseudoDiffOp psdo_power(const PseudoDiffOp& a, int j, std::optional<int> work_floor = std::nullopt);
PseudoDiffOp adjoint(const PseudoDiffOp& a, std::optional<int> work_floor = std::nullopt);
PseudoDiffOp project(const PseudoDiffOp& a, OpPart part);
// Coefficient of d^{-1}; throws Error(floor_too_high) if floor > -1.
RationalFunction psdo_residue(const PseudoDiffOp& a);
// Two-sided inverse of a monic operator, computed down to d^{target_floor}.
// Throws Error(not_monic) unless the leading coefficient is 1.
PseudoDiffOp psdo_inverse(const PseudoDiffOp& a, int target_floor);
// Monic n-th root d + r_0 + r_{-1} d^{-1} + ... of a monic operator of order n.
// Throws Error(not_normalizable) if the order is not n or the lead is not 1.
PseudoDiffOp psdo_nth_root(const PseudoDiffOp& a, int n, int target_floor);
PseudoDiffOp psdo_diff_t(const PseudoDiffOp& a, int j);
// Applies a differential operator (all stored orders >= 0) to a function.
RationalFunction psdo_apply(const PseudoDiffOp& a, const RationalFunction& f);

// True when every coefficient of a-b at orders >= floor vanishes; requires
// both operands exact down to `floor`.
bool equal_to_floor(const PseudoDiffOp& a, const PseudoDiffOp& b, int floor);
bool zero_to_floor(const PseudoDiffOp& a, int floor);

// Generalized binomial C(k, i) = k(k-1)...(k-i+1)/i! for any integer k.
Rational generalized_binomial(int k, int i);

}  // namespace kptau
