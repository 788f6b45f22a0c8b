#include "support/oracles.hpp"

#include <algorithm>

namespace kptau::testing {

Rational rand_rational(std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(num(rng), den(rng));
}

Rational rand_nonzero_rational(std::mt19937& rng, int bound) {
  Rational r;
  do {
    r = rand_rational(rng, bound);
  } while (r == 0);
  return r;
}

ShiftTable rand_shift_table(std::mt19937& rng, int max_index, int bound) {
  ShiftTable t;
  for (int i = 1; i <= max_index; ++i) {
    Rational r = rand_rational(rng, bound);
    if (r != 0) t[i] = r;
  }
  return t;
}

Polynomial rand_poly(std::mt19937& rng, int max_var, int max_exp, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> var(1, max_var);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<VarPow> factors;
    for (int v = 1; v <= max_var; ++v) {
      int e = exp(rng);
      if (e > 0) factors.push_back({VarId::t(v), e});
    }
    terms.push_back({Monomial(std::move(factors)), rand_rational(rng)});
  }
  return Polynomial::from_terms(std::move(terms));
}

namespace {

// Fill the tableau cell by cell (row-major): rows weakly increase, columns
// strictly increase. Accumulates x^T over all fillings with entries 1..nvars.
void fill_tableau(const Partition& shape, int nvars, size_t cell,
                  std::vector<std::vector<int>>& t, std::vector<Term>& acc) {
  size_t total = 0;
  for (int p : shape.parts) total += static_cast<size_t>(p);
  if (cell == total) {
    std::vector<int> count(static_cast<size_t>(nvars) + 1, 0);
    for (size_t r = 0; r < t.size(); ++r)
      for (int v : t[r]) ++count[static_cast<size_t>(v)];
    std::vector<VarPow> factors;
    for (int v = 1; v <= nvars; ++v)
      if (count[static_cast<size_t>(v)] > 0)
        factors.push_back({VarId::y(v), count[static_cast<size_t>(v)]});
    acc.push_back({Monomial(std::move(factors)), Rational(1)});
    return;
  }
  // locate the cell
  size_t r = 0, c = cell;
  while (c >= static_cast<size_t>(shape.parts[r])) {
    c -= static_cast<size_t>(shape.parts[r]);
    ++r;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, t[r][c - 1]);                       // row weakly increasing
  if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);                   // column strictly increasing
  for (int v = lo; v <= nvars; ++v) {
    t[r][c] = v;
    fill_tableau(shape, nvars, cell + 1, t, acc);
  }
}

}  // namespace

Polynomial tableau_schur(const Partition& lambda, int nvars) {
  if (lambda.empty()) return Polynomial(Rational(1));
  std::vector<std::vector<int>> t;
  for (int p : lambda.parts) t.emplace_back(static_cast<size_t>(p), 0);
  std::vector<Term> acc;
  fill_tableau(lambda, nvars, 0, t, acc);
  return Polynomial::from_terms(std::move(acc));
}

Polynomial power_sum_substitute(const Polynomial& in_t, int nvars) {
  Polynomial out = in_t;
  long maxdeg = std::max<long>(in_t.weighted_degree(), 0);
  for (int k = 1; k <= maxdeg; ++k) {
    std::vector<Term> pk;
    for (int v = 1; v <= nvars; ++v)
      pk.push_back({Monomial::variable(VarId::y(v), k), Rational(1, k)});
    out = out.substitute(VarId::t(k), Polynomial::from_terms(std::move(pk)));
  }
  return out;
}

PseudoDiffOp rand_psdo(std::mt19937& rng, int max_order, int floor) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> expd(0, 2);
  PseudoDiffOp op;
  op.set_floor(floor);
  for (int o = max_order; o >= floor; --o) {
    if (pick(rng) == 0) continue;  // sparse
    Monomial num = Monomial::variable(VarId::t(1), expd(rng)).times(
        Monomial::variable(VarId::t(2), expd(rng)));
    Monomial den = Monomial::variable(VarId::t(1), expd(rng));
    RationalFunction c = RationalFunction::fraction(
        Polynomial::from_terms({{num, rand_nonzero_rational(rng, 5)}}),
        Polynomial::from_terms({{den, Rational(1)}}));
    op.set_coeff(o, std::move(c));
  }
  if (op.empty()) op.set_coeff(max_order, RationalFunction::one());
  return op;
}

bool t1_integrable(const RationalFunction& f) {
  if (f.is_zero()) return true;
  Polynomial den = f.den();
  if (den.term_count() != 1) return false;  // not the Laurent class this probe handles
  int den_exp = den.leading_term().mono.exponent_of(VarId::t(1));
  for (const auto& t : f.num().terms())
    if (t.mono.exponent_of(VarId::t(1)) - den_exp == -1) return false;
  return true;
}

}  // namespace kptau::testing
