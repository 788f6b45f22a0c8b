#include "kptau/tau.hpp"

#include <algorithm>
#include <numeric>

#include "kptau/error.hpp"
#include "kptau/hirota.hpp"

namespace kptau {

Polynomial normalize_tau(const Polynomial& p) {
  if (p.is_zero()) fail(Errc::invalid_input, "cannot normalize the zero polynomial");
  return p * (Rational(1) / p.trailing_term().coeff);
}

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.trailing_term().coeff == b * a.trailing_term().coeff;
}

TauFunction tau_kp(const Partition& lambda, const std::vector<ShiftTable>& shifts) {
  Polynomial p = shifted_schur_tau(lambda, shifts);
  if (p.is_zero()) fail(Errc::internal, "shifted Schur tau vanished");  // cannot happen
  return {std::move(p), 0};
}

TauFunction tau_kp(const KpTauSpec& spec) { return tau_kp(spec.lambda, spec.shifts); }

KpTauSpec mkp_successor(const KpTauSpec& spec, SuccessorCase c, int mu, int index,
                        const ShiftTable& d) {
  const auto& lambda = spec.lambda.parts;
  int k = spec.lambda.size();
  if (static_cast<int>(spec.shifts.size()) != k)
    fail(Errc::invalid_input, "spec and shifts out of step");
  KpTauSpec out;
  switch (c) {
    case SuccessorCase::prepend: {
      if (mu < 1 || (k > 0 && mu < lambda[0]))
        fail(Errc::case_violation, "prepend needs mu >= lambda_1");
      std::vector<int> parts{mu};
      parts.insert(parts.end(), lambda.begin(), lambda.end());
      out.lambda = Partition(std::move(parts));
      out.shifts.push_back(d);
      out.shifts.insert(out.shifts.end(), spec.shifts.begin(), spec.shifts.end());
      return out;
    }
    case SuccessorCase::insert: {
      if (index < 1 || index > k) fail(Errc::case_violation, "insert position out of range");
      int next = (index < k) ? lambda[index] : 1;  // mu = 0 is the decrement case
      if (mu < next || mu >= lambda[index - 1])
        fail(Errc::case_violation, "insert needs lambda_i > mu >= lambda_{i+1}");
      std::vector<int> parts;
      for (int i = 0; i < index; ++i) parts.push_back(lambda[i] - 1);
      parts.push_back(mu);
      for (int i = index; i < k; ++i) parts.push_back(lambda[i]);
      out.lambda = Partition(std::move(parts));
      out.shifts.assign(spec.shifts.begin(), spec.shifts.begin() + index);
      out.shifts.push_back(d);
      out.shifts.insert(out.shifts.end(), spec.shifts.begin() + index, spec.shifts.end());
      return out;
    }
    case SuccessorCase::decrement: {
      std::vector<int> parts;
      for (int i = 0; i < k; ++i) {
        if (lambda[i] - 1 >= 1) {
          parts.push_back(lambda[i] - 1);
          out.shifts.push_back(spec.shifts[i]);
        }
      }
      out.lambda = Partition(std::move(parts));
      return out;
    }
  }
  fail(Errc::internal, "unreachable successor case");
}

namespace {

// p with every variable negated: t^alpha picks up (-1)^(sum of exponents).
Polynomial negate_vars(const Polynomial& p) {
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    long e = 0;
    for (const auto& f : t.mono.factors()) e += f.exp;
    out.push_back({t.mono, (e % 2 == 0) ? t.coeff : -t.coeff});
  }
  return Polynomial::from_terms(std::move(out));
}

}  // namespace

RationalFunction eigenfunction_from_symbol(const LaurentSymbol& f, const TauFunction& tau,
                                           Sign sign) {
  if (tau.poly.is_zero()) fail(Errc::invalid_input, "eigenfunction from a zero tau");
  int m = tau.level;
  // w^+ = z^{m} (tau(t-[z^-1])/tau) e^{t.z};  w^- = z^{-m} (tau(t+[z^-1])/tau) e^{-t.z}
  ZSeries shifted = miwa_shift(tau.poly, sign == Sign::plus ? Sign::minus : Sign::plus);
  Polynomial sum;
  for (const auto& [kz, fk] : f.coeffs) {
    if (fk == 0) continue;
    for (const auto& [mi, Ai] : shifted.coeffs) {
      // z-exponents: kz + (sign)m + mi + j = -1
      int j = -1 - kz - (sign == Sign::plus ? m : -m) - mi;
      if (j < 0) continue;
      const Polynomial& sj = elementary_schur(j);
      Polynomial piece = (sign == Sign::plus) ? sj : negate_vars(sj);
      sum += Ai * piece * fk;
    }
  }
  return RationalFunction::fraction(std::move(sum), tau.poly);
}

namespace {

// Determinant over the rational-function field, Laplace expansion with a
// bitmask memo on column subsets.
RationalFunction det_ratfun(const std::vector<std::vector<RationalFunction>>& m) {
  size_t n = m.size();
  std::vector<std::vector<std::pair<bool, RationalFunction>>> memo;
  std::function<RationalFunction(size_t, unsigned)> go = [&](size_t row,
                                                             unsigned mask) -> RationalFunction {
    if (row == n) return RationalFunction::one();
    auto& slot = memo[row][mask];
    if (slot.first) return slot.second;
    RationalFunction det;
    int sign = 1;
    for (size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) continue;
      if (!m[row][j].is_zero()) {
        RationalFunction sub = go(row + 1, mask | (1u << j));
        RationalFunction term = m[row][j] * sub;
        det = (sign > 0) ? det + term : det - term;
      }
      sign = -sign;
    }
    slot = {true, det};
    return det;
  };
  memo.assign(n, std::vector<std::pair<bool, RationalFunction>>(
                     1u << n, {false, RationalFunction{}}));
  return go(0, 0);
}

}  // namespace

RationalFunction wronskian(std::span<const RationalFunction> funcs) {
  if (funcs.empty()) return RationalFunction::one();
  size_t k = funcs.size();
  std::vector<std::vector<RationalFunction>> m(k, std::vector<RationalFunction>(k));
  for (size_t i = 0; i < k; ++i) {
    m[0][i] = funcs[i];
    for (size_t r = 1; r < k; ++r) m[r][i] = m[r - 1][i].diff(1);
  }
  return det_ratfun(m);
}

PseudoDiffOp wronskian_operator(std::span<const RationalFunction> funcs) {
  if (funcs.empty()) return PseudoDiffOp::identity();
  size_t k = funcs.size();
  if (wronskian(funcs).is_zero())
    fail(Errc::singular_wronskian, "Wronskian vanishes; operator undefined");
  // bordered (k+1) x (k+1) determinant, last column (1, d, ..., d^k),
  // expanded along the last column with the cofactors to the left
  std::vector<std::vector<RationalFunction>> cols(k + 1, std::vector<RationalFunction>(k));
  for (size_t i = 0; i < k; ++i) {
    cols[0][i] = funcs[i];
    for (size_t r = 1; r <= k; ++r) cols[r][i] = cols[r - 1][i].diff(1);
  }
  PseudoDiffOp w;
  for (size_t r = 0; r <= k; ++r) {
    std::vector<std::vector<RationalFunction>> minor;
    minor.reserve(k);
    for (size_t rr = 0; rr <= k; ++rr)
      if (rr != r) minor.push_back(cols[rr]);
    RationalFunction cof = det_ratfun(minor);
    if ((r + k) % 2 == 1) cof = -cof;
    if (!cof.is_zero()) w.set_coeff(static_cast<int>(r), std::move(cof));
  }
  return w;
}

TauFunction tau_nkdv(const Partition& lambda, int n,
                     const std::map<int, ShiftTable>& class_shifts) {
  if (n < 2) fail(Errc::invalid_input, "n-KdV wants n >= 2");
  if (!is_n_periodic(lambda, n))
    fail(Errc::not_periodic, "partition " + lambda.to_string() + " is not " +
                                 std::to_string(n) + "-periodic");
  std::map<int, ShiftTable> normalized;
  for (const auto& [r, table] : class_shifts) normalized[((r % n) + n) % n] = table;

  int k = lambda.size();
  std::vector<ShiftTable> row_shifts(k);
  std::vector<bool> class_used(n, false);
  for (int i = 1; i <= k; ++i) {
    int cls = ((lambda.parts[i - 1] - i + 1) % n + n) % n;
    class_used[cls] = true;
    auto it = normalized.find(cls);
    if (it != normalized.end()) row_shifts[i - 1] = it->second;
  }
  if (std::count(class_used.begin(), class_used.end(), true) > n - 1)
    fail(Errc::internal, "n-periodic partition uses all n residue classes");

  TauFunction tau{shifted_schur_tau(lambda, row_shifts), 0};
  // the classification guarantees independence of t_n, t_2n, ...
  long d = tau.poly.weighted_degree();
  for (long jn = n; jn <= d; jn += n)
    if (!tau.poly.diff(static_cast<int>(jn)).is_zero())
      fail(Errc::internal, "n-KdV tau depends on t_" + std::to_string(jn));
  return tau;
}

NkdvChain tau_nkdv_from_data(const NkdvData& data) {
  int n = data.n;
  if (n < 2) fail(Errc::invalid_input, "n-KdV wants n >= 2");
  if (static_cast<int>(data.pi.size()) != n || static_cast<int>(data.m.size()) != n ||
      static_cast<int>(data.shifts.size()) != n)
    fail(Errc::invalid_input, "pi, m and shifts must all have n entries");
  {
    std::vector<int> seen(n + 1, 0);
    for (int j : data.pi) {
      if (j < 1 || j > n || seen[j]++) fail(Errc::invalid_input, "pi must be a permutation of 1..n");
    }
  }
  bool has_zero = false, has_nonzero = false;
  for (int mi : data.m) {
    if (mi < 0) fail(Errc::invalid_input, "multiplicities must be non-negative");
    (mi == 0 ? has_zero : has_nonzero) = true;
  }
  if (!has_zero || !has_nonzero)
    fail(Errc::invalid_input, "need at least one zero and one nonzero multiplicity");

  // base eigenfunctions s_{l n - j_i}(t + c_i), slot order, l = 1..m_i
  std::vector<Polynomial> funcs;
  for (int i = 0; i < n; ++i)
    for (int l = 1; l <= data.m[i]; ++l)
      funcs.push_back(elementary_schur(l * n - data.pi[i]).shift(data.shifts[i]));

  auto poly_wronskian = [](const std::vector<Polynomial>& fs) -> Polynomial {
    if (fs.empty()) return Polynomial(Rational(1));
    size_t k = fs.size();
    std::vector<std::vector<Polynomial>> m(k, std::vector<Polynomial>(k));
    for (size_t i = 0; i < k; ++i) {
      m[0][i] = fs[i];
      for (size_t r = 1; r < k; ++r) m[r][i] = m[r - 1][i].diff(1);
    }
    return det_poly(m);
  };

  NkdvChain out;
  for (int r = 0; r <= n; ++r) {
    Polynomial tau_r = poly_wronskian(funcs);
    if (tau_r.is_zero())
      fail(Errc::degenerate_data, "Wronskian for tau_" + std::to_string(r) + " vanishes");
    if (r < n) out.chain.taus.push_back({tau_r, r});
    if (r == n) {
      const Polynomial& tau0 = out.chain.taus[0].poly;
      if (!proportional(tau_r, tau0))
        fail(Errc::internal, "tau_n is not a scalar multiple of tau_0");
      out.tau_n_over_tau_0 = tau_r.trailing_term().coeff / tau0.trailing_term().coeff;
    }
    if (r < n)
      funcs.push_back(
          elementary_schur((data.m[r] + 1) * n - data.pi[r]).shift(data.shifts[r]));
  }
  return out;
}

}  // namespace kptau
