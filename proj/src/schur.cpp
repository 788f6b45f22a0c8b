#include "kptau/schur.hpp"

#include <mutex>

#include "kptau/error.hpp"

namespace kptau {

namespace {
std::mutex g_schur_mutex;
std::vector<Polynomial> g_schur_cache;  // s_0, s_1, ...
const Polynomial g_zero;
}  // namespace

const Polynomial& elementary_schur(int j) {
  if (j < 0) return g_zero;
  std::lock_guard<std::mutex> lock(g_schur_mutex);
  if (g_schur_cache.empty()) g_schur_cache.push_back(Polynomial(Rational(1)));
  // j s_j = sum_{i=1..j} i t_i s_{j-i}, from d/dz of the generating function
  while (static_cast<int>(g_schur_cache.size()) <= j) {
    int m = static_cast<int>(g_schur_cache.size());
    Polynomial sum;
    for (int i = 1; i <= m; ++i)
      sum += Polynomial::variable(VarId::t(i)) * g_schur_cache[m - i] * Rational(i);
    g_schur_cache.push_back(sum * Rational(1, m));
  }
  return g_schur_cache[j];
}

Polynomial schur_of_partition(const Partition& lambda) {
  return shifted_schur_tau(lambda, std::vector<ShiftTable>(lambda.size()));
}

Polynomial shifted_schur_tau(const Partition& lambda, const std::vector<ShiftTable>& shifts) {
  int k = lambda.size();
  if (static_cast<int>(shifts.size()) != k)
    fail(Errc::invalid_input, "need one shift table per partition row");
  if (k == 0) return Polynomial(Rational(1));
  std::vector<std::vector<Polynomial>> m(k, std::vector<Polynomial>(k));
  for (int i = 1; i <= k; ++i) {
    // each row shares one shift table; shift the largest entry once and read
    // the rest off as t_1-derivatives (ds_j/dt_1 = s_{j-1})
    Polynomial row = elementary_schur(lambda.parts[i - 1] + k - i).shift(shifts[i - 1]);
    for (int j = k; j >= 1; --j) {
      m[i - 1][j - 1] = row;
      if (j > 1) row = row.diff(1);
    }
  }
  return det_poly(m);
}

ShiftTable constants_from_coefficients_recursive(const std::vector<Rational>& a, int M) {
  if (static_cast<int>(a.size()) != M)
    fail(Errc::invalid_input, "need coefficients a_0..a_{M-1}");
  ShiftTable c;
  for (int j = 1; j <= M; ++j) {
    // s_j(c) = c_j + p_j(c_1,...,c_{j-1}) = a_{M-j}
    Polynomial tail = elementary_schur(j) - Polynomial::variable(VarId::t(j));
    c[j] = a[M - j] - tail.evaluate(c);
  }
  return c;
}

ShiftTable constants_from_coefficients_series(const std::vector<Rational>& a, int M) {
  if (static_cast<int>(a.size()) != M)
    fail(Errc::invalid_input, "need coefficients a_0..a_{M-1}");
  // c_k = [z^k] log(1 + u), u = sum_{j=1..M} a_{M-j} z^j, truncated at z^M
  std::vector<Rational> u(M + 1, Rational(0));
  for (int j = 1; j <= M; ++j) u[j] = a[M - j];
  std::vector<Rational> log(M + 1, Rational(0)), upow(u);
  for (int r = 1; r <= M; ++r) {
    if (r > 1) {
      std::vector<Rational> next(M + 1, Rational(0));
      for (int i = r - 1; i <= M; ++i)
        for (int j = 1; i + j <= M; ++j) next[i + j] += upow[i] * u[j];
      upow = std::move(next);
    }
    Rational sign = (r % 2 == 1) ? Rational(1) : Rational(-1);
    for (int k = r; k <= M; ++k) log[k] += sign * upow[k] / r;
  }
  ShiftTable c;
  for (int k = 1; k <= M; ++k) c[k] = log[k];
  return c;
}

ShiftTable constants_from_coefficients(const std::vector<Rational>& a, int M) {
  ShiftTable rec = constants_from_coefficients_recursive(a, M);
  ShiftTable ser = constants_from_coefficients_series(a, M);
  if (rec != ser)
    fail(Errc::internal, "constant-recovery routes disagree");
  return rec;
}

}  // namespace kptau
