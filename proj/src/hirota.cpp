#include "kptau/hirota.hpp"

#include <mutex>
#include <unordered_map>

#include "kptau/error.hpp"

namespace kptau {

namespace {

// Hash-map accumulator for large polynomial sums of products.
struct PolyAccum {
  std::unordered_map<Monomial, Rational, MonomialHash> acc;

  void add(const Polynomial& p) {
    for (const auto& t : p.terms()) acc[t.mono] += t.coeff;
  }
  void add_product(const Polynomial& a, const Polynomial& b) {
    for (const auto& ta : a.terms())
      for (const auto& tb : b.terms()) acc[ta.mono.times(tb.mono)] += ta.coeff * tb.coeff;
  }
  Polynomial take() {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) out.push_back({m, std::move(c)});
    acc.clear();
    return Polynomial::from_terms(std::move(out));
  }
};

}  // namespace

ZSeries miwa_shift(const Polynomial& tau, Sign sign) {
  Rational s = (sign == Sign::plus) ? Rational(1) : Rational(-1);
  std::map<int, std::vector<Term>> buckets;
  std::vector<VarPow> mono_acc;

  // expand each monomial product over (t_i + s z^{-i}/i)^{e_i}
  for (const auto& term : tau.terms()) {
    const auto& factors = term.mono.factors();
    auto walk = [&](auto&& self, size_t idx, int zdrop, const Rational& coeff) -> void {
      if (idx == factors.size()) {
        std::vector<VarPow> mono = mono_acc;
        buckets[-zdrop].push_back({Monomial(std::move(mono)), coeff});
        return;
      }
      const VarPow& f = factors[idx];
      if (f.var.family != VarFamily::T)
        fail(Errc::invalid_input, "Miwa shift of a polynomial with y-variables");
      Rational binom(1);
      Rational step = s / f.var.index;  // contribution of one z^{-i} slot
      Rational cpow(1);
      for (int j = 0; j <= f.exp; ++j) {
        if (j < f.exp) mono_acc.push_back({f.var, f.exp - j});
        self(self, idx + 1, zdrop + f.var.index * j, coeff * binom * cpow);
        if (j < f.exp) mono_acc.pop_back();
        binom = binom * (f.exp - j) / (j + 1);
        cpow *= step;
      }
    };
    walk(walk, 0, 0, term.coeff);
  }
  ZSeries out;
  for (auto& [z, terms] : buckets) {
    Polynomial p = Polynomial::from_terms(std::move(terms));
    if (!p.is_zero()) out.coeffs[z] = std::move(p);
  }
  return out;
}

namespace {

std::mutex g_exp_mutex;
std::vector<Polynomial> g_exp_cache;  // s_m(t - y)

// s_m with t_i replaced by -t_i (every monomial picks up parity of its
// exponent sum), then renamed into the y family.
Polynomial schur_negated_in_y(int m) {
  const Polynomial& s = elementary_schur(m);
  std::vector<Term> out;
  out.reserve(s.terms().size());
  for (const auto& t : s.terms()) {
    long e = 0;
    for (const auto& f : t.mono.factors()) e += f.exp;
    out.push_back({t.mono, (e % 2 == 0) ? t.coeff : -t.coeff});
  }
  return Polynomial::from_terms(std::move(out)).rename_family(VarFamily::T, VarFamily::Y);
}

}  // namespace

const Polynomial& exp_coefficient(int m) {
  static const Polynomial zero;
  if (m < 0) return zero;
  std::lock_guard<std::mutex> lock(g_exp_mutex);
  while (static_cast<int>(g_exp_cache.size()) <= m) {
    int mm = static_cast<int>(g_exp_cache.size());
    // s_m(t - y) = sum_{i+j=m} s_i(t) s_j(-y): disjoint variables, plain merge
    PolyAccum acc;
    for (int i = 0; i <= mm; ++i) acc.add_product(elementary_schur(i), schur_negated_in_y(mm - i));
    g_exp_cache.push_back(acc.take());
  }
  return g_exp_cache[m];
}

namespace {

// [z^{-a}] tau(t -+ [z^{-1}]) as a dense vector indexed by a = 0..deg.
std::vector<Polynomial> miwa_coeff_list(const Polynomial& tau, Sign sign) {
  ZSeries zs = miwa_shift(tau, sign);
  long deg = std::max<long>(tau.weighted_degree(), 0);
  std::vector<Polynomial> out(static_cast<size_t>(deg) + 1);
  for (auto& [z, p] : zs.coeffs) out[static_cast<size_t>(-z)] = std::move(p);
  return out;
}

// Substitute t_i -> t_i - u_i (u living in the y-variable slots).
Polynomial contract_to_u(const Polynomial& p) {
  std::vector<Term> out;
  std::vector<VarPow> mono_acc;
  for (const auto& term : p.terms()) {
    const auto& factors = term.mono.factors();
    auto walk = [&](auto&& self, size_t idx, const Rational& coeff) -> void {
      if (idx == factors.size()) {
        std::vector<VarPow> tpart, ypart;
        for (const auto& f : mono_acc)
          (f.var.family == VarFamily::T ? tpart : ypart).push_back(f);
        tpart.insert(tpart.end(), ypart.begin(), ypart.end());
        out.push_back({Monomial(std::move(tpart)), coeff});
        return;
      }
      const VarPow& f = factors[idx];
      Rational binom(1);
      for (int j = 0; j <= f.exp; ++j) {
        if (j < f.exp) mono_acc.push_back({VarId::t(f.var.index), f.exp - j});
        if (j > 0) mono_acc.push_back({VarId::y(f.var.index), j});
        Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
        self(self, idx + 1, coeff * binom * sign);
        if (j > 0) mono_acc.pop_back();
        if (j < f.exp) mono_acc.pop_back();
        binom = binom * (f.exp - j) / (j + 1);
      }
    };
    walk(walk, 0, term.coeff);
  }
  return Polynomial::from_terms(std::move(out));
}

const Polynomial& schur_in_u(int m) {
  static std::mutex mu;
  static std::vector<Polynomial> cache;
  static const Polynomial zero;
  if (m < 0) return zero;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= m)
    cache.push_back(elementary_schur(static_cast<int>(cache.size()))
                        .rename_family(VarFamily::T, VarFamily::Y));
  return cache[m];
}

// Residue built from precomputed expansion lists. `contracted` switches
// between the (t, u) fast path and the spec-literal (t, y) polynomial.
Polynomial residue_from_lists(const std::vector<Polynomial>& a_list,
                              const std::vector<Polynomial>& b_list, int power,
                              bool contracted) {
  int amax = static_cast<int>(a_list.size()) - 1;
  int bmax = static_cast<int>(b_list.size()) - 1;
  PolyAccum global;
  // group by m = a + b - power - 1 so each exp-coefficient multiplies one sum
  for (int m = 0; m + power + 1 <= amax + bmax; ++m) {
    int s = m + power + 1;
    PolyAccum hm;
    bool any = false;
    for (int a = std::max(0, s - bmax); a <= std::min(amax, s); ++a) {
      const Polynomial& pa = a_list[static_cast<size_t>(a)];
      const Polynomial& pb = b_list[static_cast<size_t>(s - a)];
      if (pa.is_zero() || pb.is_zero()) continue;
      hm.add_product(pa, pb);
      any = true;
    }
    if (!any) continue;
    Polynomial h = hm.take();
    if (h.is_zero()) continue;
    global.add_product(h, contracted ? schur_in_u(m) : exp_coefficient(m));
  }
  return global.take();
}

}  // namespace

Polynomial hirota_residue(const TauFunction& tau_k, const TauFunction& tau_l, int power) {
  auto a_list = miwa_coeff_list(tau_k.poly, Sign::minus);
  auto b_t = miwa_coeff_list(tau_l.poly, Sign::plus);
  std::vector<Polynomial> b_list;
  b_list.reserve(b_t.size());
  for (auto& p : b_t) b_list.push_back(p.rename_family(VarFamily::T, VarFamily::Y));
  return residue_from_lists(a_list, b_list, power, /*contracted=*/false);
}

Polynomial hirota_residue_contracted(const TauFunction& tau_k, const TauFunction& tau_l,
                                     int power) {
  auto a_list = miwa_coeff_list(tau_k.poly, Sign::minus);
  auto b_t = miwa_coeff_list(tau_l.poly, Sign::plus);
  std::vector<Polynomial> b_list;
  b_list.reserve(b_t.size());
  for (auto& p : b_t) b_list.push_back(contract_to_u(p));
  return residue_from_lists(a_list, b_list, power, /*contracted=*/true);
}

namespace {

Verdict fail_with_witness(const TauFunction& tau_k, const TauFunction& tau_l, int power) {
  Polynomial r = hirota_residue(tau_k, tau_l, power);
  if (r.is_zero()) fail(Errc::internal, "contracted and direct residues disagree");
  return Verdict::failed({r.trailing_term().mono, r.trailing_term().coeff});
}

}  // namespace

Verdict verify_mkp(const TauFunction& tau_k, const TauFunction& tau_l, int d) {
  if (d < 0) fail(Errc::invalid_input, "verify_mkp wants d >= 0");
  if (tau_k.poly.is_zero() || tau_l.poly.is_zero())
    fail(Errc::invalid_input, "tau-functions must be nonzero");
  Polynomial r = hirota_residue_contracted(tau_k, tau_l, d);
  if (r.is_zero()) return Verdict::ok();
  return fail_with_witness(tau_k, tau_l, d);
}

Verdict verify_first_mkp(const TauFunction& tau_k, const TauFunction& tau_k1) {
  if (tau_k.poly.is_zero() || tau_k1.poly.is_zero())
    fail(Errc::invalid_input, "tau-functions must be nonzero");
  Polynomial lhs = hirota_residue(tau_k, tau_k1, -1);
  Polynomial rhs = tau_k1.poly * tau_k.poly.rename_family(VarFamily::T, VarFamily::Y);
  // equality up to one global nonzero scalar (tau scalar freedom)
  if (lhs.is_zero()) return Verdict::failed({rhs.trailing_term().mono, rhs.trailing_term().coeff});
  if (lhs.leading_term().mono != rhs.leading_term().mono) {
    Polynomial d = lhs - rhs;
    return Verdict::failed({d.trailing_term().mono, d.trailing_term().coeff});
  }
  Rational scale = lhs.leading_term().coeff / rhs.leading_term().coeff;
  Polynomial d = lhs - rhs * scale;
  if (d.is_zero()) return Verdict::ok();
  return Verdict::failed({d.trailing_term().mono, d.trailing_term().coeff});
}

long nkdv_power_bound(const TauFunction& tau_k, const TauFunction& tau_l) {
  return std::max<long>(tau_k.poly.weighted_degree(), 0) +
         std::max<long>(tau_l.poly.weighted_degree(), 0) - 1;
}

Verdict verify_nkdv(const TauChain& chain, int n) {
  if (n < 2) fail(Errc::invalid_input, "verify_nkdv wants n >= 2");
  if (static_cast<int>(chain.taus.size()) != n)
    fail(Errc::invalid_input, "chain must hold tau_0..tau_{n-1}");
  for (int i = 0; i < n; ++i) {
    if (chain.taus[i].poly.is_zero()) fail(Errc::invalid_input, "zero tau in chain");
    if (chain.taus[i].level != chain.taus[0].level + i)
      fail(Errc::invalid_input, "chain levels must be consecutive");
  }

  // reusable expansions per chain entry
  std::vector<std::vector<Polynomial>> a_side(n), b_side(n);
  for (int i = 0; i < n; ++i) {
    a_side[i] = miwa_coeff_list(chain.taus[i].poly, Sign::minus);
    auto b_t = miwa_coeff_list(chain.taus[i].poly, Sign::plus);
    b_side[i].reserve(b_t.size());
    for (auto& p : b_t) b_side[i].push_back(contract_to_u(p));
  }

  Verdict verdict;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      long bound = nkdv_power_bound(chain.taus[k], chain.taus[l]);
      for (int j = 0;; ++j) {
        long power = static_cast<long>(j) * n + k - l;
        if (power > bound) break;
        if (power < 0) continue;
        verdict.checked.push_back({k, l, j});
        Polynomial r = residue_from_lists(a_side[k], b_side[l], static_cast<int>(power),
                                          /*contracted=*/true);
        if (!r.is_zero()) {
          Verdict failed = fail_with_witness(chain.taus[k], chain.taus[l], static_cast<int>(power));
          failed.checked = std::move(verdict.checked);
          return failed;
        }
      }
    }
  }
  return verdict;
}

}  // namespace kptau
