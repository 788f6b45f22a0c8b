#pragma once

#include <map>

#include "kptau/tau.hpp"
#include "kptau/verdict.hpp"

namespace kptau {

// Finite Laurent expansion in z with polynomial coefficients.
struct ZSeries {
  std::map<int, Polynomial> coeffs;
};

// tau(t + sign [z^{-1}]): substitute t_i -> t_i + sign z^{-i}/i and expand.
// z-support lies in [-deg tau, 0]; the z^0 coefficient is tau itself.
ZSeries miwa_shift(const Polynomial& tau, Sign sign);

// Coefficient of z^m in exp(sum (t_i - y_i) z^i): s_m evaluated at t - y.
const Polynomial& exp_coefficient(int m);

// The exact residue polynomial in (t, y):
//   Res z^power tau_k(t - [z^{-1}]) tau_l(y + [z^{-1}]) e^{sum (t_i - y_i) z^i} dz.
Polynomial hirota_residue(const TauFunction& tau_k, const TauFunction& tau_l, int power);

// Same residue with y contracted to t - u (u stored in the y-variable slots);
// identically zero iff hirota_residue is. This is the fast verification route.
Polynomial hirota_residue_contracted(const TauFunction& tau_k, const TauFunction& tau_l,
                                     int power);

// Res z^d tau_k(t-[z^{-1}]) tau_l(y+[z^{-1}]) e^{...} = 0, the d-th MKP check.
Verdict verify_mkp(const TauFunction& tau_k, const TauFunction& tau_l, int d);

// Res z^{-1} tau_k(t-[z^{-1}]) tau_{k+1}(y+[z^{-1}]) e^{...} = tau_{k+1}(t) tau_k(y),
// checked up to one global nonzero scalar.
Verdict verify_first_mkp(const TauFunction& tau_k, const TauFunction& tau_k1);

// All residues Res z^{jn+k-l}(...) = 0 for 0 <= k,l <= n-1, j >= 0 with
// jn+k-l >= 0, over the finite nontrivial range jn+k-l+1 <= deg tau_k + deg tau_l;
// `checked` records the (k, l, j) triples visited.
Verdict verify_nkdv(const TauChain& chain, int n);

// Largest power with a possibly-nonzero residue for the pair; residues beyond
// it vanish by z-support counting (used by the soundness probe).
long nkdv_power_bound(const TauFunction& tau_k, const TauFunction& tau_l);

}  // namespace kptau
