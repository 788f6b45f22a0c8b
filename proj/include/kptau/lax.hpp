#pragma once

#include <span>

#include "kptau/tau.hpp"
#include "kptau/verdict.hpp"

namespace kptau {

// Dressing operator 1 + p_1 d^{-1} + ... read off the Miwa expansion of tau.
struct DressingOperator {
  PseudoDiffOp op;
  int level = 0;
  Sign sign = Sign::plus;
};

// Lax operator d + u_1 d^{-1} + ...; monic of order one, no order-0 term.
struct LaxOperator {
  PseudoDiffOp op;
  int level = 0;
};

DressingOperator dressing_from_tau(const TauFunction& tau, Sign sign, int floor);
LaxOperator lax_from_tau(const TauFunction& tau, int floor);

// (P^-)* o P^+ = 1 down to the floor.
Verdict adjoint_consistency_check(const TauFunction& tau, int floor);
// dP/dt_j + (L^j)_- o P = 0 down to the floor.
Verdict sato_wilson_check(const TauFunction& tau, int j, int floor);
// dL/dt_j = [(L^j)_+, L] down to the floor.
Verdict lax_equation_check(const TauFunction& tau, int j, int floor);

// v_l = d log(tau_l / tau_{l+1}).
RationalFunction v_from_taus(const TauFunction& tau_l, const TauFunction& tau_l1);

// P_{l+1} o d = (d + v_l) o P_l, and L_{l+1} = (d+v_l) o L_l o (d+v_l)^{-1}.
Verdict intertwining_check(const TauFunction& tau_l, const TauFunction& tau_l1, int floor);

enum class EigenKind { eigen, adjoint };

// dphi/dt_j = (L^j)_+(phi), resp. dphi/dt_j = -((L^j)_+)*(phi). The caller
// supplies the t_j-derivative of phi.
Verdict eigenfunction_check(const RationalFunction& phi, const LaxOperator& L, int j,
                            EigenKind kind, const RationalFunction& dphi_dtj);

// phi = tau_{k+1}/tau_k is an eigenfunction for L_k and 1/phi an adjoint
// eigenfunction for L_{k+1}, for every listed flow.
Verdict ratio_eigenfunction_check(const TauFunction& tau_k, const TauFunction& tau_k1,
                                  std::span<const int> flows);

// Crum/Desnanot-Jacobi: W_{i+1} d o W_i(d) - (d W_{i+1}) W_i(d) = W_i W_{i+1}(d)
// for every prefix of the eigenfunction list, as exact operators.
Verdict crum_check(std::span<const RationalFunction> funcs);

// For an n-KdV chain: sum v_i = 0; L_i^n equals the cyclic factorization
// (d+v_{i-1})...(d+v_0)(d+v_{n-1})...(d+v_i) down to the floor (so L_i^n is a
// differential operator); every dv_i/dt_{jn} = 0.
Verdict nkdv_factorized_check(const TauChain& chain, int n, int floor);

// dv_i/dt_j = (L_{i+1}^{j/n})_+ o (d+v_i) - (d+v_i) o (L_i^{j/n})_+, where the
// fractional powers come from the n-th root of the factorized operators; both
// sides are exact differential operators of order zero.
Verdict mkdv_flow_check(const TauChain& chain, int n, int i, int j);

}  // namespace kptau
