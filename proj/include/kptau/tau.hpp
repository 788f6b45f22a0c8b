#pragma once

#include <map>
#include <span>
#include <vector>

#include "kptau/partition.hpp"
#include "kptau/psdo.hpp"
#include "kptau/schur.hpp"

namespace kptau {

enum class Sign { plus, minus };

// Polynomial tau-function tagged with its chain level m; defined up to a
// nonzero scalar factor.
struct TauFunction {
  Polynomial poly;
  int level = 0;
};

struct TauChain {
  std::vector<TauFunction> taus;  // consecutive levels
};

// Finite Laurent polynomial f(z), the symbol generating an eigenfunction.
struct LaurentSymbol {
  std::map<int, Rational> coeffs;
};

// (lambda, shifts) data determining a shifted Jacobi-Trudi tau.
struct KpTauSpec {
  Partition lambda;
  std::vector<ShiftTable> shifts;
};

// Normalizes by the coefficient of the canonically-least monomial, the scalar
// gauge used whenever taus are compared.
Polynomial normalize_tau(const Polynomial& p);
bool proportional(const Polynomial& a, const Polynomial& b);

TauFunction tau_kp(const Partition& lambda, const std::vector<ShiftTable>& shifts);
TauFunction tau_kp(const KpTauSpec& spec);

enum class SuccessorCase { prepend, insert, decrement };

// Theorem-prescribed successor data for the MKP chain. `mu` and `d` are used
// by prepend/insert; `index` is the 1-based insert position. Throws
// Error(case_violation) when mu violates the required inequalities.
KpTauSpec mkp_successor(const KpTauSpec& spec, SuccessorCase c, int mu, int index,
                        const ShiftTable& d);

// q_f^{+-}(t) = Res f(z) w^{+-}(t, z) dz for the wave function of tau.
RationalFunction eigenfunction_from_symbol(const LaurentSymbol& f, const TauFunction& tau,
                                           Sign sign);

// Wronskian determinant with rows d^r applied to each function, r = 0..k-1.
RationalFunction wronskian(std::span<const RationalFunction> funcs);
// W(d): the order-k differential operator annihilating every input, built by
// expanding the bordered Wronskian along its last column, cofactors kept to
// the left. Throws Error(singular_wronskian) when the plain Wronskian is 0.
PseudoDiffOp wronskian_operator(std::span<const RationalFunction> funcs);

// Theorem-classified n-KdV tau: row i is shifted by the table of the residue
// class (lambda_i - i + 1) mod n. Throws Error(not_periodic) if lambda is not
// n-periodic. Map keys are residues mod n (any representative accepted).
TauFunction tau_nkdv(const Partition& lambda, int n, const std::map<int, ShiftTable>& class_shifts);

// Data for the eigenfunction construction of the n-KdV chains: pi is a
// permutation of 1..n, m are the multiplicities (at least one zero and one
// nonzero), one shift table per slot.
struct NkdvData {
  int n = 2;
  std::vector<int> pi;
  std::vector<int> m;
  std::vector<ShiftTable> shifts;
};

struct NkdvChain {
  TauChain chain;                  // tau_0 .. tau_{n-1}
  Rational tau_n_over_tau_0;       // the closing scalar, asserted nonzero
};

// Builds tau_0..tau_{n-1} by successively appending the slot eigenfunctions,
// computes tau_n and checks it is a scalar multiple of tau_0. Throws
// Error(degenerate_data) if some Wronskian vanishes identically.
NkdvChain tau_nkdv_from_data(const NkdvData& data);

}  // namespace kptau
