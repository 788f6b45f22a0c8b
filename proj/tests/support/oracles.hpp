#pragma once

#include <random>

#include "kptau/partition.hpp"
#include "kptau/polynomial.hpp"
#include "kptau/psdo.hpp"
#include "kptau/schur.hpp"

// Test-only helpers: independent oracles and seeded random generators. These
// deliberately avoid the library's main computation paths wherever they act
// as a cross-check.
namespace kptau::testing {

Rational rand_rational(std::mt19937& rng, int bound = 9);
Rational rand_nonzero_rational(std::mt19937& rng, int bound = 9);
ShiftTable rand_shift_table(std::mt19937& rng, int max_index, int bound = 9);
Polynomial rand_poly(std::mt19937& rng, int max_var, int max_exp, int max_terms);

// Schur polynomial from the semistandard-tableau definition, as a polynomial
// in x_1..x_nvars (stored in the y-variable family).
Polynomial tableau_schur(const Partition& lambda, int nvars);
// Substitute t_k -> (x_1^k + ... + x_nvars^k)/k, mapping into the same
// x-variable family, so the two routes can be compared.
Polynomial power_sum_substitute(const Polynomial& in_t, int nvars);

// Pseudodifferential operator with Laurent-monomial coefficients
// c * t_1^a t_2^b / t_1^k, which keep compositions cheap and keep residues
// integrable-testable.
PseudoDiffOp rand_psdo(std::mt19937& rng, int max_order, int floor);

// For a rational function whose denominator is a pure monomial: true when it
// has a t_1-antiderivative in the same class (no t_1-exponent -1 after
// clearing the denominator).
bool t1_integrable(const RationalFunction& f);

}  // namespace kptau::testing
