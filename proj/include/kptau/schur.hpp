#pragma once

#include <vector>

#include "kptau/partition.hpp"
#include "kptau/polynomial.hpp"

namespace kptau {

// Elementary Schur polynomial s_j, defined by e^{t.z} = sum_j s_j(t) z^j;
// s_0 = 1 and s_j = 0 for j < 0. Weighted-homogeneous of degree j. Cached.
const Polynomial& elementary_schur(int j);

// s_lambda(t) = det(s_{lambda_i + j - i})_{1<=i,j<=k} (Jacobi-Trudi).
Polynomial schur_of_partition(const Partition& lambda);

// det(s_{lambda_i + j - i}(t + c_i)) with one shift table per row; with all
// shifts zero this reduces to schur_of_partition.
Polynomial shifted_schur_tau(const Partition& lambda, const std::vector<ShiftTable>& shifts);

// Shift constants c with s_j(c) = a_{M-j}: the triangular recursion route.
ShiftTable constants_from_coefficients_recursive(const std::vector<Rational>& a, int M);
// The same constants by the closed form c_k = [z^k] log(1 + sum_j a_{M-j} z^j).
ShiftTable constants_from_coefficients_series(const std::vector<Rational>& a, int M);
// Runs both routes and insists they agree.
ShiftTable constants_from_coefficients(const std::vector<Rational>& a, int M);

}  // namespace kptau
