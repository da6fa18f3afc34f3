#pragma once

#include "exact_poly.hpp"

#include <vector>

namespace ghp {

inline constexpr int kDefaultDegreeCap = 5000;

/// Classical Hermite polynomial H_k (physicists' normalization), exact
/// integer coefficients via the three-term recurrence.
ExactPolynomial hermite_classical(int k);

/// Generalized Hermite polynomial H_{m,n}: the n x n determinant with entry
/// (l, j) = d^l/dz^l H_{m+j}(z), expanded exactly, divided by its content and
/// sign-normalized to a positive leading coefficient. Degree is m*n.
ExactPolynomial hermite_generalized(int m, int n, int degree_cap = kDefaultDegreeCap);

// Determinant building blocks, exposed for cross-validation in tests.
std::vector<std::vector<ExactPolynomial>> hermite_wronskian_matrix(int m, int n);
ExactPolynomial det_bareiss(std::vector<std::vector<ExactPolynomial>> mat);
ExactPolynomial det_cofactor(const std::vector<std::vector<ExactPolynomial>>& mat);
// Same determinant through integer evaluation at z = 1..N and exact
// divided-difference interpolation of the even part.
ExactPolynomial hermite_generalized_interpolated(int m, int n);

} // namespace ghp
