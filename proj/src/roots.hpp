#pragma once

#include "bigfloat.hpp"
#include "exact_poly.hpp"

#include <complex>
#include <vector>

namespace ghp {

/// All complex roots of an ExactPolynomial at a given working precision,
/// with a residual certificate max_i |P(z_i)| / (|lead| max(1,|z_i|)^deg).
struct RootSet {
    std::vector<Bc> roots;      // sorted by (re, im), multiprecision
    double residual_bound = 0.0;
    int precision_bits = 0;

    std::vector<std::complex<double>> as_doubles() const;
};

inline constexpr int kPrecisionRetryCap = 4096;

/// Precision heuristic for H_{m,n}-type coefficient growth.
inline int default_precision_bits(int degree) { return 64 + 8 * degree; }

/// Simultaneous Aberth-Ehrlich iteration. Retries at doubled precision up to
/// max(kPrecisionRetryCap, precision_bits) before raising NonConvergence.
RootSet find_roots(const ExactPolynomial& p, int precision_bits);

/// Single attempt at fixed precision; returns false instead of retrying.
/// Exposed so the retry path stays testable.
bool aberth_attempt(const ExactPolynomial& p, int precision_bits, int iter_cap, RootSet& out);

/// a -> alpha = (2m+n)^{-1/2} a applied to every root.
std::vector<std::complex<double>> scale_roots(const RootSet& rs, int m, int n);

} // namespace ghp
