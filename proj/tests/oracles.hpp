#pragma once

// Independent test oracles. These deliberately avoid the code paths they
// check: quadrature instead of duplication, AGM instead of Carlson,
// eigenvalue solvers instead of Aberth.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using real_t = long double;
using cplx = std::complex<long double>;

// adaptive Simpson, complex-valued
inline cplx simpson_(const std::function<cplx(real_t)>& f, real_t a, real_t b,
                     cplx fa, cplx fm, cplx fb, cplx whole, real_t tol, int depth) {
    const real_t m = (a + b) / 2, lm = (a + m) / 2, rm = (m + b) / 2;
    const cplx flm = f(lm), frm = f(rm);
    const cplx left = (m - a) / 6 * (fa + 4.0L * flm + fm);
    const cplx right = (b - m) / 6 * (fm + 4.0L * frm + fb);
    if (depth > 40 || std::abs(left + right - whole) < 15 * tol)
        return left + right + (left + right - whole) / 15.0L;
    return simpson_(f, a, m, fa, flm, fm, left, tol / 2, depth + 1) +
           simpson_(f, m, b, fm, frm, fb, right, tol / 2, depth + 1);
}

inline cplx integrate(const std::function<cplx(real_t)>& f, real_t a, real_t b, real_t tol = 1e-17L) {
    const cplx fa = f(a), fb = f(b), fm = f((a + b) / 2);
    const cplx whole = (b - a) / 6 * (fa + 4.0L * fm + fb);
    return simpson_(f, a, b, fa, fm, fb, whole, tol, 0);
}

// R_F by its defining integral, mapped to [0,1)
inline cplx rf_quadrature(cplx x, cplx y, cplx z) {
    auto f = [&](real_t u) -> cplx {
        if (u >= 1.0L) return 0.0L;
        const real_t t = u / (1.0L - u);
        const real_t jac = 1.0L / ((1.0L - u) * (1.0L - u));
        return 0.5L * jac / (std::sqrt(t + x) * std::sqrt(t + y) * std::sqrt(t + z));
    };
    return integrate(f, 0.0L, 0.999999999L, 1e-18L);
}

// K and E for real m < 1 via the arithmetic-geometric mean
inline long double agm_K(long double m) {
    long double a = 1.0L, b = std::sqrt(1.0L - m);
    while (std::fabs(a - b) > 1e-19L * a) {
        const long double an = (a + b) / 2;
        b = std::sqrt(a * b);
        a = an;
    }
    return static_cast<long double>(M_PIl) / (2 * a);
}

inline long double agm_E(long double m) {
    long double a = 1.0L, b = std::sqrt(1.0L - m), c = std::sqrt(m);
    long double sum = c * c / 2;
    long double p2 = 1.0L;
    while (std::fabs(a - b) > 1e-19L * a) {
        const long double an = (a + b) / 2;
        const long double cn = (a - b) / 2;
        b = std::sqrt(a * b);
        a = an;
        p2 *= 2;
        sum += p2 * cn * cn / 2;
    }
    return agm_K(m) * (1.0L - sum);
}

// Gauss-Hermite nodes = roots of H_n, via the Golub-Welsch tridiagonal
inline std::vector<double> gauss_hermite_nodes(int n) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = std::sqrt(k / 2.0);
        J(k, k - 1) = b;
        J(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    std::vector<double> nodes(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return nodes;
}

// all roots via companion-matrix eigenvalues (double precision)
inline std::vector<std::complex<double>> companion_roots(const std::vector<double>& coeffs) {
    const int d = static_cast<int>(coeffs.size()) - 1;
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) C(i, d - 1) = -coeffs[i] / coeffs[d];
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C);
    std::vector<std::complex<double>> out(d);
    for (int i = 0; i < d; ++i) out[i] = es.eigenvalues()(i);
    return out;
}

} // namespace oracle
