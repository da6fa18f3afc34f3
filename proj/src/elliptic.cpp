#include "elliptic.hpp"

#include "error.hpp"

#include <cmath>

namespace ghp {

namespace {

constexpr real_t kTol = 1e-22L;   // duplication truncation target

bool near_zero(const cplx& z) { return z.real() == 0 && z.imag() == 0; }

bool on_negative_axis(const cplx& z) {
    return z.imag() == 0 && z.real() < 0;
}

real_t cmax3(real_t a, real_t b, real_t c) { return std::max(a, std::max(b, c)); }

} // namespace

cplx carlson_rf(cplx x, cplx y, cplx z) {
    const int zeros = near_zero(x) + near_zero(y) + near_zero(z);
    if (zeros >= 2) fail(Err::DomainError, "elliptic", "carlson_rf with two zero arguments");
    if (on_negative_axis(x) || on_negative_axis(y) || on_negative_axis(z))
        fail(Err::DomainError, "elliptic", "carlson_rf argument on the negative real axis");

    cplx A = (x + y + z) / 3.0L;
    const cplx A0 = A;
    real_t Q = std::pow(3.0L * kTol, -1.0L / 6.0L) *
               cmax3(std::abs(A - x), std::abs(A - y), std::abs(A - z));
    real_t f = 1.0L;
    while (Q > f * std::abs(A)) {
        const cplx sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const cplx lam = sx * sy + sy * sz + sz * sx;
        x = (x + lam) * 0.25L;
        y = (y + lam) * 0.25L;
        z = (z + lam) * 0.25L;
        A = (A + lam) * 0.25L;
        f *= 4.0L;
    }
    const cplx X1 = (A - x) / A, Y1 = (A - y) / A, Z1 = -X1 - Y1;
    const cplx E2 = X1 * Y1 - Z1 * Z1;
    const cplx E3 = X1 * Y1 * Z1;
    const cplx s = 1.0L - E2 / 10.0L + E3 / 14.0L + E2 * E2 / 24.0L - 3.0L * E2 * E3 / 44.0L -
                   5.0L * E2 * E2 * E2 / 208.0L + 3.0L * E3 * E3 / 104.0L + E2 * E2 * E3 / 16.0L;
    return s / std::sqrt(A);
}

cplx carlson_rc(cplx x, cplx y) { return carlson_rf(x, y, y); }

cplx carlson_rd(cplx x, cplx y, cplx z) {
    if (near_zero(x) && near_zero(y)) fail(Err::DomainError, "elliptic", "carlson_rd with x = y = 0");
    if (near_zero(z)) fail(Err::DomainError, "elliptic", "carlson_rd with z = 0");
    cplx A = (x + y + 3.0L * z) / 5.0L;
    const cplx A0 = A;
    const cplx x0 = x, y0 = y, z0 = z;
    real_t Q = std::pow(kTol / 4.0L, -1.0L / 6.0L) *
               cmax3(std::abs(A - x), std::abs(A - y), std::abs(A - z));
    cplx sum = 0.0L;
    real_t f = 1.0L;
    while (Q > f * std::abs(A)) {
        const cplx sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const cplx lam = sx * sy + sy * sz + sz * sx;
        sum += 1.0L / (f * sz * (z + lam));
        x = (x + lam) * 0.25L;
        y = (y + lam) * 0.25L;
        z = (z + lam) * 0.25L;
        A = (A + lam) * 0.25L;
        f *= 4.0L;
    }
    const cplx X = (A0 - x0) / (f * A);
    const cplx Y = (A0 - y0) / (f * A);
    const cplx Z = -(X + Y) / 3.0L;
    const cplx E2 = X * Y - 6.0L * Z * Z;
    const cplx E3 = (3.0L * X * Y - 8.0L * Z * Z) * Z;
    const cplx E4 = 3.0L * (X * Y - Z * Z) * Z * Z;
    const cplx E5 = X * Y * Z * Z * Z;
    const cplx s = 1.0L - 3.0L * E2 / 14.0L + E3 / 6.0L + 9.0L * E2 * E2 / 88.0L -
                   3.0L * E4 / 22.0L - 9.0L * E2 * E3 / 52.0L + 3.0L * E5 / 26.0L -
                   E2 * E2 * E2 / 16.0L + 3.0L * E3 * E3 / 40.0L + 3.0L * E2 * E4 / 20.0L +
                   45.0L * E2 * E2 * E3 / 272.0L - 9.0L * (E3 * E4 + E2 * E5) / 68.0L;
    return s / (f * A * std::sqrt(A)) + 3.0L * sum;
}

cplx carlson_rj(cplx x, cplx y, cplx z, cplx p) {
    if (p.real() <= 0)
        fail(Err::DomainError, "elliptic", "carlson_rj requires Re p > 0 (use complete_Pi)");
    cplx A = (x + y + z + 2.0L * p) / 5.0L;
    const cplx A0 = A;
    const cplx delta = (p - x) * (p - y) * (p - z);
    const cplx x0 = x, y0 = y, z0 = z;
    real_t Q = std::pow(kTol / 4.0L, -1.0L / 6.0L) *
               std::max(cmax3(std::abs(A - x), std::abs(A - y), std::abs(A - z)), std::abs(A - p));
    cplx sum = 0.0L;
    real_t f = 1.0L;
    while (Q > f * std::abs(A)) {
        const cplx sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z), sp = std::sqrt(p);
        const cplx lam = sx * sy + sy * sz + sz * sx;
        const cplx d = (sp + sx) * (sp + sy) * (sp + sz);
        const cplx e = delta / (f * f * f * d * d);
        sum += carlson_rc(cplx(1.0L), 1.0L + e) / (f * d);
        x = (x + lam) * 0.25L;
        y = (y + lam) * 0.25L;
        z = (z + lam) * 0.25L;
        p = (p + lam) * 0.25L;
        A = (A + lam) * 0.25L;
        f *= 4.0L;
    }
    const cplx X = (A0 - x0) / (f * A);
    const cplx Y = (A0 - y0) / (f * A);
    const cplx Z = (A0 - z0) / (f * A);
    const cplx P = (-X - Y - Z) / 2.0L;
    const cplx E2 = X * Y + X * Z + Y * Z - 3.0L * P * P;
    const cplx E3 = X * Y * Z + 2.0L * E2 * P + 4.0L * P * P * P;
    const cplx E4 = (2.0L * X * Y * Z + E2 * P + 3.0L * P * P * P) * P;
    const cplx E5 = X * Y * Z * P * P;
    const cplx s = 1.0L - 3.0L * E2 / 14.0L + E3 / 6.0L + 9.0L * E2 * E2 / 88.0L -
                   3.0L * E4 / 22.0L - 9.0L * E2 * E3 / 52.0L + 3.0L * E5 / 26.0L;
    return s / (f * A * std::sqrt(A)) + 6.0L * sum;
}

namespace {

void check_K_cut(const cplx& m) {
    if (m.imag() == 0 && m.real() >= 1)
        fail(Err::DomainError, "elliptic", "parameter m on the branch cut [1,oo)");
}

// adaptive Gauss-Kronrod (G7/K15) over [a,b] for complex integrands
template <typename F>
cplx gk15(F&& fn, real_t a, real_t b, cplx& err) {
    static const real_t xk[8] = {
        0.0L, 0.2077849550078984676006894L, 0.4058451513773971669066064L,
        0.5860872354676911302941448L, 0.7415311855993944398638648L,
        0.8648644233597690727897128L, 0.9491079123427585245261897L,
        0.9914553711208126392068547L};
    static const real_t wk[8] = {
        0.2094821410847278280129992L, 0.2044329400752988924141620L,
        0.1903505780647854099132564L, 0.1690047266392679028265834L,
        0.1406532597155259187451896L, 0.1047900103222501838398763L,
        0.0630920926299785532907007L, 0.0229353220105292249637320L};
    static const real_t wg[4] = {
        0.4179591836734693877551020L, 0.3818300505051189449503698L,
        0.2797053914892766679014678L, 0.1294849661688696932706114L};
    const real_t c = (a + b) / 2, h = (b - a) / 2;
    cplx fk = fn(c) * wk[0];
    cplx fg = fn(c) * wg[0];
    for (int i = 1; i < 8; ++i) {
        const cplx f1 = fn(c - h * xk[i]);
        const cplx f2 = fn(c + h * xk[i]);
        fk += (f1 + f2) * wk[i];
        if (i % 2 == 0) fg += (f1 + f2) * wg[i / 2];
    }
    err = (fk - fg) * h;
    return fk * h;
}

template <typename F>
cplx adapt_quad(F&& fn, real_t a, real_t b, real_t tol, int depth = 0) {
    cplx err;
    const cplx val = gk15(fn, a, b, err);
    if (std::abs(err) < tol || depth > 30) return val;
    const real_t mid = (a + b) / 2;
    return adapt_quad(fn, a, mid, tol / 2, depth + 1) + adapt_quad(fn, mid, b, tol / 2, depth + 1);
}

cplx pi_quadrature(cplx n, cplx m) {
    auto f = [&](real_t th) {
        const real_t s2 = std::sin(th) * std::sin(th);
        return 1.0L / ((1.0L - n * s2) * std::sqrt(1.0L - m * s2));
    };
    return adapt_quad(f, 0.0L, static_cast<real_t>(M_PIl / 2), 1e-19L);
}

// Cauchy principal value for real characteristic n > 1, using
// PV int 1/(1 - n sin^2) dtheta = 0 to subtract the pole.
cplx pi_pv_real(real_t n, cplx m) {
    const real_t us = 1.0L / n;
    const cplx g0 = 1.0L / std::sqrt(1.0L - m * us);
    auto f = [&](real_t th) -> cplx {
        const real_t s = std::sin(th);
        const real_t u = s * s;
        if (std::fabs(u - us) < 1e-7L) {
            const real_t um = (u + us) / 2;
            return -(m / 2.0L) / (n * std::pow(std::sqrt(1.0L - m * um), 3));
        }
        return (1.0L / std::sqrt(1.0L - m * u) - g0) / (1.0L - n * u);
    };
    const real_t ths = std::asin(std::sqrt(us));
    // split at the (removable) singular point for the adaptive rule
    cplx v = adapt_quad(f, 0.0L, ths, 1e-19L) +
             adapt_quad(f, ths, static_cast<real_t>(M_PIl / 2), 1e-19L);
    return v;
}

} // namespace

cplx complete_K(cplx m) {
    check_K_cut(m);
    return carlson_rf(0.0L, 1.0L - m, 1.0L);
}

cplx complete_E(cplx m) {
    check_K_cut(m);
    return carlson_rf(0.0L, 1.0L - m, 1.0L) - (m / 3.0L) * carlson_rd(0.0L, 1.0L - m, 1.0L);
}

cplx complete_Pi(cplx n, cplx m) {
    check_K_cut(m);
    if (near_zero(n)) return complete_K(m);
    const cplx p = 1.0L - n;
    if (n.imag() == 0 && n.real() > 1) {
        // on the characteristic cut: limit from below
        const real_t nr = n.real();
        const cplx corr = cplx(0, 1) * static_cast<real_t>(M_PIl) /
                          (2.0L * std::sqrt((nr - 1.0L) * (1.0L - m / nr)));
        return pi_pv_real(nr, m) - corr;
    }
    if (p.real() > 0)
        return carlson_rf(0.0L, 1.0L - m, 1.0L) + (n / 3.0L) * carlson_rj(0.0L, 1.0L - m, 1.0L, p);
    return pi_quadrature(n, m);
}

cplx pi_branch_corrected(cplx n2, cplx m) {
    if (near_zero(n2)) fail(Err::DomainError, "elliptic", "pi_branch_corrected with n2 = 0");
    if (n2 == m) fail(Err::DomainError, "elliptic", "pi_branch_corrected with n2 = m");
    if (n2.imag() > 0) return complete_Pi(n2, m);
    const cplx corr = cplx(0, 1) * static_cast<real_t>(M_PIl) /
                      std::sqrt((n2 - 1.0L) * (1.0L - m / n2));
    return complete_Pi(n2, m) + corr;
}

} // namespace ghp
