#include "hermite.hpp"

#include "error.hpp"

#include <gmpxx.h>

namespace ghp {

ExactPolynomial hermite_classical(int k) {
    if (k < 0) fail(Err::InvalidArgument, "hermite", "hermite_classical requires k >= 0");
    ExactPolynomial prev = ExactPolynomial::constant(1);          // H_0
    if (k == 0) return prev;
    ExactPolynomial cur = ExactPolynomial::monomial(1, 2);        // H_1
    ExactPolynomial two_z = ExactPolynomial::monomial(1, 2);
    for (int i = 1; i < k; ++i) {
        ExactPolynomial next = two_z * cur - (prev * ExactPolynomial::constant(2L * i));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<std::vector<ExactPolynomial>> hermite_wronskian_matrix(int m, int n) {
    // column j holds H_{m+j} and rows take successive derivatives
    std::vector<std::vector<ExactPolynomial>> mat(n, std::vector<ExactPolynomial>(n));
    for (int j = 0; j < n; ++j) {
        ExactPolynomial h = hermite_classical(m + j);
        for (int l = 0; l < n; ++l) {
            mat[l][j] = h;
            if (l + 1 < n) h = h.derivative();
        }
    }
    return mat;
}

ExactPolynomial det_bareiss(std::vector<std::vector<ExactPolynomial>> mat) {
    const int n = static_cast<int>(mat.size());
    if (n == 0) return ExactPolynomial::constant(1);
    int sign = 1;
    ExactPolynomial prev = ExactPolynomial::constant(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (mat[k][k].is_zero()) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (!mat[i][k].is_zero()) { swap = i; break; }
            if (swap < 0) return ExactPolynomial{};
            std::swap(mat[k], mat[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                ExactPolynomial num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
                mat[i][j] = num.divide_exact(prev);
            }
            mat[i][k] = ExactPolynomial{};
        }
        prev = mat[k][k];
    }
    ExactPolynomial det = mat[n - 1][n - 1];
    if (sign < 0) det *= mpz_class(-1);
    return det;
}

ExactPolynomial det_cofactor(const std::vector<std::vector<ExactPolynomial>>& mat) {
    const int n = static_cast<int>(mat.size());
    if (n == 0) return ExactPolynomial::constant(1);
    if (n == 1) return mat[0][0];
    ExactPolynomial det;
    for (int j = 0; j < n; ++j) {
        if (mat[0][j].is_zero()) continue;
        std::vector<std::vector<ExactPolynomial>> minor(n - 1, std::vector<ExactPolynomial>(n - 1));
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int jj = 0; jj < n; ++jj) {
                if (jj == j) continue;
                minor[i - 1][cc++] = mat[i][jj];
            }
        }
        ExactPolynomial term = mat[0][j] * det_cofactor(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

namespace {

// Integer determinant, Bareiss.
mpz_class det_int(std::vector<std::vector<mpz_class>> a) {
    const int n = static_cast<int>(a.size());
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { swap = i; break; }
            if (swap < 0) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign < 0 ? mpz_class(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

} // namespace

ExactPolynomial hermite_generalized_interpolated(int m, int n) {
    // H_{m,n}(z) = z^p G(z^2) with p = m*n mod 2; sample the determinant at
    // z = 1..N and recover G by exact divided differences. Matrix entries use
    // H_k' = 2k H_{k-1}, so one recurrence pass per point yields every entry.
    const int deg = m * n;
    const int p = deg % 2;
    const int nw = (deg - p) / 2 + 1;
    const int kmax = m + n - 1;

    std::vector<mpz_class> w(nw), val(nw);
    for (int i = 0; i < nw; ++i) {
        const long z = i + 1;
        w[i] = mpz_class(z) * z;
        std::vector<mpz_class> h(kmax + 1);
        h[0] = 1;
        if (kmax >= 1) h[1] = 2 * z;
        for (int k = 1; k < kmax; ++k) h[k + 1] = 2 * z * h[k] - 2 * k * h[k - 1];

        std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
        for (int l = 0; l < n; ++l) {
            mpz_class two_l = 1;
            mpz_ui_pow_ui(two_l.get_mpz_t(), 2, l);
            for (int j = 0; j < n; ++j) {
                const int k = m + j;
                if (l > k) { a[l][j] = 0; continue; }
                mpz_class ff = 1;   // k (k-1) ... (k-l+1)
                for (int t = 0; t < l; ++t) ff *= (k - t);
                a[l][j] = two_l * ff * h[k - l];
            }
        }
        mpz_class dv = det_int(std::move(a));
        if (p == 1) {
            mpz_class q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), dv.get_mpz_t(), mpz_class(z).get_mpz_t());
            if (r != 0) fail(Err::Internal, "hermite", "parity factor z does not divide determinant value");
            dv = q;
        }
        val[i] = dv;
    }

    // Newton divided differences over the nodes w[i]
    std::vector<mpq_class> dd(nw);
    for (int i = 0; i < nw; ++i) dd[i] = mpq_class(val[i]);
    for (int l = 1; l < nw; ++l)
        for (int i = nw - 1; i >= l; --i)
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(w[i] - w[i - l]);

    // expand Newton form to monomial coefficients in w
    std::vector<mpq_class> g(nw, mpq_class(0));
    for (int l = nw - 1; l >= 0; --l) {
        for (int i = nw - 1; i >= 1; --i) g[i] = g[i - 1] - g[i] * mpq_class(w[l]);
        g[0] = mpq_class(dd[l]) - g[0] * mpq_class(w[l]);
    }

    std::vector<mpz_class> coeffs(deg + 1, mpz_class(0));
    for (int i = 0; i < nw; ++i) {
        mpq_class q = g[i];
        q.canonicalize();
        if (q.get_den() != 1) fail(Err::Internal, "hermite", "interpolated coefficient not integral");
        coeffs[2 * i + p] = q.get_num();
    }
    return ExactPolynomial{std::move(coeffs)};
}

ExactPolynomial hermite_generalized(int m, int n, int degree_cap) {
    if (m < 1 || n < 1) fail(Err::InvalidArgument, "hermite", "hermite_generalized requires m, n >= 1");
    if (static_cast<long>(m) * n > degree_cap)
        fail(Err::DegreeCapExceeded, "hermite",
             "degree " + std::to_string(static_cast<long>(m) * n) + " exceeds cap " + std::to_string(degree_cap));

    // Bareiss on the polynomial matrix; above a work threshold the
    // evaluation/interpolation route computes the same determinant faster.
    ExactPolynomial det;
    if (static_cast<long>(m) * n * n * n <= 200000)
        det = det_bareiss(hermite_wronskian_matrix(m, n));
    else
        det = hermite_generalized_interpolated(m, n);
    if (det.is_zero() || det.degree() != m * n)
        fail(Err::Internal, "hermite", "Wronskian determinant has unexpected degree");
    return det.normalized();
}

} // namespace ghp
