#include "roots.hpp"

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace ghp {

std::vector<std::complex<double>> RootSet::as_doubles() const {
    std::vector<std::complex<double>> out;
    out.reserve(roots.size());
    for (const auto& r : roots) out.emplace_back(r.re.to_double(), r.im.to_double());
    return out;
}

std::vector<std::complex<double>> scale_roots(const RootSet& rs, int m, int n) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(2 * m + n));
    auto out = rs.as_doubles();
    for (auto& z : out) z *= scale;
    return out;
}

namespace {

// log2 of |c| within +-1, good enough for radius bounds
double log2_mpz(const mpz_class& c) {
    if (c == 0) return -1e9;
    long sz = static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2));
    return static_cast<double>(sz);
}

// Initial circle: 1 + a coefficient-ratio root bound (min of Cauchy and
// Fujiwara-type, evaluated in log space so huge coefficients cannot overflow).
double initial_radius(const ExactPolynomial& p) {
    const int d = p.degree();
    const double lead = log2_mpz(p.lead());
    double cauchy = 0.0;       // log2 max |c_i/c_d|
    double fuji = -1e9;        // log2 max |c_{d-k}/c_d|^{1/k}
    for (int i = 0; i < d; ++i) {
        if (p.coeff(i) == 0) continue;
        const double diff = log2_mpz(p.coeff(i)) - lead;
        cauchy = std::max(cauchy, diff);
        fuji = std::max(fuji, diff / (d - i));
    }
    const double lg = std::min(cauchy, fuji + 1.0);
    return 1.0 + std::exp2(std::min(lg, 512.0));
}

struct Workspace {
    mpfr_prec_t prec;
    int deg;
    std::vector<mpfr_t> c, dc;          // P and P' coefficients
    mpfr_t t1, t2, t3, t4, ar, ai, br, bi, dr, di;

    Workspace(const ExactPolynomial& p, mpfr_prec_t pr) : prec(pr), deg(p.degree()) {
        c.resize(deg + 1);
        dc.resize(deg);
        for (int i = 0; i <= deg; ++i) {
            mpfr_init2(c[i], prec);
            mpfr_set_z(c[i], p.coeff(i).get_mpz_t(), MPFR_RNDN);
        }
        for (int i = 0; i < deg; ++i) {
            mpfr_init2(dc[i], prec);
            mpz_class d_i = p.coeff(i + 1) * (i + 1);
            mpfr_set_z(dc[i], d_i.get_mpz_t(), MPFR_RNDN);
        }
        mpfr_inits2(prec, t1, t2, t3, t4, ar, ai, br, bi, dr, di, static_cast<mpfr_ptr>(nullptr));
    }
    ~Workspace() {
        for (auto& x : c) mpfr_clear(x);
        for (auto& x : dc) mpfr_clear(x);
        mpfr_clears(t1, t2, t3, t4, ar, ai, br, bi, dr, di, static_cast<mpfr_ptr>(nullptr));
    }

    // (outr,outi) = horner(coeffs, z); aliasing with z not allowed
    void horner(const std::vector<mpfr_t>& k, mpfr_srcptr zr, mpfr_srcptr zi,
                mpfr_ptr outr, mpfr_ptr outi) {
        const int n = static_cast<int>(k.size()) - 1;
        mpfr_set(outr, k[n], MPFR_RNDN);
        mpfr_set_zero(outi, 1);
        for (int j = n - 1; j >= 0; --j) {
            mpfr_mul(t1, outr, zr, MPFR_RNDN);
            mpfr_mul(t2, outi, zi, MPFR_RNDN);
            mpfr_sub(t3, t1, t2, MPFR_RNDN);
            mpfr_mul(t1, outr, zi, MPFR_RNDN);
            mpfr_mul(t2, outi, zr, MPFR_RNDN);
            mpfr_add(outi, t1, t2, MPFR_RNDN);
            mpfr_add(outr, t3, k[j], MPFR_RNDN);
        }
    }
};

struct AberthState {
    std::vector<Bc> z;
    std::vector<std::complex<long double>> zl;
    std::vector<bool> frozen;
};

} // namespace

bool aberth_attempt(const ExactPolynomial& p, int precision_bits, int iter_cap, RootSet& out) {
    const int deg = p.degree();
    if (deg < 1) fail(Err::InvalidArgument, "roots", "find_roots requires degree >= 1");
    if (precision_bits < 64) fail(Err::InvalidArgument, "roots", "precision_bits must be >= 64");

    // warm at reduced precision, then finish at the requested one
    std::vector<int> stages;
    for (int s : {768, 2048})
        if (s < precision_bits) stages.push_back(s);
    stages.push_back(precision_bits);

    const double R = initial_radius(p);
    AberthState st;
    st.z.reserve(deg);
    const double offset = 0.36787944117144233; // fixed angular offset, breaks root symmetries
    for (int j = 0; j < deg; ++j) {
        const double th = 2.0 * M_PI * (j + offset) / deg;
        st.z.push_back(Bc::from_double(R * std::cos(th), R * std::sin(th), stages.front()));
    }
    st.frozen.assign(deg, false);

    bool converged = false;
    for (size_t si = 0; si < stages.size(); ++si) {
        const mpfr_prec_t prec = stages[si];
        const bool final_stage = (si + 1 == stages.size());
        Workspace ws(p, prec);
        Bf thresh = Bf::pow2(-stages[si] / 2, prec);
        Bf freeze_thresh = thresh * Bf::pow2(-6, prec);

        // re-embed iterates at this precision
        for (auto& zi : st.z) {
            Bf re(prec), im(prec);
            mpfr_set(re.raw(), zi.re.raw(), MPFR_RNDN);
            mpfr_set(im.raw(), zi.im.raw(), MPFR_RNDN);
            zi = Bc(std::move(re), std::move(im));
        }
        st.zl.assign(deg, {});
        for (int i = 0; i < deg; ++i)
            st.zl[i] = {mpfr_get_ld(st.z[i].re.raw(), MPFR_RNDN), mpfr_get_ld(st.z[i].im.raw(), MPFR_RNDN)};
        st.frozen.assign(deg, false);

        const int cap = final_stage ? std::max(iter_cap, 1) : 600;
        double best_log2 = 1e300;
        int stall = 0;
        converged = false;

        std::vector<Bc> znew(st.z);
        for (int sweep = 0; sweep < cap && !converged; ++sweep) {
            Bf maxcorr = Bf::pow2(-prec * 4, prec);
            bool any_active = false;
            for (int i = 0; i < deg; ++i) {
                if (st.frozen[i]) { znew[i] = st.z[i]; continue; }
                any_active = true;
                // w = P/P'
                ws.horner(ws.c, st.z[i].re.raw(), st.z[i].im.raw(), ws.ar, ws.ai);
                ws.horner(ws.dc, st.z[i].re.raw(), st.z[i].im.raw(), ws.br, ws.bi);
                // guard: derivative vanished (should not happen for simple roots)
                if (mpfr_zero_p(ws.br) && mpfr_zero_p(ws.bi)) {
                    znew[i] = Bc(st.z[i].re + Bf::pow2(-static_cast<long>(prec) / 3, prec), st.z[i].im);
                    continue;
                }
                mpfr_mul(ws.t1, ws.br, ws.br, MPFR_RNDN);
                mpfr_mul(ws.t2, ws.bi, ws.bi, MPFR_RNDN);
                mpfr_add(ws.t3, ws.t1, ws.t2, MPFR_RNDN); // |P'|^2
                mpfr_mul(ws.t1, ws.ar, ws.br, MPFR_RNDN);
                mpfr_mul(ws.t2, ws.ai, ws.bi, MPFR_RNDN);
                mpfr_add(ws.t4, ws.t1, ws.t2, MPFR_RNDN);
                mpfr_div(ws.dr, ws.t4, ws.t3, MPFR_RNDN);  // Re w
                mpfr_mul(ws.t1, ws.ai, ws.br, MPFR_RNDN);
                mpfr_mul(ws.t2, ws.ar, ws.bi, MPFR_RNDN);
                mpfr_sub(ws.t4, ws.t1, ws.t2, MPFR_RNDN);
                mpfr_div(ws.di, ws.t4, ws.t3, MPFR_RNDN);  // Im w

                // Aberth repulsion in long double; plenty for steering
                std::complex<long double> S = 0;
                const auto zi_l = st.zl[i];
                for (int j = 0; j < deg; ++j) {
                    if (j == i) continue;
                    const auto d = zi_l - st.zl[j];
                    const long double n2 = d.real() * d.real() + d.imag() * d.imag();
                    if (n2 > 0)
                        S += std::complex<long double>(d.real() / n2, -d.imag() / n2);
                }
                Bc w{Bf(prec), Bf(prec)};
                mpfr_set(w.re.raw(), ws.dr, MPFR_RNDN);
                mpfr_set(w.im.raw(), ws.di, MPFR_RNDN);
                Bc Sb = Bc::from_double(static_cast<double>(S.real()), static_cast<double>(S.imag()), 64);
                Bc den = Bc::from_double(1.0, 0.0, prec) - w * Sb;
                Bf dn = den.re * den.re + den.im * den.im;
                Bc delta = dn.is_zero() ? w : w / den;

                znew[i] = Bc(st.z[i].re - delta.re, st.z[i].im - delta.im);
                Bf a = abs(delta);
                if (a < freeze_thresh) st.frozen[i] = true;
                if (maxcorr < a) maxcorr = a;
            }
            st.z.swap(znew);
            for (int i = 0; i < deg; ++i)
                st.zl[i] = {mpfr_get_ld(st.z[i].re.raw(), MPFR_RNDN), mpfr_get_ld(st.z[i].im.raw(), MPFR_RNDN)};

            if (!any_active || maxcorr < thresh) { converged = true; break; }
            const double lg = mpfr_get_exp(maxcorr.raw());
            if (lg < best_log2 - 0.5) { best_log2 = lg; stall = 0; }
            else if (++stall > 12 && !final_stage) break; // plateau: escalate precision
        }
        if (!final_stage) continue;
        if (!converged) return false;
    }

    // residual certificate at the requested precision
    Workspace ws(p, precision_bits);
    Bf lead = Bf::from_mpz(p.lead(), precision_bits);
    Bf res(precision_bits);
    for (int i = 0; i < deg; ++i) {
        ws.horner(ws.c, st.z[i].re.raw(), st.z[i].im.raw(), ws.ar, ws.ai);
        Bf pv(precision_bits);
        mpfr_hypot(pv.raw(), ws.ar, ws.ai, MPFR_RNDN);
        Bf az = abs(st.z[i]);
        Bf base = max(az, Bf::from_double(1.0, precision_bits));
        Bf scale(precision_bits);
        mpfr_pow_ui(scale.raw(), base.raw(), deg, MPFR_RNDN);
        Bf r = pv / (abs(lead) * scale);
        res = max(res, r);
    }

    std::sort(st.z.begin(), st.z.end(), [](const Bc& a, const Bc& b) {
        int c = mpfr_cmp(a.re.raw(), b.re.raw());
        if (c != 0) return c < 0;
        return mpfr_cmp(a.im.raw(), b.im.raw()) < 0;
    });

    out.roots = std::move(st.z);
    out.residual_bound = res.to_double();
    out.precision_bits = precision_bits;
    return true;
}

RootSet find_roots(const ExactPolynomial& p, int precision_bits) {
    const int cap = std::max(kPrecisionRetryCap, precision_bits);
    int pb = precision_bits;
    RootSet rs;
    for (;;) {
        if (aberth_attempt(p, pb, 200, rs)) return rs;
        if (pb >= cap)
            fail(Err::NonConvergence, "roots",
                 "Aberth iteration did not converge at " + std::to_string(pb) + " bits (iter cap 200)");
        pb = std::min(2 * pb, cap);
    }
}

} // namespace ghp
