#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace ghp {

/// Thin RAII wrapper around mpfr_t with explicit per-value precision.
class Bf {
public:
    explicit Bf(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Bf(const Bf& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Bf(Bf&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Bf& operator=(const Bf& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Bf& operator=(Bf&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Bf() { mpfr_clear(v_); }

    static Bf from_double(double d, mpfr_prec_t prec) { Bf r(prec); mpfr_set_d(r.v_, d, MPFR_RNDN); return r; }
    static Bf from_mpz(const mpz_class& z, mpfr_prec_t prec) { Bf r(prec); mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN); return r; }
    static Bf pow2(long e, mpfr_prec_t prec) { Bf r(prec); mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN); return r; }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }

    friend Bf operator+(const Bf& a, const Bf& b) { Bf r(op_prec(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Bf operator-(const Bf& a, const Bf& b) { Bf r(op_prec(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Bf operator*(const Bf& a, const Bf& b) { Bf r(op_prec(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Bf operator/(const Bf& a, const Bf& b) { Bf r(op_prec(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    Bf operator-() const { Bf r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    Bf& operator+=(const Bf& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Bf& operator-=(const Bf& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Bf& operator*=(const Bf& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Bf& operator/=(const Bf& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend Bf abs(const Bf& a) { Bf r(a.prec()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Bf sqrt(const Bf& a) { Bf r(a.prec()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Bf hypot(const Bf& a, const Bf& b) { Bf r(op_prec(a, b)); mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Bf max(const Bf& a, const Bf& b) { Bf r(op_prec(a, b)); mpfr_max(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }

    friend bool operator<(const Bf& a, const Bf& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Bf& a, const Bf& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Bf& a, const Bf& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }

    // round-trip prints are not needed at full precision; debugging only
    std::string str(int digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    static mpfr_prec_t op_prec(const Bf& a, const Bf& b) { return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)); }
    mpfr_t v_;
};

/// Complex number over Bf.
struct Bc {
    Bf re, im;

    explicit Bc(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    Bc(Bf r, Bf i) : re(std::move(r)), im(std::move(i)) {}
    static Bc from_double(double r, double i, mpfr_prec_t prec) {
        return Bc(Bf::from_double(r, prec), Bf::from_double(i, prec));
    }

    friend Bc operator+(const Bc& a, const Bc& b) { return Bc(a.re + b.re, a.im + b.im); }
    friend Bc operator-(const Bc& a, const Bc& b) { return Bc(a.re - b.re, a.im - b.im); }
    friend Bc operator*(const Bc& a, const Bc& b) {
        return Bc(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Bc operator/(const Bc& a, const Bc& b) {
        Bf d = b.re * b.re + b.im * b.im;
        return Bc((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
    }
    Bc operator-() const { return Bc(-re, -im); }

    friend Bf abs(const Bc& a) { return hypot(a.re, a.im); }
};

} // namespace ghp
