#include "exact_poly.hpp"

#include "error.hpp"

#include <sstream>

namespace ghp {

static const mpz_class kZero = 0;

ExactPolynomial ExactPolynomial::constant(long v) {
    if (v == 0) return ExactPolynomial{};
    return ExactPolynomial{{mpz_class(v)}};
}

ExactPolynomial ExactPolynomial::monomial(int power, long coeff) {
    if (coeff == 0) return ExactPolynomial{};
    std::vector<mpz_class> c(power + 1, kZero);
    c[power] = coeff;
    return ExactPolynomial{std::move(c)};
}

const mpz_class& ExactPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

void ExactPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ExactPolynomial ExactPolynomial::derivative() const {
    if (c_.size() <= 1) return ExactPolynomial{};
    std::vector<mpz_class> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return ExactPolynomial{std::move(d)};
}

mpz_class ExactPolynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

mpz_class ExactPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        if (v == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ExactPolynomial ExactPolynomial::normalized() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (lead() < 0) g = -g;
    std::vector<mpz_class> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return ExactPolynomial{std::move(out)};
}

ExactPolynomial ExactPolynomial::substitute_iz() const {
    // i^k cycles with period 4; parity symmetry keeps alternate residues only,
    // so after dropping a global unit the coefficients stay real: i^k = i^p * (-1)^((k-p)/2)
    // for k = p (mod 2), p the parity of the lowest nonzero term.
    if (is_zero()) return *this;
    int p = -1;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) { p = static_cast<int>(i) % 2; break; }
    std::vector<mpz_class> out(c_.size(), kZero);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (static_cast<int>(i) % 2 != p)
            fail(Err::InvalidArgument, "hermite", "substitute_iz requires parity-symmetric coefficients");
        out[i] = ((static_cast<int>(i) - p) / 2 % 2 == 0) ? c_[i] : -c_[i];
    }
    return ExactPolynomial{std::move(out)};
}

ExactPolynomial operator+(const ExactPolynomial& p, const ExactPolynomial& q) {
    std::vector<mpz_class> out(std::max(p.c_.size(), q.c_.size()), kZero);
    for (size_t i = 0; i < p.c_.size(); ++i) out[i] += p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) out[i] += q.c_[i];
    return ExactPolynomial{std::move(out)};
}

ExactPolynomial operator-(const ExactPolynomial& p, const ExactPolynomial& q) {
    std::vector<mpz_class> out(std::max(p.c_.size(), q.c_.size()), kZero);
    for (size_t i = 0; i < p.c_.size(); ++i) out[i] += p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) out[i] -= q.c_[i];
    return ExactPolynomial{std::move(out)};
}

ExactPolynomial operator*(const ExactPolynomial& p, const ExactPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return ExactPolynomial{};
    std::vector<mpz_class> out(p.c_.size() + q.c_.size() - 1, kZero);
    for (size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i] == 0) continue;
        for (size_t j = 0; j < q.c_.size(); ++j) {
            if (q.c_[j] == 0) continue;
            out[i + j] += p.c_[i] * q.c_[j];
        }
    }
    return ExactPolynomial{std::move(out)};
}

ExactPolynomial& ExactPolynomial::operator*=(const mpz_class& s) {
    if (s == 0) { c_.clear(); return *this; }
    for (auto& v : c_) v *= s;
    return *this;
}

ExactPolynomial ExactPolynomial::divide_exact(const ExactPolynomial& divisor) const {
    if (divisor.is_zero()) fail(Err::Internal, "hermite", "division by zero polynomial");
    if (is_zero()) return ExactPolynomial{};
    if (degree() < divisor.degree())
        fail(Err::Internal, "hermite", "inexact polynomial division (degree)");
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> quot(degree() - divisor.degree() + 1, kZero);
    const auto& dv = divisor.c_;
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        mpz_class& top = rem[k + divisor.degree()];
        if (top == 0) continue;
        mpz_class q;
        mpz_class r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), dv.back().get_mpz_t());
        if (r != 0) fail(Err::Internal, "hermite", "inexact polynomial division (coefficient)");
        quot[k] = q;
        for (size_t i = 0; i < dv.size(); ++i) rem[k + i] -= q * dv[i];
    }
    for (const auto& v : rem)
        if (v != 0) fail(Err::Internal, "hermite", "inexact polynomial division (remainder)");
    return ExactPolynomial{std::move(quot)};
}

std::string ExactPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        mpz_class a = abs(c_[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) os << "z";
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

} // namespace ghp
