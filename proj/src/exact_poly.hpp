#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ghp {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of z^i; the zero polynomial has an empty
/// coefficient vector and degree() == -1.
class ExactPolynomial {
public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ExactPolynomial constant(long v);
    static ExactPolynomial monomial(int power, long coeff = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& coeff(int i) const;
    const mpz_class& lead() const { return c_.back(); }

    ExactPolynomial derivative() const;
    mpz_class eval(const mpz_class& x) const;

    // gcd of all coefficients, positive; 0 for the zero polynomial
    mpz_class content() const;
    // divide by content and force a positive leading coefficient
    ExactPolynomial normalized() const;

    // substitute z -> i*z, keeping only the real scale: requires parity
    // symmetry (all nonzero coefficients of equal index parity); the result
    // has integer coefficients up to the dropped global i^deg factor.
    ExactPolynomial substitute_iz() const;

    bool operator==(const ExactPolynomial& o) const { return c_ == o.c_; }

    friend ExactPolynomial operator+(const ExactPolynomial& p, const ExactPolynomial& q);
    friend ExactPolynomial operator-(const ExactPolynomial& p, const ExactPolynomial& q);
    friend ExactPolynomial operator*(const ExactPolynomial& p, const ExactPolynomial& q);
    ExactPolynomial& operator*=(const mpz_class& s);

    // exact division; asserts the remainder vanishes
    ExactPolynomial divide_exact(const ExactPolynomial& divisor) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

} // namespace ghp
