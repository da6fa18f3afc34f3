#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "error.hpp"
#include "hermite.hpp"
#include "oracles.hpp"
#include "roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

using namespace ghp;

namespace {

Bf pairing_defect(const RootSet& rs, bool conjugate) {
    // max over roots of the distance to the nearest image root under
    // z -> -z (or conj z)
    Bf worst(rs.precision_bits);
    for (const auto& z : rs.roots) {
        Bc target = conjugate ? Bc(Bf(z.re), -z.im) : Bc(-z.re, -z.im);
        bool first = true;
        Bf best(rs.precision_bits);
        for (const auto& w : rs.roots) {
            Bf d = abs(Bc(w.re - target.re, w.im - target.im));
            if (first || d < best) { best = d; first = false; }
        }
        worst = max(worst, best);
    }
    return worst;
}

} // namespace

TEST_CASE("roots of z^2 - 2") {
    ExactPolynomial p{{mpz_class(-2), mpz_class(0), mpz_class(1)}};
    const auto rs = find_roots(p, 128);
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.residual_bound < 1e-30);
    for (const auto& z : rs.roots) {
        Bc sq = z * z;
        Bf err = abs(Bc(sq.re - Bf::from_double(2.0, 128), sq.im));
        CHECK(err < Bf::pow2(-100, 128));
    }
    const auto d = rs.as_doubles();
    CHECK(d[0].real() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
    CHECK(d[1].real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("roots of H_{2,2} = 4z^4 + 3 sit at +-(3/4)^{1/4} e^{+-i pi/4}") {
    const auto rs = find_roots(hermite_generalized(2, 2), 128);
    REQUIRE(rs.roots.size() == 4);
    const double r = std::pow(0.75, 0.25);
    const double c = r / std::sqrt(2.0);   // 0.65803695...
    for (const auto& z : rs.as_doubles()) {
        CHECK(std::abs(z) == doctest::Approx(r).epsilon(1e-12));
        CHECK(std::abs(std::abs(z.real()) - c) < 1e-12);
        CHECK(std::abs(std::abs(z.imag()) - c) < 1e-12);
    }
}

TEST_CASE("H_4 roots match the Gauss-Hermite node oracle") {
    const auto rs = find_roots(hermite_classical(4), 128);
    auto got = rs.as_doubles();
    auto nodes = oracle::gauss_hermite_nodes(4);
    std::sort(nodes.begin(), nodes.end());
    REQUIRE(got.size() == nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) {
        CHECK(std::abs(got[i].imag()) < 1e-20);
        CHECK(got[i].real() == doctest::Approx(nodes[i]).epsilon(1e-12));
    }
    CHECK(nodes[3] == doctest::Approx(1.65068012388578).epsilon(1e-10));
    CHECK(nodes[2] == doctest::Approx(0.52464762327529).epsilon(1e-10));
}

TEST_CASE("residual certificates stay below 1e-20") {
    for (int m = 1; m <= 10; ++m) {
        const auto p = hermite_generalized(m, 1);
        const auto rs = find_roots(p, default_precision_bits(p.degree()));
        CHECK(rs.residual_bound < 1e-20);
    }
    const auto rs = find_roots(hermite_generalized(3, 3), default_precision_bits(9));
    CHECK(rs.residual_bound < 1e-20);
}

TEST_CASE("root sets close under negation and conjugation") {
    const auto rs = find_roots(hermite_generalized(3, 2), default_precision_bits(6));
    const Bf tol = Bf::from_double(1e-20, 64);
    CHECK(pairing_defect(rs, false) < tol);
    CHECK(pairing_defect(rs, true) < tol);
}

TEST_CASE("simple roots: pairwise separation") {
    const auto rs = find_roots(hermite_generalized(5, 4), default_precision_bits(20));
    const auto d = rs.as_doubles();
    double minsep = 1e300;
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j)
            minsep = std::min(minsep, std::abs(d[i] - d[j]));
    CHECK(minsep > 1e-10);
}

TEST_CASE("agreement with companion-matrix eigenvalues at degree 32") {
    const auto p = hermite_generalized(8, 4);
    const auto rs = find_roots(p, default_precision_bits(32));
    auto mine = rs.as_doubles();
    std::vector<double> cd(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) cd[i] = p.coeff(i).get_d();
    auto ref = oracle::companion_roots(cd);
    REQUIRE(mine.size() == ref.size());
    for (const auto& z : mine) {
        double best = 1e300;
        for (const auto& w : ref) best = std::min(best, std::abs(z - w));
        CHECK(best < 1e-6);
    }
}

TEST_CASE("zero root of odd classical Hermite is found") {
    const auto rs = find_roots(hermite_generalized(5, 1), 128);
    const auto d = rs.as_doubles();
    const bool has_zero = std::any_of(d.begin(), d.end(), [](auto z) { return std::abs(z) < 1e-25; });
    CHECK(has_zero);
}

TEST_CASE("scale_roots applies E^{-1/2}") {
    const auto rs = find_roots(hermite_generalized(2, 2), 128);
    const auto scaled = scale_roots(rs, 2, 2);
    const double expect = std::pow(0.75, 0.25) / std::sqrt(6.0);
    for (const auto& a : scaled) CHECK(std::abs(a) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("iteration cap signals non-convergence; retry path recovers") {
    const auto p = hermite_generalized(4, 3);
    RootSet rs;
    CHECK_FALSE(aberth_attempt(p, 64, 1, rs));
    CHECK_NOTHROW(find_roots(p, 64));
}

TEST_CASE("precision heuristic") {
    CHECK(default_precision_bits(4) == 96);
    CHECK(default_precision_bits(352) == 2880);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(find_roots(ExactPolynomial::constant(3), 128), Error);
    ExactPolynomial p{{mpz_class(-2), mpz_class(0), mpz_class(1)}};
    CHECK_THROWS_AS(find_roots(p, 32), Error);
}
