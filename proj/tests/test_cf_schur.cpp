#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cfz/blaschke.hpp"
#include "cfz/cf_schur.hpp"
#include "cfz/error.hpp"

using cfz::CoefficientSequence;
using cfz::Complex;

namespace {

CoefficientSequence seq(std::initializer_list<Complex> taus) {
    return CoefficientSequence(std::vector<Complex>(taus));
}

double gamma_all_ones(int l) {
    return 1.0 / (2.0 * std::sin(M_PI / (2.0 * (2 * l + 3))));
}

} // namespace

TEST_CASE("hankel_section layout") {
    auto A = cfz::hankel_section(seq({1.0}), 0);
    CHECK(A.rows == 1);
    CHECK(A(0, 0) == Complex(1.0));

    A = cfz::hankel_section(seq({1.0, 1.0}), 1);
    CHECK(A(0, 0) == Complex(1.0));
    CHECK(A(0, 1) == Complex(1.0));
    CHECK(A(1, 0) == Complex(1.0));
    CHECK(A(1, 1) == Complex(0.0));

    const Complex a(0.3, 0.0), b(-0.7, 0.0), c(0.2, 0.0);
    A = cfz::hankel_section(seq({a, b, c}), 2);
    CHECK(A(0, 0) == c);
    CHECK(A(0, 1) == b);
    CHECK(A(0, 2) == a);
    CHECK(A(1, 0) == b);
    CHECK(A(1, 1) == a);
    CHECK(A(1, 2) == Complex(0.0));
    CHECK(A(2, 0) == a);
    CHECK(A(2, 1) == Complex(0.0));
    CHECK(A(2, 2) == Complex(0.0));
}

TEST_CASE("largest_char_value: closed forms") {
    auto cv = cfz::largest_char_value(seq({1.0, 1.0}), 1);
    REQUIRE(cv.signed_value.has_value());
    CHECK(*cv.signed_value == doctest::Approx(1.6180339887498949).epsilon(1e-12));

    cv = cfz::largest_char_value(seq({1.0, 1.0, 1.0}), 2);
    CHECK(cv.modulus == doctest::Approx(1.0 / (2.0 * std::sin(M_PI / 14))).epsilon(1e-12));
    CHECK(cv.modulus == doctest::Approx(2.2469796037174672).epsilon(1e-9));

    cv = cfz::largest_char_value(seq({-0.75}), 0);
    REQUIRE(cv.signed_value.has_value());
    CHECK(*cv.signed_value == doctest::Approx(-0.75));
    CHECK(cv.modulus == doctest::Approx(0.75));

    CHECK_THROWS_AS(cfz::largest_char_value(seq({0.0, 1.0}), 0), cfz::DomainError);
}

TEST_CASE("blaschke_match: spec data") {
    // (z-0.5)/(1-0.5z) = -0.5 + 0.75 z + 0.375 z^2 + ...
    auto mr = cfz::blaschke_match(seq({-0.5, 0.75, 0.375}), 1, 1.0);
    REQUIRE(mr.solution.has_value());
    CHECK(std::abs(mr.solution->p[0] - Complex(-0.5)) < 1e-10);
    CHECK(std::abs(mr.solution->gamma - Complex(1.0)) < 1e-10);

    // tau = (c), l = 0 -> p = 1, gamma = c
    mr = cfz::blaschke_match(seq({-0.6}), 0, 0.6);
    REQUIRE(mr.solution.has_value());
    CHECK(mr.solution->p.degree() == 0);
    CHECK(std::abs(mr.solution->gamma - Complex(-0.6)) < 1e-14);

    // Landau l=1 datum: (z+1/2)/(1+z/2) = 1/2 + (3/4) z - ...
    mr = cfz::blaschke_match(seq({0.5, 0.75}), 1, 1.0);
    REQUIRE(mr.solution.has_value());
    CHECK(std::abs(mr.solution->p[0] - Complex(0.5)) < 1e-10);
    CHECK(std::abs(mr.solution->gamma - Complex(1.0)) < 1e-10);
}

TEST_CASE("blaschke_match: typed rejections") {
    // Wrong |gamma| leaves an inconsistent system -> residual rejection.
    auto mr = cfz::blaschke_match(seq({-0.5, 0.75, 0.375}), 1, 2.0);
    CHECK_FALSE(mr.solution.has_value());
    REQUIRE_FALSE(mr.rejections.empty());
    bool saw_typed = false;
    for (const auto& r : mr.rejections)
        if (r.reason == cfz::CFReject::Residual || r.reason == cfz::CFReject::ZeroMargin)
            saw_typed = true;
    CHECK(saw_typed);
}

TEST_CASE("solve_cf: gamma closed form for all-ones sequences") {
    for (int l = 0; l <= 6; ++l) {
        const CoefficientSequence s(std::vector<Complex>(static_cast<size_t>(l) + 1, 1.0));
        const cfz::CFSolution sol = cfz::solve_cf_or_throw(s);
        CHECK(sol.l == l);
        CHECK(std::abs(sol.gamma) == doctest::Approx(gamma_all_ones(l)).epsilon(1e-11));
    }
}

TEST_CASE("solve_cf: derived data and trivial case") {
    auto sol = cfz::solve_cf_or_throw(seq({-0.5, 0.75}));
    CHECK(sol.l == 1);
    CHECK(std::abs(sol.gamma - Complex(1.0)) < 1e-10);
    CHECK(std::abs(sol.p[0] - Complex(-0.5)) < 1e-10);

    sol = cfz::solve_cf_or_throw(seq({Complex(0.3, -0.2)}));
    CHECK(sol.l == 0);
    CHECK(std::abs(sol.gamma - Complex(0.3, -0.2)) < 1e-14);

    // Leading zero: tau = (0, 1) matches gamma z exactly at l = 1.
    sol = cfz::solve_cf_or_throw(seq({0.0, 1.0}));
    CHECK(sol.l == 1);
    CHECK(std::abs(sol.gamma - Complex(1.0)) < 1e-10);
}

TEST_CASE("solve_cf: complex sequence with known Blaschke source") {
    // (z - 0.5i)/(1 + 0.5i z) = -0.5i + 0.75 z - 0.375i z^2 + ...
    const auto sol = cfz::solve_cf_or_throw(
        seq({Complex(0, -0.5), Complex(0.75, 0), Complex(0, -0.375)}));
    CHECK(sol.l == 1);
    CHECK(std::abs(sol.gamma - Complex(1.0)) < 1e-9);
    CHECK(std::abs(sol.p[0] - Complex(0.0, -0.5)) < 1e-9);
}

TEST_CASE("Hankel factorization D(lambda) = Delta(lambda) Delta(-lambda), real case") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const int l = static_cast<int>(rng() % 7); // l <= 6
        std::vector<Complex> taus(static_cast<size_t>(l) + 1);
        for (auto& t : taus)
            t = u(rng);
        CoefficientSequence s(taus);
        for (int k = 0; k < 20; ++k) {
            const Complex lambda(u(rng) * 2.0, 0.0);
            const Complex lhs = cfz::eval_D(s, l, lambda);
            const Complex rhs = cfz::eval_delta(s, l, lambda) * cfz::eval_delta(s, l, -lambda);
            const double scale = std::max({1e-12, std::abs(lhs), std::abs(rhs)});
            CHECK(std::abs(lhs - rhs) / scale < 1e-8);
        }
    }
}

TEST_CASE("hankel_spectrum: +-pairs of D zeros vs section eigenvalues") {
    const CoefficientSequence s = seq({0.4, -0.9, 0.3});
    const auto sp = cfz::hankel_spectrum(s, 2);
    REQUIRE(sp.matrix_order == 3);
    // Every eigenvalue of the section is a zero of Delta, hence of D.
    for (double w : sp.char_values) {
        CHECK(std::abs(cfz::eval_delta(s, 2, Complex(w, 0.0))) < 1e-8);
        CHECK(std::abs(cfz::eval_D(s, 2, Complex(w, 0.0))) < 1e-7);
        CHECK(std::abs(cfz::eval_D(s, 2, Complex(-w, 0.0))) < 1e-7);
    }
}

TEST_CASE("solve_cf: expansion reproduction on random complex sequences") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int rejected = 0;
    const int trials = 100;
    for (int trial = 0; trial < trials; ++trial) {
        const int m = static_cast<int>(rng() % 6);
        std::vector<Complex> taus(static_cast<size_t>(m) + 1);
        for (auto& t : taus)
            t = Complex(u(rng), u(rng));
        CoefficientSequence s(taus);
        const cfz::CFOutcome out = cfz::solve_cf(s);
        if (!out.solution) {
            ++rejected; // typed borderline rejection; rate checked below
            continue;
        }
        const auto& sol = *out.solution;
        const auto c = cfz::taylor_ratio(sol.p, m);
        for (int k = 0; k <= m; ++k)
            CHECK(std::abs(sol.gamma * c[static_cast<size_t>(k)] - taus[static_cast<size_t>(k)]) <
                  1e-8);
        CHECK(sol.zero_margin > 1e-9);
        CHECK(std::abs(std::abs(sol.gamma) - cfz::largest_char_value(s, sol.l).modulus) <
              1e-9 * std::max(1.0, std::abs(sol.gamma)));
    }
    CHECK(rejected <= 2);
}

TEST_CASE("solve_cf: scaling covariance for real c") {
    const std::vector<Complex> base{0.3, -0.7, 0.2};
    const auto s1 = cfz::solve_cf_or_throw(CoefficientSequence(base));
    for (double c : {3.0, -2.0, 0.125}) {
        std::vector<Complex> scaled = base;
        for (auto& t : scaled)
            t *= c;
        const auto s2 = cfz::solve_cf_or_throw(CoefficientSequence(scaled));
        CHECK(s2.l == s1.l);
        for (int k = 0; k <= s1.l; ++k)
            CHECK(std::abs(s2.p[k] - s1.p[k]) < 1e-8);
        CHECK(std::abs(s2.gamma - c * s1.gamma) < 1e-8 * std::abs(c * s1.gamma));
    }
}

TEST_CASE("Fejer condition: l = m and monotone nonnegative p coefficients") {
    CHECK(cfz::fejer_monotone_check(seq({1.0, 1.0, 1.0})));
    CHECK(cfz::fejer_monotone_check(seq({1.0, 2.0})));
    CHECK_FALSE(cfz::fejer_monotone_check(seq({2.0, 1.0})));
    CHECK_FALSE(cfz::fejer_monotone_check(seq({-1.0, 1.0})));

    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 5);
        std::vector<Complex> taus(static_cast<size_t>(m) + 1);
        double acc = u(rng);
        for (int j = 0; j <= m; ++j) {
            taus[static_cast<size_t>(j)] = acc;
            acc += u(rng); // nondecreasing from tau_0 up: Fejer condition
        }
        CoefficientSequence s(taus);
        REQUIRE(cfz::fejer_monotone_check(s));
        const auto sol = cfz::solve_cf_or_throw(s);
        CHECK(sol.l == m);
        for (int k = 0; k < sol.l; ++k) {
            // a_nu multiplies z^{l-nu}; nonincreasing in nu reads as
            // nondecreasing ascending-order coefficients.
            CHECK(sol.p[k].real() <= sol.p[k + 1].real() + 1e-10);
            CHECK(sol.p[k].real() >= -1e-10);
        }
    }
}

TEST_CASE("solve_cf: fully rejected search reports every reason") {
    // An impossible residual tolerance rejects every l; the outcome carries
    // one typed rejection per attempt and the throwing entry point chains
    // them into its message.
    cfz::CFOptions strict;
    strict.residual_tol = 1e-30;
    const CoefficientSequence s = seq({0.3, -0.7, 0.2});
    const auto out = cfz::solve_cf(s, strict);
    CHECK_FALSE(out.solution.has_value());
    CHECK(out.rejections.size() >= 3);
    bool threw = false;
    try {
        cfz::solve_cf_or_throw(s, strict);
    } catch (const cfz::NonConvergenceError& e) {
        threw = true;
        CHECK(std::string(e.what()).find("l=2") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("CoefficientSequence: degenerate input rejected at construction") {
    CHECK_THROWS_AS(CoefficientSequence({Complex(0.0), Complex(0.0)}), cfz::DomainError);
    CHECK_THROWS_AS(CoefficientSequence(std::vector<Complex>{}), cfz::DomainError);
}
