#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cfz/blaschke.hpp"
#include "cfz/cf_schur.hpp"
#include "cfz/error.hpp"
#include "cfz/quadrature.hpp"

using cfz::BlaschkeDatum;
using cfz::Complex;
using cfz::ComplexPoly;

namespace {

// Sign-change angles of f on [0, 2pi) located on a grid and bisected down.
std::vector<double> sign_changes(const std::function<double(double)>& f, int grid) {
    const double two_pi = 2.0 * M_PI;
    std::vector<double> out;
    double prev = f(0.0);
    for (int i = 1; i <= grid; ++i) {
        const double phi = two_pi * i / grid;
        const double cur = f(phi == two_pi ? 0.0 : phi);
        if ((prev < 0) != (cur < 0)) {
            double lo = two_pi * (i - 1) / grid, hi = phi;
            double flo = prev;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if ((flo < 0) != (fm < 0))
                    hi = mid;
                else {
                    lo = mid;
                    flo = fm;
                }
            }
            out.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    return out;
}

// arg(z^n p*/p) must increase strictly for the exact zero counts of the
// interlacing statement; its derivative is n minus the sum of Poisson
// kernels at the zeros. Draws are conditioned on monotonicity at the
// smallest tested degree (the regime where simplicity holds numerically).
bool arg_monotone(const std::vector<Complex>& zeros, int n) {
    for (int i = 0; i < 2048; ++i) {
        const Complex z = std::polar(1.0, 2.0 * M_PI * i / 2048);
        double poisson = 0.0;
        for (const Complex& a : zeros)
            poisson += (1.0 - std::norm(a)) / std::norm(z - a);
        if (n - poisson < 0.5)
            return false;
    }
    return true;
}

BlaschkeDatum random_datum(std::mt19937& rng, int l, double max_mod, int n_min) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Complex> zeros(static_cast<size_t>(l));
    do {
        for (auto& z : zeros)
            z = std::polar(max_mod * u(rng), 2.0 * M_PI * u(rng));
    } while (!arg_monotone(zeros, n_min));
    return BlaschkeDatum(ComplexPoly::from_roots(zeros), Complex(1.0));
}

} // namespace

TEST_CASE("reciprocal: definition cases") {
    auto r = cfz::reciprocal(ComplexPoly{-0.5, 1.0}); // z - 0.5 -> 1 - 0.5 z
    CHECK(r[0] == Complex(1.0));
    CHECK(r[1] == Complex(-0.5));

    r = cfz::reciprocal(ComplexPoly{0.0, 0.0, 1.0}); // z^2 -> 1
    CHECK(r.degree() == 0);
    CHECK(r[0] == Complex(1.0));

    // coeffs (2, i, 1) -> conj-reversed (1, -i, 2)
    r = cfz::reciprocal(ComplexPoly{Complex(2, 0), Complex(0, 1), Complex(1, 0)});
    CHECK(r[0] == Complex(1, 0));
    CHECK(r[1] == Complex(0, -1));
    CHECK(r[2] == Complex(2, 0));
}

TEST_CASE("taylor_ratio: long division oracles") {
    auto c = cfz::taylor_ratio(ComplexPoly{-0.5, 1.0}, 3);
    CHECK(std::abs(c[0] - Complex(-0.5)) < 1e-15);
    CHECK(std::abs(c[1] - Complex(0.75)) < 1e-15);
    CHECK(std::abs(c[2] - Complex(0.375)) < 1e-15);
    CHECK(std::abs(c[3] - Complex(0.1875)) < 1e-15);

    c = cfz::taylor_ratio(ComplexPoly{1.0}, 4);
    CHECK(std::abs(c[0] - Complex(1.0)) < 1e-15);
    for (int k = 1; k <= 4; ++k)
        CHECK(std::abs(c[static_cast<size_t>(k)]) < 1e-15);

    c = cfz::taylor_ratio(ComplexPoly{0.5, 1.0}, 1);
    CHECK(std::abs(c[0] - Complex(0.5)) < 1e-15);
    CHECK(std::abs(c[1] - Complex(0.75)) < 1e-15);
}

TEST_CASE("BlaschkeDatum: invariants") {
    const BlaschkeDatum d(ComplexPoly{-0.5, 1.0}, Complex(1.0));
    CHECK(d.r == doctest::Approx(0.5).epsilon(1e-10));
    CHECK_THROWS_AS(BlaschkeDatum(ComplexPoly{-1.5, 1.0}, Complex(1.0)), cfz::DomainError);
    CHECK_THROWS_AS(BlaschkeDatum(ComplexPoly{-0.5, 2.0}, Complex(1.0)), cfz::DomainError);

    // |p*| = |p| on the unit circle.
    const ComplexPoly p{Complex(0.1, 0.2), Complex(-0.3, 0.1), 1.0};
    const ComplexPoly ps = cfz::reciprocal(p);
    for (int i = 0; i < 64; ++i) {
        const Complex z = std::polar(1.0, 2.0 * M_PI * i / 64);
        CHECK(std::abs(std::abs(p.eval(z)) - std::abs(ps.eval(z))) < 1e-12);
    }
}

TEST_CASE("eval_R_S: l = 0 gives plain cosine/sine, and spec point value") {
    const BlaschkeDatum trivial(ComplexPoly{1.0}, Complex(1.0));
    for (double phi : {0.0, 0.3, 1.7, 4.0}) {
        const auto [r, s] = cfz::eval_R_S(trivial, 5, phi);
        CHECK(r == doctest::Approx(std::cos(5 * phi)).epsilon(1e-13));
        CHECK(s == doctest::Approx(std::sin(5 * phi)).epsilon(1e-13));
    }

    const BlaschkeDatum d(ComplexPoly{-0.5, 1.0}, Complex(1.0));
    const auto [r, s] = cfz::eval_R_S(d, 2, 0.0);
    CHECK(r == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("normalization R^2 + S^2 = 1 at 1000 random angles") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    const BlaschkeDatum d(ComplexPoly{Complex(0.2, -0.4), Complex(-0.1, 0.3), 1.0},
                          Complex(0.7, 0.2));
    for (int i = 0; i < 1000; ++i) {
        const auto [r, s] = cfz::eval_R_S(d, 9, u(rng));
        CHECK(std::abs(r * r + s * s - 1.0) < 1e-12);
    }
}

TEST_CASE("eval_asym_zolotarev: bounds and symmetry") {
    // gamma = 1, p = 1: value = cos(n phi).
    const cfz::AsymZolotarev trivial(BlaschkeDatum(ComplexPoly{1.0}, Complex(1.0)), 4);
    for (double phi : {0.1, 0.9, 2.2})
        CHECK(cfz::eval_asym_zolotarev(trivial, phi) ==
              doctest::Approx(std::cos(4 * phi)).epsilon(1e-13));

    // |value| <= |gamma| everywhere.
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    const Complex gamma(1.3, -0.4);
    const cfz::AsymZolotarev az(
        BlaschkeDatum(ComplexPoly{Complex(0.3, 0.1), Complex(0.0, -0.5), 1.0}, gamma), 11);
    for (int i = 0; i < 400; ++i)
        CHECK(std::abs(cfz::eval_asym_zolotarev(az, u(rng))) <= std::abs(gamma) + 1e-12);

    // Real tau (real p, real gamma): even about phi = 0.
    const cfz::AsymZolotarev even(BlaschkeDatum(ComplexPoly{-0.5, 1.0}, Complex(1.0)), 7);
    for (double phi : {0.2, 0.8, 1.9})
        CHECK(cfz::eval_asym_zolotarev(even, phi) ==
              doctest::Approx(cfz::eval_asym_zolotarev(even, -phi)).epsilon(1e-12));
}

TEST_CASE("golden-sequence sup: all-ones l=1 datum attains |gamma| on a fine grid") {
    const auto sol = cfz::solve_cf_or_throw(
        cfz::CoefficientSequence(std::vector<Complex>{1.0, 1.0}));
    const cfz::AsymZolotarev az(BlaschkeDatum(sol.p, sol.gamma), 20);
    const auto sup = cfz::sup_norm_periodic([&](double phi) {
        return cfz::eval_asym_zolotarev(az, phi);
    }, 4096);
    CHECK(sup.value <= std::abs(sol.gamma) + 1e-12);
    CHECK(sup.value >= std::abs(sol.gamma) - 1e-9);
}

TEST_CASE("sample_grid: trivial data and node checks") {
    const cfz::AsymZolotarev az(BlaschkeDatum(ComplexPoly{1.0}, Complex(1.0)), 1);
    const auto g = cfz::sample_grid(az, 4);
    REQUIRE(g.size() == 4);
    CHECK(g[0].value == doctest::Approx(1.0));
    CHECK(g[1].value == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(g[2].value == doctest::Approx(-1.0));
    CHECK(g[3].value == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS(cfz::sample_grid(az, 3), cfz::DomainError);

    // p = z - 0.5, n = 8, N = 1024: grid max within [0.999, 1] of |gamma| = 1.
    const cfz::AsymZolotarev az2(BlaschkeDatum(ComplexPoly{-0.5, 1.0}, Complex(1.0)), 8);
    double mx = 0.0;
    for (const auto& s : cfz::sample_grid(az2, 1024))
        mx = std::max(mx, std::abs(s.value));
    CHECK(mx >= 0.999);
    CHECK(mx <= 1.0 + 1e-12);
}

TEST_CASE("interlacing: R_n and S_n zeros, 2(n-l) each, strictly alternating") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const int l = 1 + static_cast<int>(rng() % 3);
        const BlaschkeDatum d = random_datum(rng, l, 0.8, l + 3);
        for (int n = l + 3; n <= l + 20; n += 4) {
            const int grid = 64 * (n + l);
            const auto rz = sign_changes(
                [&](double phi) { return cfz::eval_R_S(d, n, phi).first; }, grid);
            const auto sz = sign_changes(
                [&](double phi) { return cfz::eval_R_S(d, n, phi).second; }, grid);
            REQUIRE(static_cast<int>(rz.size()) == 2 * (n - l));
            REQUIRE(static_cast<int>(sz.size()) == 2 * (n - l));
            // Strict interlacing: merge and require alternation of origin.
            size_t i = 0, j = 0;
            int prev = -1;
            bool ok = true;
            while (i < rz.size() || j < sz.size()) {
                int cur;
                if (j >= sz.size() || (i < rz.size() && rz[i] < sz[j])) {
                    cur = 0;
                    ++i;
                } else {
                    cur = 1;
                    ++j;
                }
                if (prev == cur)
                    ok = false;
                prev = cur;
            }
            CHECK(ok);
        }
    }
}

TEST_CASE("coefficient consistency: Fourier heads decay geometrically in n") {
    const auto sol = cfz::solve_cf_or_throw(
        cfz::CoefficientSequence(std::vector<Complex>{-0.5, 0.75}));
    const BlaschkeDatum datum(sol.p, sol.gamma);
    const int l = sol.l;
    const std::vector<Complex> head = {sol.gamma * cfz::taylor_ratio(sol.p, l)[0],
                                       sol.gamma * cfz::taylor_ratio(sol.p, l)[1]};
    std::vector<std::pair<int, double>> gaps;
    for (int n = l + 3; n <= l + 40; ++n) {
        const cfz::AsymZolotarev az(datum, n);
        const int nodes = 2 * (n + l) + 2;
        std::vector<double> samples(static_cast<size_t>(nodes));
        for (int i = 0; i < nodes; ++i)
            samples[static_cast<size_t>(i)] =
                cfz::eval_asym_zolotarev(az, 2.0 * M_PI * i / nodes);
        double gap = 0.0;
        for (int j = 0; j <= l; ++j) {
            const Complex extracted = cfz::trig_coeff(samples, n - j);
            gap = std::max(gap, std::abs(extracted - head[static_cast<size_t>(j)]));
        }
        gaps.push_back({n, gap});
    }
    // Fit the decaying region (values above the double-precision floor).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (const auto& [n, gap] : gaps) {
        if (gap <= 1e-13)
            continue;
        sx += n;
        sy += std::log(gap);
        sxx += static_cast<double>(n) * n;
        sxy += n * std::log(gap);
        ++m;
    }
    REQUIRE(m >= 5);
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    CHECK(std::exp(slope) <= datum.r + 0.1);
}
