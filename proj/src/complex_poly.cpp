#include "cfz/complex_poly.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cfz/error.hpp"

namespace cfz {

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == Complex(0.0))
        coeffs_.pop_back();
    if (coeffs_.empty())
        coeffs_.push_back(Complex(0.0));
}

ComplexPoly::ComplexPoly(std::initializer_list<Complex> coeffs)
    : ComplexPoly(std::vector<Complex>(coeffs)) {}

ComplexPoly ComplexPoly::from_roots(std::span<const Complex> roots) {
    std::vector<Complex> c{Complex(1.0)};
    for (Complex r : roots) {
        c.push_back(Complex(0.0));
        for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k)
            c[static_cast<size_t>(k)] = c[static_cast<size_t>(k - 1)] - r * c[static_cast<size_t>(k)];
        c[0] *= -r;
    }
    return ComplexPoly(std::move(c));
}

Complex ComplexPoly::operator[](int k) const {
    if (k < 0 || k > degree())
        return Complex(0.0);
    return coeffs_[static_cast<size_t>(k)];
}

bool ComplexPoly::is_zero() const {
    return degree() == 0 && coeffs_[0] == Complex(0.0);
}

Complex ComplexPoly::eval(Complex z) const {
    Complex acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

ComplexPoly ComplexPoly::derivative() const {
    if (degree() == 0)
        return ComplexPoly();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return ComplexPoly(std::move(d));
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, Complex(0.0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ComplexPoly(std::move(c));
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex(0.0));
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
    return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::scaled(Complex factor) const {
    std::vector<Complex> c = coeffs_;
    for (auto& x : c)
        x *= factor;
    return ComplexPoly(std::move(c));
}

namespace {

// One Aberth-Ehrlich pass over all non-frozen approximants.
double aberth_pass(const ComplexPoly& p, const ComplexPoly& dp,
                   std::vector<Complex>& z, const std::vector<char>& frozen) {
    const int n = static_cast<int>(z.size());
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        if (frozen[static_cast<size_t>(i)])
            continue;
        const Complex pi = p.eval(z[static_cast<size_t>(i)]);
        Complex dpi = dp.eval(z[static_cast<size_t>(i)]);
        if (std::abs(dpi) < 1e-300)
            dpi = Complex(1e-300);
        const Complex newton = pi / dpi;
        Complex sum(0.0);
        for (int j = 0; j < n; ++j) {
            if (j == i)
                continue;
            Complex diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            if (std::abs(diff) < 1e-300)
                diff = Complex(1e-300);
            sum += 1.0 / diff;
        }
        Complex denom = 1.0 - newton * sum;
        if (std::abs(denom) < 1e-300)
            denom = Complex(1e-300);
        const Complex step = newton / denom;
        z[static_cast<size_t>(i)] -= step;
        worst = std::max(worst, std::abs(step));
    }
    return worst;
}

} // namespace

std::vector<Complex> poly_roots(const ComplexPoly& p, double tol) {
    const int deg = p.degree();
    if (deg < 1)
        throw DomainError("poly_roots: degree must be >= 1");
    if (std::abs(p.leading()) == 0.0)
        throw DomainError("poly_roots: zero leading coefficient");

    // Exact zero constant terms give roots at the origin.
    std::vector<Complex> roots;
    std::vector<Complex> work = p.coeffs();
    size_t zero_head = 0;
    while (zero_head + 1 < work.size() && work[zero_head] == Complex(0.0))
        ++zero_head;
    roots.assign(zero_head, Complex(0.0));
    work.erase(work.begin(), work.begin() + static_cast<long>(zero_head));
    if (work.size() == 1)
        return roots;

    const Complex lead = work.back();
    for (auto& c : work)
        c /= lead;
    ComplexPoly q(work);
    const ComplexPoly dq = q.derivative();
    const int n = q.degree();

    double maxc = 0.0;
    for (const auto& c : p.coeffs())
        maxc = std::max(maxc, std::abs(c));
    const double target = tol * maxc * (deg + 1);

    // Initial approximants on a randomized circle; the seed is fixed so
    // results are reproducible run to run.
    std::mt19937 rng(0x5eed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double r0 = std::pow(std::max(std::abs(q[0]), 1e-12), 1.0 / n);
    r0 = std::max(1e-3, std::min(r0, 1e3)) * (0.6 + 0.8 * unif(rng));
    const double phase0 = 2.0 * M_PI * unif(rng);
    std::vector<Complex> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        z[static_cast<size_t>(i)] =
            std::polar(r0, phase0 + 2.0 * M_PI * (i + 0.25 * unif(rng)) / n);

    // A residual below a few ulps of the running evaluation bound cannot be
    // improved in doubles; such roots count as converged even when the
    // absolute target is tighter (only reachable for roots far outside the
    // unit disk).
    const auto converged = [&](Complex zi) {
        Complex acc(0.0);
        double bound = 0.0;
        const double az = std::abs(zi);
        const auto& pc = p.coeffs();
        for (auto it = pc.rbegin(); it != pc.rend(); ++it) {
            acc = acc * zi + *it;
            bound = bound * az + std::abs(*it);
        }
        return std::abs(acc) <= std::max(target, 4.0 * 2.22e-16 * bound);
    };

    std::vector<char> frozen(static_cast<size_t>(n), 0);
    const int cap = 500;
    for (int it = 0; it < cap; ++it) {
        aberth_pass(q, dq, z, frozen);
        bool all_done = true;
        for (int i = 0; i < n; ++i) {
            if (frozen[static_cast<size_t>(i)])
                continue;
            if (converged(z[static_cast<size_t>(i)]))
                frozen[static_cast<size_t>(i)] = 1;
            else
                all_done = false;
        }
        if (all_done) {
            roots.insert(roots.end(), z.begin(), z.end());
            return roots;
        }
    }
    std::vector<Complex> best = roots;
    best.insert(best.end(), z.begin(), z.end());
    throw NonConvergenceError("poly_roots: Aberth iteration cap (500) reached", best);
}

} // namespace cfz
