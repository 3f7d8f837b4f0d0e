#include "cfz/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "cfz/error.hpp"

namespace cfz {

double quad_periodic(const RealFn& f, double tol, int k_cap) {
    if (tol <= 0.0)
        throw DomainError("quad_periodic: tol must be positive");
    const double two_pi = 2.0 * M_PI;
    int n = 16; // k = 4
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        sum += f(two_pi * i / n);
    double last = two_pi * sum / n;
    double before = last;
    for (int k = 5; k <= k_cap; ++k) {
        // Doubling adds the midpoints of the current cells.
        for (int i = 0; i < n; ++i)
            sum += f(two_pi * (i + 0.5) / n);
        n *= 2;
        const double cur = two_pi * sum / n;
        if (std::abs(cur - last) < tol)
            return cur;
        before = last;
        last = cur;
    }
    throw QuadratureCapError("quad_periodic: node cap 2^" + std::to_string(k_cap) + " reached",
                             last, before);
}

std::pair<double, double> golden_max(const RealFn& f, double lo, double hi, double tol) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

SupResult sup_norm_periodic(const RealFn& f, int min_nodes, int refine_top, double phi_tol) {
    const int n = std::max(min_nodes, 16);
    const double two_pi = 2.0 * M_PI;
    std::vector<double> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] = std::abs(f(two_pi * i / n));

    // Local maxima on the cyclic grid, strongest first.
    std::vector<int> peaks;
    for (int i = 0; i < n; ++i) {
        const double prev = v[static_cast<size_t>((i + n - 1) % n)];
        const double next = v[static_cast<size_t>((i + 1) % n)];
        if (v[static_cast<size_t>(i)] >= prev && v[static_cast<size_t>(i)] >= next)
            peaks.push_back(i);
    }
    std::sort(peaks.begin(), peaks.end(), [&](int a, int b) {
        return v[static_cast<size_t>(a)] > v[static_cast<size_t>(b)];
    });

    SupResult best;
    const auto absf = [&](double phi) { return std::abs(f(phi)); };
    const int top = std::min<int>(refine_top, static_cast<int>(peaks.size()));
    for (int t = 0; t < top; ++t) {
        const int i = peaks[static_cast<size_t>(t)];
        const double lo = two_pi * (i - 1) / n;
        const double hi = two_pi * (i + 1) / n;
        auto [arg, val] = golden_max(absf, lo, hi, phi_tol);
        if (val > best.value) {
            best.value = val;
            best.arg = arg < 0 ? arg + two_pi : (arg >= two_pi ? arg - two_pi : arg);
        }
    }
    if (peaks.empty() && n > 0) {
        best.value = v[0];
        best.arg = 0.0;
    }
    return best;
}

std::complex<double> trig_coeff(const std::vector<double>& samples, int k) {
    const int n = static_cast<int>(samples.size());
    if (n == 0)
        throw DomainError("trig_coeff: empty sample set");
    double a = 0.0, b = 0.0;
    for (int i = 0; i < n; ++i) {
        const double phi = 2.0 * M_PI * i / n;
        a += samples[static_cast<size_t>(i)] * std::cos(k * phi);
        b += samples[static_cast<size_t>(i)] * std::sin(k * phi);
    }
    const double scale = (k == 0) ? 1.0 / n : 2.0 / n;
    return {a * scale, b * scale};
}

} // namespace cfz
