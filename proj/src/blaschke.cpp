#include "cfz/blaschke.hpp"

#include <algorithm>
#include <cmath>

#include "cfz/error.hpp"

namespace cfz {

ComplexPoly reciprocal(const ComplexPoly& p) {
    std::vector<Complex> c(p.coeffs().rbegin(), p.coeffs().rend());
    for (auto& x : c)
        x = std::conj(x);
    return ComplexPoly(std::move(c));
}

std::vector<Complex> taylor_ratio(const ComplexPoly& p, int order) {
    if (order < 0)
        throw DomainError("taylor_ratio: negative order");
    const int l = p.degree();
    const Complex q0 = std::conj(p[l]);
    if (std::abs(q0) == 0.0)
        throw DomainError("taylor_ratio: p*(0) = 0");
    // q_k = conj(p_{l-k}) are the coefficients of p*.
    std::vector<Complex> c(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        Complex s = p[k];
        for (int j = 0; j < k; ++j) {
            const int qi = k - j;
            if (qi <= l)
                s -= c[static_cast<size_t>(j)] * std::conj(p[l - qi]);
        }
        c[static_cast<size_t>(k)] = s / q0;
    }
    return c;
}

BlaschkeDatum::BlaschkeDatum(ComplexPoly p_in, Complex gamma_in)
    : p(std::move(p_in)), gamma(gamma_in) {
    const int l = p.degree();
    if (std::abs(p[l] - Complex(1.0)) > 1e-12)
        throw DomainError("BlaschkeDatum: p must be monic");
    r = 0.0;
    if (l >= 1) {
        for (const Complex& z : poly_roots(p, 1e-12))
            r = std::max(r, std::abs(z));
    }
    if (r >= 1.0)
        throw DomainError("BlaschkeDatum: p has a zero outside the open unit disk");
}

AsymZolotarev::AsymZolotarev(BlaschkeDatum datum_in, int n_in)
    : datum(std::move(datum_in)), n(n_in) {
    if (n <= datum.p.degree())
        throw DomainError("AsymZolotarev: n must exceed deg p");
}

std::pair<double, double> eval_R_S(const BlaschkeDatum& datum, int n, double phi) {
    // On |z| = 1, p*(z) = z^l conj(p(z)), so z^n p*/p needs one evaluation.
    const int l = datum.p.degree();
    const Complex z = std::polar(1.0, phi);
    const Complex pz = datum.p.eval(z);
    const Complex w = std::polar(1.0, (n + l) * phi) * std::conj(pz) / pz;
    return {w.real(), w.imag()};
}

double eval_asym_zolotarev(const AsymZolotarev& az, double phi) {
    const auto [r_val, s_val] = eval_R_S(az.datum, az.n, phi);
    return (az.datum.gamma * Complex(r_val, s_val)).real();
}

std::vector<GridSample> sample_grid(const AsymZolotarev& az, int n_nodes) {
    const int min_nodes = 2 * (az.n + az.datum.p.degree()) + 2;
    if (n_nodes < min_nodes)
        throw DomainError("sample_grid: need at least 2(n+l)+2 nodes");
    std::vector<GridSample> out(static_cast<size_t>(n_nodes));
    for (int i = 0; i < n_nodes; ++i) {
        const double phi = 2.0 * M_PI * i / n_nodes;
        out[static_cast<size_t>(i)] = {phi, eval_asym_zolotarev(az, phi)};
    }
    return out;
}

} // namespace cfz
