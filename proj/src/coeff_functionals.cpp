#include "cfz/coeff_functionals.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cfz/error.hpp"
#include "cfz/quadrature.hpp"
#include "cfz/simplex.hpp"

namespace cfz {

FunctionalWeights::FunctionalWeights(std::vector<Complex> mus) : mus_(std::move(mus)) {
    if (mus_.empty())
        throw DomainError("FunctionalWeights: needs at least one weight");
    bool any = false;
    for (const Complex& m : mus_)
        if (std::abs(m) > 0.0)
            any = true;
    if (!any)
        throw DomainError("FunctionalWeights: all weights zero");
}

SqrtHead sqrt_head(const FunctionalWeights& mus) {
    const int l = mus.l();
    if (std::abs(mus[0]) == 0.0)
        throw DomainError("sqrt_head: mu_0 = 0, square-root branch undefined");
    SqrtHead out;
    out.lambdas.resize(static_cast<size_t>(l) + 1);
    out.lambdas[0] = std::sqrt(mus[0]);
    for (int k = 1; k <= l; ++k) {
        Complex s = mus[k];
        for (int j = 1; j < k; ++j)
            s -= out.lambdas[static_cast<size_t>(j)] * out.lambdas[static_cast<size_t>(k - j)];
        out.lambdas[static_cast<size_t>(k)] = s / (2.0 * out.lambdas[0]);
    }
    // s is the degree-l reversal: s(z) = sum conj(lambda_nu) z^{l-nu}.
    std::vector<Complex> sc(static_cast<size_t>(l) + 1);
    for (int k = 0; k <= l; ++k)
        sc[static_cast<size_t>(k)] = std::conj(out.lambdas[static_cast<size_t>(l - k)]);
    out.s = ComplexPoly(std::move(sc));

    const ComplexPoly s_star(std::vector<Complex>(out.lambdas));
    out.zero_free = true;
    if (s_star.degree() >= 1) {
        for (const Complex& z : poly_roots(s_star, 1e-12))
            if (std::abs(z) <= 1.0 + 1e-9)
                out.zero_free = false;
    }
    return out;
}

namespace {

Complex functional_value(const FunctionalWeights& mus, const std::vector<Complex>& c) {
    const int l = mus.l();
    Complex s(0.0);
    for (int j = 0; j <= l; ++j)
        s += mus[l - j] * c[static_cast<size_t>(j)];
    return s;
}

// |sum mu_{l-j} c_j(zeros)| for the Blaschke product with the given zeros.
double brute_objective(const FunctionalWeights& mus, const std::vector<Complex>& zeros) {
    const ComplexPoly p = ComplexPoly::from_roots(zeros);
    const std::vector<Complex> c = taylor_ratio(p, mus.l());
    return std::abs(functional_value(mus, c));
}

struct BruteResult {
    double value = 0.0;
    std::vector<Complex> zeros;
};

// Multi-start coordinate descent over zeros in polar form; exact search space
// by eq. of the extremal problem (the optimum is a Blaschke product of degree
// <= l, global rotation immaterial under |.|).
BruteResult eta_brute_force(const FunctionalWeights& mus, const EtaOptions& opts) {
    const int l = mus.l();
    if (l > 3)
        throw UnsupportedCaseError("eta: brute-force branch supports l <= 3 only");
    std::mt19937 rng(opts.brute_force_seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    BruteResult best;
    best.value = std::abs(mus[l]); // degree-0 candidate: constant of modulus 1
    for (int deg = 1; deg <= l; ++deg) {
        for (int start = 0; start < opts.brute_force_starts; ++start) {
            std::vector<double> rho(static_cast<size_t>(deg)), theta(static_cast<size_t>(deg));
            for (int k = 0; k < deg; ++k) {
                rho[static_cast<size_t>(k)] = start == 0 ? 0.3 : 0.95 * unif(rng);
                theta[static_cast<size_t>(k)] = start == 0 ? 0.0 : 2.0 * M_PI * unif(rng);
            }
            const auto zeros_of = [&]() {
                std::vector<Complex> z(static_cast<size_t>(deg));
                for (int k = 0; k < deg; ++k)
                    z[static_cast<size_t>(k)] =
                        std::polar(rho[static_cast<size_t>(k)], theta[static_cast<size_t>(k)]);
                return z;
            };
            double cur = brute_objective(mus, zeros_of());
            double step = 0.2;
            while (step > 1e-8) {
                bool improved = false;
                for (int k = 0; k < deg; ++k) {
                    for (int axis = 0; axis < 2; ++axis) {
                        double& v = axis == 0 ? rho[static_cast<size_t>(k)]
                                              : theta[static_cast<size_t>(k)];
                        const double saved = v;
                        for (double dir : {+1.0, -1.0}) {
                            v = saved + dir * step;
                            if (axis == 0)
                                v = std::clamp(v, 0.0, 1.0 - 1e-7);
                            const double trial = brute_objective(mus, zeros_of());
                            if (trial > cur + 1e-15) {
                                cur = trial;
                                improved = true;
                                break;
                            }
                            v = saved;
                        }
                    }
                }
                if (!improved)
                    step *= 0.5;
            }
            if (cur > best.value) {
                best.value = cur;
                best.zeros = zeros_of();
            }
        }
    }
    return best;
}

} // namespace

EtaSolution eta(const FunctionalWeights& mus, const EtaOptions& opts) {
    const int l = mus.l();

    // Branch nu = 0: zero-free square-root head.
    if (std::abs(mus[0]) > 0.0) {
        const SqrtHead sh = sqrt_head(mus);
        if (sh.zero_free) {
            double sum = 0.0;
            for (const Complex& lam : sh.lambdas)
                sum += std::norm(lam);
            // f = s/s* = (conj(lambda_0)/lambda_0) p/p* with p = s/conj(lambda_0).
            const Complex lam0c = std::conj(sh.lambdas[0]);
            const ComplexPoly p = sh.s.scaled(1.0 / lam0c);
            const Complex gamma = lam0c / sh.lambdas[0];
            EtaSolution out{sum, EtaBranch::SqrtCase, BlaschkeDatum(p, gamma), sh.lambdas, {}};
            out.extremal_coeffs = taylor_ratio(p, l);
            for (auto& c : out.extremal_coeffs)
                c *= gamma;
            return out;
        }
    }

    // Branch nu = l: Re{mu_0 e^{il phi} + ... + mu_{l-1} e^{i phi} + mu_l / 2} >= 0.
    if (std::abs(mus[l].imag()) <= 1e-12 && mus[l].real() >= 0.0) {
        const auto symbol = [&](double phi) {
            Complex s = 0.5 * mus[l];
            for (int j = 0; j < l; ++j)
                s += mus[j] * std::polar(1.0, (l - j) * phi);
            return s.real();
        };
        // Signed minimum: grid scan, then derivative-free refinement of the
        // lowest grid minima.
        const int nodes = opts.positivity_nodes;
        std::vector<double> vals(static_cast<size_t>(nodes));
        for (int i = 0; i < nodes; ++i)
            vals[static_cast<size_t>(i)] = symbol(2.0 * M_PI * i / nodes);
        double grid_min = vals[0];
        std::vector<int> dips;
        for (int i = 0; i < nodes; ++i) {
            grid_min = std::min(grid_min, vals[static_cast<size_t>(i)]);
            const double prev = vals[static_cast<size_t>((i + nodes - 1) % nodes)];
            const double next = vals[static_cast<size_t>((i + 1) % nodes)];
            if (vals[static_cast<size_t>(i)] <= prev && vals[static_cast<size_t>(i)] <= next)
                dips.push_back(i);
        }
        std::sort(dips.begin(), dips.end(), [&](int a, int b) {
            return vals[static_cast<size_t>(a)] < vals[static_cast<size_t>(b)];
        });
        double refined_min = grid_min;
        for (size_t t = 0; t < std::min<size_t>(3, dips.size()); ++t) {
            const int i = dips[t];
            const auto low = golden_max([&](double phi) { return -symbol(phi); },
                                        2.0 * M_PI * (i - 1) / nodes,
                                        2.0 * M_PI * (i + 1) / nodes);
            refined_min = std::min(refined_min, -low.second);
        }
        if (refined_min >= -opts.positivity_slack) {
            EtaSolution out{mus[l].real(), EtaBranch::PositiveCase,
                            BlaschkeDatum(ComplexPoly{Complex(1.0)}, Complex(1.0)),
                            {},
                            {}};
            out.extremal_coeffs.assign(static_cast<size_t>(l) + 1, Complex(0.0));
            out.extremal_coeffs[0] = 1.0;
            return out;
        }
    }

    const BruteResult br = eta_brute_force(mus, opts);
    ComplexPoly p = br.zeros.empty() ? ComplexPoly{Complex(1.0)}
                                     : ComplexPoly::from_roots(br.zeros);
    EtaSolution out{br.value, EtaBranch::BruteForce, BlaschkeDatum(p, Complex(1.0)), {}, {}};
    out.extremal_coeffs = taylor_ratio(p, l);
    return out;
}

double landau_constant(int l) {
    if (l < 0)
        throw DomainError("landau_constant: l must be >= 0");
    double g = 1.0;
    double term = 1.0; // (2j-1)!!/(2j)!!
    for (int j = 1; j <= l; ++j) {
        term = term * (2.0 * j - 1.0) / (2.0 * j);
        g += term * term;
    }
    return g;
}

BlaschkeDatum landau_extremal(int l) {
    if (l < 1)
        throw DomainError("landau_extremal: l must be >= 1");
    // lambda_nu = (2nu-1)!!/(2nu)!! = (-1)^nu binom(-1/2, nu); p carries them
    // reversed, so the leading coefficient is lambda_0 = 1.
    std::vector<Complex> coeffs(static_cast<size_t>(l) + 1);
    double term = 1.0;
    coeffs[static_cast<size_t>(l)] = 1.0;
    for (int nu = 1; nu <= l; ++nu) {
        term = term * (2.0 * nu - 1.0) / (2.0 * nu);
        coeffs[static_cast<size_t>(l - nu)] = term;
    }
    const ComplexPoly p(coeffs);
    BlaschkeDatum datum(p, Complex(1.0));

    const std::vector<Complex> c = taylor_ratio(p, l);
    Complex sum(0.0);
    for (const Complex& x : c)
        sum += x;
    const double target = landau_constant(l);
    if (std::abs(sum - target) > 1e-10) {
        // Alternative convention: sums starting at nu = 1 as displayed.
        std::vector<Complex> alt(coeffs.begin(), coeffs.end() - 1);
        Complex alt_sum(0.0);
        if (ComplexPoly(alt).degree() >= 0) {
            const ComplexPoly pa(alt);
            if (std::abs(pa.leading()) > 0.0)
                for (const Complex& x : taylor_ratio(pa, l))
                    alt_sum += x;
        }
        throw DomainError("landau_extremal: coefficient sum " + std::to_string(sum.real()) +
                          " misses G_l = " + std::to_string(target) +
                          " (nu=1-start convention gives " + std::to_string(alt_sum.real()) +
                          ")");
    }
    return datum;
}

double least_upper_bound_ratio(const FunctionalWeights& mus, int n,
                               const RemezOptions& remez_opts) {
    const int l = mus.l();
    if (n <= l + 1)
        throw DomainError("least_upper_bound_ratio: need n > l + 1");
    const EtaSolution sol = eta(mus);
    const double num = std::abs(functional_value(mus, sol.extremal_coeffs));
    const FixedHead head(n, CoefficientSequence(sol.extremal_coeffs));
    const MinimaxResult res = remez_solve(head, remez_opts);
    return num / res.E_n;
}

double clenshaw_ratio(const CoefficientSequence& taus, int n,
                      const RemezOptions& remez_opts) {
    if (!taus.is_real())
        throw DomainError("clenshaw_ratio: tau must be real");
    if (n <= taus.m() + 1)
        throw DomainError("clenshaw_ratio: need n > l + 1");
    const auto head_fn = [&](double phi) {
        double s = 0.0;
        for (int j = 0; j <= taus.m(); ++j)
            s += taus[j].real() * std::cos((n - j) * phi);
        return s;
    };
    const double num = sup_norm_periodic(head_fn, std::max(1024, 16 * n)).value;
    const MinimaxResult res = remez_solve(FixedHead(n, taus), remez_opts);
    return num / res.E_n;
}

L1Result l1_min_deviation(const FunctionalWeights& mus, int n) {
    const int l = mus.l();
    if (n < 2 * l + 2)
        throw DomainError("l1_min_deviation: need n >= 2l + 2");
    SqrtHead sh;
    try {
        sh = sqrt_head(mus);
    } catch (const DomainError&) {
        throw UnsupportedCaseError("l1_min_deviation: mu_0 = 0 falls outside the zero-free case");
    }
    if (!sh.zero_free)
        throw UnsupportedCaseError(
            "l1_min_deviation: sqrt head has zeros in the closed disk (general case unsupported)");

    // Head uses mu_j directly: Re{sum mu_j e^{i(n-j)phi}}.
    const auto head_fn = [&](double phi) {
        double s = 0.0;
        for (int j = 0; j <= l; ++j) {
            const Complex m = mus[j];
            s += m.real() * std::cos((n - j) * phi) - m.imag() * std::sin((n - j) * phi);
        }
        return s;
    };

    const int grid = 32 * n;
    const int d = n - l;
    const int dim = 2 * d - 1;
    const double w = 2.0 * M_PI / grid;

    // LP: min sum w (u+_i + u-_i) s.t. B t - u+ + u- = -g. Free t split into
    // t = tp - tm. Warm basis: the slack matching the sign of g per row.
    const int nvar = 2 * dim + 2 * grid;
    LinearProgram lp;
    lp.c.assign(static_cast<size_t>(nvar), 0.0);
    for (int i = 0; i < grid; ++i) {
        lp.c[static_cast<size_t>(2 * dim + i)] = w;
        lp.c[static_cast<size_t>(2 * dim + grid + i)] = w;
    }
    lp.A = RealMatrix(grid, nvar);
    lp.b.assign(static_cast<size_t>(grid), 0.0);
    std::vector<int> basis(static_cast<size_t>(grid));
    std::vector<double> g(static_cast<size_t>(grid));
    for (int i = 0; i < grid; ++i) {
        const double phi = w * i;
        g[static_cast<size_t>(i)] = head_fn(phi);
        lp.A(i, 0) = 1.0;
        lp.A(i, dim) = -1.0;
        const double c1 = std::cos(phi), s1 = std::sin(phi);
        double ck = 1.0, sk = 0.0;
        for (int f = 1; f <= d - 1; ++f) {
            const double c = ck * c1 - sk * s1;
            const double s = sk * c1 + ck * s1;
            ck = c;
            sk = s;
            lp.A(i, 2 * f - 1) = ck;
            lp.A(i, 2 * f) = sk;
            lp.A(i, dim + 2 * f - 1) = -ck;
            lp.A(i, dim + 2 * f) = -sk;
        }
        lp.A(i, 2 * dim + i) = -1.0;          // u+
        lp.A(i, 2 * dim + grid + i) = 1.0;    // u-
        lp.b[static_cast<size_t>(i)] = -g[static_cast<size_t>(i)];
        basis[static_cast<size_t>(i)] = g[static_cast<size_t>(i)] > 0.0
                                            ? 2 * dim + i
                                            : 2 * dim + grid + i;
    }
    const LpResult lpr = simplex_solve(lp, basis);
    if (lpr.status != LpStatus::Optimal)
        throw NonConvergenceError("l1_min_deviation: LP did not reach optimality", {});

    TrigPoly t(std::max(d - 1, 0));
    t.a[0] = lpr.x[0] - lpr.x[static_cast<size_t>(dim)];
    for (int f = 1; f <= d - 1; ++f) {
        t.a[static_cast<size_t>(f)] =
            lpr.x[static_cast<size_t>(2 * f - 1)] - lpr.x[static_cast<size_t>(dim + 2 * f - 1)];
        t.b[static_cast<size_t>(f)] =
            lpr.x[static_cast<size_t>(2 * f)] - lpr.x[static_cast<size_t>(dim + 2 * f)];
    }

    L1Result out;
    out.grid_value = lpr.objective;
    out.computed = quad_periodic(
        [&](double phi) { return std::abs(head_fn(phi) + t.eval(phi)); }, 1e-8);
    out.predicted = 0.0;
    for (const Complex& lam : sh.lambdas)
        out.predicted += 4.0 * std::norm(lam);
    return out;
}

} // namespace cfz
