#include "cfz/remez.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cfz/error.hpp"
#include "cfz/quadrature.hpp"

namespace cfz {

double TrigPoly::eval(double phi) const {
    const double c1 = std::cos(phi), s1 = std::sin(phi);
    double ck = 1.0, sk = 0.0;
    double acc = a[0];
    for (int k = 1; k <= degree; ++k) {
        const double c = ck * c1 - sk * s1;
        const double s = sk * c1 + ck * s1;
        ck = c;
        sk = s;
        acc += a[static_cast<size_t>(k)] * ck + b[static_cast<size_t>(k)] * sk;
    }
    return acc;
}

double TrigPoly::max_coeff() const {
    double m = 0.0;
    for (double x : a)
        m = std::max(m, std::abs(x));
    for (double x : b)
        m = std::max(m, std::abs(x));
    return m;
}

FixedHead::FixedHead(int n_in, CoefficientSequence taus_in)
    : n(n_in), taus(std::move(taus_in)) {
    if (n - l() - 1 < 0)
        throw DomainError("FixedHead: need n - l - 1 >= 0");
}

double FixedHead::eval(double phi) const {
    // Frequencies n, n-1, ..., n-l by downward angle recurrence.
    const double c1 = std::cos(phi), s1 = std::sin(phi);
    double ck = std::cos(n * phi), sk = std::sin(n * phi);
    double acc = 0.0;
    for (int j = 0; j <= l(); ++j) {
        const Complex t = taus[j];
        acc += t.real() * ck + t.imag() * sk;
        const double c = ck * c1 + sk * s1;
        const double s = sk * c1 - ck * s1;
        ck = c;
        sk = s;
    }
    return acc;
}

namespace {

struct Cand {
    double phi;
    double val;
};

double error_at(const FixedHead& head, const TrigPoly& corr, double phi) {
    return head.eval(phi) + corr.eval(phi);
}

// All sign-refined local maxima of |error| on the cyclic grid.
std::vector<Cand> find_extrema(const FixedHead& head, const TrigPoly& corr, int grid,
                               double golden_tol) {
    const double two_pi = 2.0 * M_PI;
    std::vector<double> e(static_cast<size_t>(grid));
    for (int i = 0; i < grid; ++i)
        e[static_cast<size_t>(i)] = error_at(head, corr, two_pi * i / grid);

    std::vector<Cand> cands;
    for (int i = 0; i < grid; ++i) {
        const double cur = std::abs(e[static_cast<size_t>(i)]);
        const double prev = std::abs(e[static_cast<size_t>((i + grid - 1) % grid)]);
        const double next = std::abs(e[static_cast<size_t>((i + 1) % grid)]);
        if (cur < prev || cur < next)
            continue;
        const double s = e[static_cast<size_t>(i)] >= 0.0 ? 1.0 : -1.0;
        const auto fn = [&](double phi) { return s * error_at(head, corr, phi); };
        auto [phi, val] = golden_max(fn, two_pi * (i - 1) / grid, two_pi * (i + 1) / grid,
                                     golden_tol);
        phi = std::fmod(phi, two_pi);
        if (phi < 0)
            phi += two_pi;
        cands.push_back({phi, s * val});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return a.phi < b.phi;
    });
    // Plateaus refine to duplicates; keep the stronger of near-equal angles.
    std::vector<Cand> dedup;
    for (const Cand& c : cands) {
        if (!dedup.empty() && std::abs(c.phi - dedup.back().phi) < 1e-9) {
            if (std::abs(c.val) > std::abs(dedup.back().val))
                dedup.back() = c;
        } else {
            dedup.push_back(c);
        }
    }
    if (dedup.size() >= 2 &&
        std::abs(dedup.front().phi + two_pi - dedup.back().phi) < 1e-9) {
        if (std::abs(dedup.back().val) > std::abs(dedup.front().val))
            dedup.front() = {dedup.back().phi - two_pi, dedup.back().val};
        dedup.pop_back();
    }
    return dedup;
}

// Keep the strongest candidate of each cyclic same-sign run, then drop the
// weakest adjacent pairs until exactly `target` alternating points remain
// (never dropping the global maximum). Empty result signals degeneration.
std::vector<Cand> select_alternating(std::vector<Cand> cands, int target) {
    const int m = static_cast<int>(cands.size());
    if (m == 0)
        return {};
    const auto sign_of = [](double v) { return v >= 0.0 ? 1 : -1; };
    int start = -1;
    for (int i = 0; i < m; ++i) {
        if (sign_of(cands[static_cast<size_t>(i)].val) !=
            sign_of(cands[static_cast<size_t>((i + m - 1) % m)].val)) {
            start = i;
            break;
        }
    }
    if (start < 0)
        return {}; // all one sign
    std::vector<Cand> sel;
    int i = start;
    while (true) {
        int best = i;
        int j = i;
        while (true) {
            const int next = (j + 1) % m;
            if (next == start ||
                sign_of(cands[static_cast<size_t>(next)].val) !=
                    sign_of(cands[static_cast<size_t>(i)].val))
                break;
            j = next;
            if (std::abs(cands[static_cast<size_t>(j)].val) >
                std::abs(cands[static_cast<size_t>(best)].val))
                best = j;
        }
        sel.push_back(cands[static_cast<size_t>(best)]);
        i = (j + 1) % m;
        if (i == start)
            break;
    }
    if (static_cast<int>(sel.size()) < target)
        return {};

    while (static_cast<int>(sel.size()) > target) {
        const int k = static_cast<int>(sel.size());
        int gmax = 0;
        for (int t = 1; t < k; ++t)
            if (std::abs(sel[static_cast<size_t>(t)].val) >
                std::abs(sel[static_cast<size_t>(gmax)].val))
                gmax = t;
        int drop = -1;
        double drop_mag = 0.0;
        for (int t = 0; t < k; ++t) {
            const int u = (t + 1) % k;
            if (t == gmax || u == gmax)
                continue;
            const double mag = std::max(std::abs(sel[static_cast<size_t>(t)].val),
                                        std::abs(sel[static_cast<size_t>(u)].val));
            if (drop < 0 || mag < drop_mag) {
                drop = t;
                drop_mag = mag;
            }
        }
        if (drop < 0)
            return {};
        const int u = (drop + 1) % k;
        std::vector<Cand> next;
        for (int t = 0; t < k; ++t)
            if (t != drop && t != u)
                next.push_back(sel[static_cast<size_t>(t)]);
        sel = std::move(next);
    }
    std::sort(sel.begin(), sel.end(), [](const Cand& a, const Cand& b) {
        return a.phi < b.phi;
    });
    return sel;
}

} // namespace

MinimaxResult remez_solve(const FixedHead& head, const RemezOptions& opts) {
    const int d = head.n - head.l();
    const int nref = 2 * d;
    const int dim = 2 * d - 1; // free coefficients of the degree d-1 correction
    const int grid = std::max(4096, 32 * d);

    std::vector<double> ref(static_cast<size_t>(nref));
    for (int k = 0; k < nref; ++k)
        ref[static_cast<size_t>(k)] = M_PI / (2.0 * d) + k * M_PI / d;

    MinimaxResult res{head, TrigPoly(std::max(d - 1, 0)), 0.0, {}, 0.0, 0};
    bool jittered = false;
    bool polished = false;
    std::mt19937 rng(0xa17e);

    for (int iter = 1; iter <= opts.max_iter; ++iter) {
        res.iterations = iter;

        // Levelled system: t(phi_k) - (-1)^k h = -f(phi_k).
        RealMatrix A(nref, nref);
        std::vector<double> rhs(static_cast<size_t>(nref));
        for (int k = 0; k < nref; ++k) {
            const double phi = ref[static_cast<size_t>(k)];
            A(k, 0) = 1.0;
            const double c1 = std::cos(phi), s1 = std::sin(phi);
            double ck = 1.0, sk = 0.0;
            for (int f = 1; f <= d - 1; ++f) {
                const double c = ck * c1 - sk * s1;
                const double s = sk * c1 + ck * s1;
                ck = c;
                sk = s;
                A(k, 2 * f - 1) = ck;
                A(k, 2 * f) = sk;
            }
            A(k, dim) = (k % 2 == 0) ? -1.0 : 1.0;
            rhs[static_cast<size_t>(k)] = -head.eval(phi);
        }
        std::vector<double> sol;
        LinSolveInfo info;
        bool degenerate = false;
        try {
            sol = solve_linear(std::move(A), std::move(rhs), &info);
            if (info.cond_estimate > opts.cond_limit)
                degenerate = true;
        } catch (const Error&) {
            degenerate = true;
        }
        if (degenerate) {
            if (jittered)
                throw NonConvergenceError(
                    "remez_solve: reference degenerated twice (n=" +
                        std::to_string(head.n) + ", l=" + std::to_string(head.l()) + ")",
                    {});
            jittered = true;
            std::uniform_real_distribution<double> u(-1e-3 * M_PI / d, 1e-3 * M_PI / d);
            for (double& phi : ref)
                phi += u(rng);
            std::sort(ref.begin(), ref.end());
            continue;
        }
        TrigPoly t(std::max(d - 1, 0));
        t.a[0] = sol[0];
        for (int f = 1; f <= d - 1; ++f) {
            t.a[static_cast<size_t>(f)] = sol[static_cast<size_t>(2 * f - 1)];
            t.b[static_cast<size_t>(f)] = sol[static_cast<size_t>(2 * f)];
        }
        const double h = sol[static_cast<size_t>(dim)];

        std::vector<Cand> cands = find_extrema(head, t, grid, opts.golden_tol);
        std::vector<Cand> sel = select_alternating(cands, nref);
        if (sel.empty()) {
            // The levelled solve pins e(ref_k) = (-1)^k h, so folding the
            // current reference back in always restores a full alternating
            // set (mid-iteration candidate shortfalls are routine).
            for (int k = 0; k < nref; ++k) {
                const double phi = ref[static_cast<size_t>(k)];
                cands.push_back({phi, error_at(head, t, phi)});
            }
            std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
                return a.phi < b.phi;
            });
            std::vector<Cand> merged;
            for (const Cand& c : cands) {
                if (!merged.empty() && std::abs(c.phi - merged.back().phi) < 1e-9) {
                    if (std::abs(c.val) > std::abs(merged.back().val))
                        merged.back() = c;
                } else {
                    merged.push_back(c);
                }
            }
            sel = select_alternating(merged, nref);
        }
        if (sel.empty()) {
            if (jittered)
                throw NonConvergenceError("remez_solve: too few alternating extrema", {});
            jittered = true;
            std::uniform_real_distribution<double> u(-1e-3 * M_PI / d, 1e-3 * M_PI / d);
            for (double& phi : ref)
                phi += u(rng);
            std::sort(ref.begin(), ref.end());
            continue;
        }

        double e_max = 0.0;
        for (const Cand& c : sel)
            e_max = std::max(e_max, std::abs(c.val));
        const double delta = (e_max - std::abs(h)) / e_max;

        res.correction = t;
        res.levelled_error = std::abs(h);
        res.E_n = e_max;
        res.reference.resize(sel.size());
        for (size_t k = 0; k < sel.size(); ++k)
            res.reference[k] = sel[k].phi;
        for (int k = 0; k < nref; ++k)
            ref[static_cast<size_t>(k)] = sel[static_cast<size_t>(k)].phi;

        if (delta <= opts.conv_tol) {
            // One polish pass tightens the optimality gap to roundoff.
            if (polished || delta <= 1e-15)
                return res;
            polished = true;
        }
    }
    throw NonConvergenceError("remez_solve: iteration cap " + std::to_string(opts.max_iter) +
                                  " reached (n=" + std::to_string(head.n) +
                                  ", l=" + std::to_string(head.l()) + ")",
                              {});
}

double eval_error(const MinimaxResult& result, double phi) {
    return result.head.eval(phi) + result.correction.eval(phi);
}

AlternationCheck verify_alternation(const MinimaxResult& result) {
    const int d = result.head.n - result.head.l();
    AlternationCheck out;
    if (static_cast<int>(result.reference.size()) != 2 * d) {
        out.detail = "reference size " + std::to_string(result.reference.size()) +
                     " != " + std::to_string(2 * d);
        return out;
    }
    if (std::abs(result.E_n - result.levelled_error) > 1e-10 * result.E_n) {
        out.detail = "levelled error deviates from E_n beyond 1e-10 relative";
        return out;
    }
    int prev_sign = 0;
    for (size_t k = 0; k < result.reference.size(); ++k) {
        const double e = eval_error(result, result.reference[k]);
        if (std::abs(e) < result.E_n * (1.0 - 1e-9)) {
            out.detail = "reference magnitude " + std::to_string(std::abs(e)) +
                         " below E_n at index " + std::to_string(k);
            return out;
        }
        const int s = e >= 0.0 ? 1 : -1;
        if (k > 0 && s == prev_sign) {
            out.detail = "signs fail to alternate at index " + std::to_string(k);
            return out;
        }
        prev_sign = s;
    }
    const double first = eval_error(result, result.reference.front());
    const double last = eval_error(result, result.reference.back());
    if ((first >= 0) == (last >= 0)) {
        out.detail = "cyclic alternation broken between last and first reference point";
        return out;
    }
    out.ok = true;
    return out;
}

AsymGap compare_asymptotic(const MinimaxResult& result, const AsymZolotarev& az) {
    if (az.n != result.head.n)
        throw DomainError("compare_asymptotic: degree mismatch");
    AsymGap out;
    const int nodes = std::max(4096, 16 * (az.n + az.datum.p.degree()));
    const auto diff = [&](double phi) {
        return eval_error(result, phi) - eval_asym_zolotarev(az, phi);
    };
    out.sup_gap = sup_norm_periodic(diff, nodes).value;
    out.E_gap = std::abs(result.E_n - std::abs(az.datum.gamma));
    return out;
}

} // namespace cfz
