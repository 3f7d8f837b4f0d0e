#include "cfz/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cfz {

namespace {

constexpr double kCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;

// Tableau: m rows of [A | b] kept in canonical form w.r.t. basis, plus a
// reduced-cost row. The cost row is pivoted incrementally but drifts over
// long runs (dense trig columns produce large multipliers), so entering
// candidates are re-verified against the tableau and the row is rebuilt
// periodically.
struct Tableau {
    int m = 0;
    int n = 0;
    std::vector<double> t;   // (m+1) x (n+1), last row = costs, last col = rhs/obj
    std::vector<int> basis;  // size m

    double& at(int i, int j) { return t[static_cast<size_t>(i) * (n + 1) + j]; }
    double at(int i, int j) const { return t[static_cast<size_t>(i) * (n + 1) + j]; }

    void pivot(int row, int col) {
        const double p = at(row, col);
        const double inv = 1.0 / p;
        for (int j = 0; j <= n; ++j)
            at(row, j) *= inv;
        at(row, col) = 1.0;
        for (int i = 0; i <= m; ++i) {
            if (i == row)
                continue;
            const double f = at(i, col);
            if (f == 0.0)
                continue;
            for (int j = 0; j <= n; ++j)
                at(i, j) -= f * at(row, j);
            at(i, col) = 0.0;
        }
        basis[static_cast<size_t>(row)] = col;
    }

    // Exact reduced cost of one column from the current tableau rows.
    double true_reduced_cost(const std::vector<double>& costs, int col) const {
        double r = costs[static_cast<size_t>(col)];
        for (int i = 0; i < m; ++i) {
            const double cb = costs[static_cast<size_t>(basis[static_cast<size_t>(i)])];
            if (cb != 0.0)
                r -= cb * at(i, col);
        }
        return r;
    }

    void rebuild_cost_row(const std::vector<double>& costs) {
        for (int j = 0; j <= n; ++j)
            at(m, j) = j < n ? costs[static_cast<size_t>(j)] : 0.0;
        for (int i = 0; i < m; ++i) {
            const double cb = costs[static_cast<size_t>(basis[static_cast<size_t>(i)])];
            if (cb == 0.0)
                continue;
            for (int j = 0; j <= n; ++j)
                at(m, j) -= cb * at(i, j);
        }
    }
};

// Core loop; `allowed[j]` masks columns eligible to enter.
LpStatus run(Tableau& tb, const std::vector<double>& costs, const std::vector<char>& allowed,
             long iter_cap, long& iters) {
    const long bland_after = 12L * (tb.m + tb.n);
    long since_rebuild = 0;
    for (;;) {
        if (iters >= iter_cap)
            return LpStatus::IterLimit;
        ++iters;
        if (++since_rebuild >= 256) {
            tb.rebuild_cost_row(costs);
            since_rebuild = 0;
        }

        int enter = -1;
        for (int attempt = 0; attempt < tb.n; ++attempt) {
            int cand = -1;
            if (iters <= bland_after) {
                double best = -kCostTol;
                for (int j = 0; j < tb.n; ++j) {
                    if (!allowed[static_cast<size_t>(j)])
                        continue;
                    const double r = tb.at(tb.m, j);
                    if (r < best) {
                        best = r;
                        cand = j;
                    }
                }
            } else {
                for (int j = 0; j < tb.n; ++j) {
                    if (allowed[static_cast<size_t>(j)] && tb.at(tb.m, j) < -kCostTol) {
                        cand = j;
                        break;
                    }
                }
            }
            if (cand < 0)
                break;
            // Guard against cost-row drift before accepting the candidate.
            const double rc = tb.true_reduced_cost(costs, cand);
            tb.at(tb.m, cand) = rc;
            if (rc < -kCostTol) {
                enter = cand;
                break;
            }
        }
        if (enter < 0) {
            // Nothing improving per the (possibly stale) row: rebuild once and
            // do a final exact scan.
            tb.rebuild_cost_row(costs);
            bool any = false;
            for (int j = 0; j < tb.n && !any; ++j)
                if (allowed[static_cast<size_t>(j)] && tb.at(tb.m, j) < -kCostTol &&
                    tb.true_reduced_cost(costs, j) < -kCostTol)
                    any = true;
            if (!any)
                return LpStatus::Optimal;
            continue;
        }

        // Ratio test; among near-tied ratios take the largest pivot.
        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        double best_pivot = 0.0;
        for (int i = 0; i < tb.m; ++i) {
            const double a = tb.at(i, enter);
            if (a <= kPivotTol)
                continue;
            const double ratio = tb.at(i, tb.n) / a;
            if (ratio < best_ratio - 1e-12) {
                best_ratio = ratio;
                best_pivot = a;
                leave = i;
            } else if (ratio < best_ratio + 1e-12 && a > best_pivot) {
                best_pivot = a;
                leave = i;
            }
        }
        if (leave < 0)
            return LpStatus::Unbounded;
        tb.pivot(leave, enter);
    }
}

} // namespace

LpResult simplex_solve(const LinearProgram& lp,
                       const std::optional<std::vector<int>>& basis_hint, long iter_cap) {
    const int m = lp.A.rows;
    const int n = lp.A.cols;
    if (static_cast<int>(lp.b.size()) != m || static_cast<int>(lp.c.size()) != n)
        throw DomainError("simplex_solve: shape mismatch");
    if (iter_cap <= 0)
        iter_cap = 200L * (m + n) + 10000L;

    LpResult out;

    bool hinted = basis_hint.has_value() && static_cast<int>(basis_hint->size()) == m;
    const int n_ext = hinted ? n : n + m; // artificials appended in phase 1

    Tableau tb;
    tb.m = m;
    tb.n = n_ext;
    tb.t.assign(static_cast<size_t>(m + 1) * (n_ext + 1), 0.0);
    tb.basis.assign(static_cast<size_t>(m), -1);
    for (int i = 0; i < m; ++i) {
        const double flip = lp.b[static_cast<size_t>(i)] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j)
            tb.at(i, j) = flip * lp.A(i, j);
        tb.at(i, n_ext) = flip * lp.b[static_cast<size_t>(i)];
    }

    std::vector<char> allowed(static_cast<size_t>(n_ext), 1);
    std::vector<double> phase2_costs(static_cast<size_t>(n_ext), 0.0);
    for (int j = 0; j < n; ++j)
        phase2_costs[static_cast<size_t>(j)] = lp.c[static_cast<size_t>(j)];

    if (hinted) {
        // Row-by-row canonicalization on the hinted columns.
        for (int i = 0; i < m && hinted; ++i) {
            const int col = (*basis_hint)[static_cast<size_t>(i)];
            if (col < 0 || col >= n || std::abs(tb.at(i, col)) < 1e-9) {
                hinted = false;
                break;
            }
            tb.basis[static_cast<size_t>(i)] = col;
            tb.pivot(i, col);
        }
        if (hinted) {
            for (int i = 0; i < m; ++i)
                if (tb.at(i, n_ext) < -1e-9)
                    hinted = false; // hint not primal feasible
        }
        if (!hinted)
            return simplex_solve(lp, std::nullopt, iter_cap); // rebuild with phase 1
    } else {
        // Phase 1: artificial identity basis, minimize their sum.
        std::vector<double> phase1_costs(static_cast<size_t>(n_ext), 0.0);
        for (int i = 0; i < m; ++i) {
            tb.at(i, n + i) = 1.0;
            tb.basis[static_cast<size_t>(i)] = n + i;
            phase1_costs[static_cast<size_t>(n + i)] = 1.0;
        }
        tb.rebuild_cost_row(phase1_costs);

        const LpStatus st = run(tb, phase1_costs, allowed, iter_cap, out.iterations);
        if (st != LpStatus::Optimal) {
            out.status = st;
            return out;
        }
        double phase1_obj = 0.0;
        for (int i = 0; i < m; ++i)
            if (tb.basis[static_cast<size_t>(i)] >= n)
                phase1_obj += tb.at(i, n_ext);
        if (phase1_obj > 1e-7) {
            out.status = LpStatus::Infeasible;
            return out;
        }
        // Drive any remaining (zero-valued) artificials out where possible.
        for (int i = 0; i < m; ++i) {
            if (tb.basis[static_cast<size_t>(i)] < n)
                continue;
            int col = -1;
            double best = 1e-9;
            for (int j = 0; j < n; ++j) {
                if (std::abs(tb.at(i, j)) > best) {
                    best = std::abs(tb.at(i, j));
                    col = j;
                }
            }
            if (col >= 0)
                tb.pivot(i, col);
        }
        for (int j = n; j < n_ext; ++j)
            allowed[static_cast<size_t>(j)] = 0;
    }

    tb.rebuild_cost_row(phase2_costs);
    out.status = run(tb, phase2_costs, allowed, iter_cap, out.iterations);
    if (out.status != LpStatus::Optimal)
        return out;

    out.x.assign(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < m; ++i) {
        const int bi = tb.basis[static_cast<size_t>(i)];
        if (bi < n)
            out.x[static_cast<size_t>(bi)] = tb.at(i, n_ext);
    }
    out.objective = 0.0;
    for (int j = 0; j < n; ++j)
        out.objective += lp.c[static_cast<size_t>(j)] * out.x[static_cast<size_t>(j)];
    return out;
}

} // namespace cfz
