#ifndef CFZ_REMEZ_HPP
#define CFZ_REMEZ_HPP

#include <string>
#include <vector>

#include "cfz/blaschke.hpp"
#include "cfz/cf_schur.hpp"

namespace cfz {

/// Real trigonometric polynomial sum a_k cos(k phi) + b_k sin(k phi),
/// k = 0..degree (b_0 unused, fixed 0).
struct TrigPoly {
    explicit TrigPoly(int degree = 0)
        : degree(degree), a(static_cast<size_t>(degree) + 1, 0.0),
          b(static_cast<size_t>(degree) + 1, 0.0) {}
    int degree;
    std::vector<double> a;
    std::vector<double> b;

    double eval(double phi) const;
    double max_coeff() const;
};

/// Degree-n target with the first l+1 leading coefficients pinned:
/// f_n(phi) = Re sum_j conj(tau_j) e^{i(n-j)phi}
///          = sum_j a_j cos((n-j)phi) + b_j sin((n-j)phi).
struct FixedHead {
    FixedHead(int n_in, CoefficientSequence taus_in);
    int n;
    CoefficientSequence taus;

    int l() const { return taus.m(); }
    double eval(double phi) const;
};

struct RemezOptions {
    double conv_tol = 1e-10; // (max|e| - |h|) / max|e|
    int max_iter = 60;
    double golden_tol = 1e-13;
    double cond_limit = 1e12;
};

struct MinimaxResult {
    FixedHead head;
    TrigPoly correction;          // optimal free part, degree n-l-1
    double E_n = 0.0;             // minimal deviation
    std::vector<double> reference; // 2(n-l) alternation angles, increasing
    double levelled_error = 0.0;
    int iterations = 0;
};

/// Periodic multi-point Remez exchange for the constrained minimax problem.
/// Throws NonConvergenceError when the exchange stalls past the cap or the
/// reference degenerates twice.
MinimaxResult remez_solve(const FixedHead& head, const RemezOptions& opts = {});

/// Z_n(phi) = f_n(phi) + correction(phi).
double eval_error(const MinimaxResult& result, double phi);

struct AlternationCheck {
    bool ok = false;
    std::string detail;
};

/// Optimality certificate: 2(n-l) reference points, cyclically alternating
/// signs, magnitudes within 1e-9 of E_n, and |E_n - levelled_error| within
/// 1e-10 of E_n.
AlternationCheck verify_alternation(const MinimaxResult& result);

struct AsymGap {
    double sup_gap = 0.0; // max |Z_n - asymptotic| over a refined grid
    double E_gap = 0.0;   // | E_n - |gamma| |
};

AsymGap compare_asymptotic(const MinimaxResult& result, const AsymZolotarev& az);

} // namespace cfz

#endif
