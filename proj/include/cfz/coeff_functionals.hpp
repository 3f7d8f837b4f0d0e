#ifndef CFZ_COEFF_FUNCTIONALS_HPP
#define CFZ_COEFF_FUNCTIONALS_HPP

#include <optional>
#include <vector>

#include "cfz/blaschke.hpp"
#include "cfz/remez.hpp"

namespace cfz {

/// Weights mu_0..mu_l of the coefficient functional sum mu_{l-j} c_j.
class FunctionalWeights {
  public:
    explicit FunctionalWeights(std::vector<Complex> mus);
    int l() const { return static_cast<int>(mus_.size()) - 1; }
    const std::vector<Complex>& mus() const { return mus_; }
    Complex operator[](int j) const { return mus_[static_cast<size_t>(j)]; }

  private:
    std::vector<Complex> mus_;
};

struct SqrtHead {
    std::vector<Complex> lambdas; // Taylor of sqrt(mu_0 + ... + mu_l z^l)
    ComplexPoly s;                // polynomial with s* = sum lambda_nu z^nu
    bool zero_free = false;       // s* has no zero in |z| <= 1 (margin 1e-9)
};

/// Square-root Taylor recursion; throws DomainError when mu_0 = 0 (callers
/// fall through to the brute-force branch).
SqrtHead sqrt_head(const FunctionalWeights& mus);

enum class EtaBranch { SqrtCase, PositiveCase, BruteForce };

struct EtaSolution {
    double eta = 0.0;
    EtaBranch branch = EtaBranch::SqrtCase;
    BlaschkeDatum extremal; // unimodular on the circle (constant == degree 0)
    std::vector<Complex> lambdas; // filled for the sqrt case
    std::vector<Complex> extremal_coeffs; // Taylor c_0..c_l of the extremal
};

struct EtaOptions {
    int positivity_nodes = 4096;
    double positivity_slack = 1e-12;
    int brute_force_starts = 20;
    unsigned brute_force_seed = 0x00e7a;
};

/// Sharp bound of |sum mu_{l-j} c_j| over the H-infinity unit ball, with the
/// attaining Blaschke product. Branches: zero-free sqrt head; nonnegative
/// symbol (unimodular constant); direct search over Blaschke products of
/// degree <= l (supported for l <= 3).
EtaSolution eta(const FunctionalWeights& mus, const EtaOptions& opts = {});

/// Landau constant G_l = 1 + sum_{j=1..l} ((2j-1)!!/(2j)!!)^2.
double landau_constant(int l);

/// Extremal Blaschke datum for all-ones weights; its Taylor coefficients sum
/// to G_l (validated to 1e-10).
BlaschkeDatum landau_extremal(int l);

/// |sum mu_{l-j} c_j| / E_n for the extremal head c — the certified witness
/// that eta cannot be improved (tends to eta from below as n grows).
double least_upper_bound_ratio(const FunctionalWeights& mus, int n,
                               const RemezOptions& remez_opts = {});

/// ||sum tau_j cos((n-j)phi)|| / E_n(tau) for real tau.
double clenshaw_ratio(const CoefficientSequence& taus, int n,
                      const RemezOptions& remez_opts = {});

struct L1Result {
    double computed = 0.0;   // accurate integral of |head + t*|, t* from the LP
    double predicted = 0.0;  // 4 sum |lambda_j|^2
    double grid_value = 0.0; // raw LP objective on the 32n grid
};

/// Minimal L1 deviation of Re{sum mu_j e^{i(n-j)phi}} over corrections in
/// T_{n-l-1}: discretized LP on a 32n grid, then the minimizer's objective is
/// re-evaluated with adaptive quadrature. Requires the zero-free sqrt case
/// and n >= 2l + 2.
L1Result l1_min_deviation(const FunctionalWeights& mus, int n);

} // namespace cfz

#endif
