#ifndef CFZ_CF_SCHUR_HPP
#define CFZ_CF_SCHUR_HPP

#include <optional>
#include <string>
#include <vector>

#include "cfz/complex_poly.hpp"
#include "cfz/linalg.hpp"

namespace cfz {

/// Prescribed expansion coefficients tau_0..tau_m; real-ness is detected at
/// construction (all imaginary parts below 1e-14).
class CoefficientSequence {
  public:
    explicit CoefficientSequence(std::vector<Complex> taus);

    int m() const { return static_cast<int>(taus_.size()) - 1; }
    const std::vector<Complex>& taus() const { return taus_; }
    Complex operator[](int j) const { return taus_[static_cast<size_t>(j)]; }
    bool is_real() const { return is_real_; }
    double max_abs() const;

  private:
    std::vector<Complex> taus_;
    bool is_real_;
};

/// Validated solution of gamma p/p* = tau_0 + ... + tau_m z^m + O(z^{m+1}):
/// monic p of degree l with zeros strictly inside the disk.
struct CFSolution {
    int l = 0;
    ComplexPoly p;
    Complex gamma;
    double residual = 0.0;    // max |Taylor mismatch| through order m
    double zero_margin = 0.0; // 1 - max |zero of p|
};

enum class CFReject {
    ZeroSection,       // Hankel section identically zero
    SingularSystem,    // matching system unsolvable
    DegenerateLeading, // kernel vector has vanishing leading coefficient
    ZeroMargin,        // a zero of p reached the unit circle
    Residual,          // Taylor expansion mismatch beyond tolerance
};

std::string to_string(CFReject r);

struct CFRejection {
    int l;
    CFReject reason;
    std::string detail;
};

/// Returned by blaschke_match: either a validated solution or a typed
/// rejection saying which check failed.
struct MatchResult {
    std::optional<CFSolution> solution;
    std::vector<CFRejection> rejections;
};

/// Hankel eigen/singular data of the (l+1)-section. char_values are the
/// signed eigenvalues (real case) or singular values (complex case),
/// descending by modulus.
struct HankelSpectrum {
    int matrix_order = 0;
    std::vector<double> char_values;
};

struct CharValue {
    double modulus = 0.0;
    std::optional<double> signed_value; // real case only
};

/// The (l+1) x (l+1) section A[i][j] = tau_{l-i-j} for i+j <= l, else 0.
ComplexMatrix hankel_section(const CoefficientSequence& seq, int l);

HankelSpectrum hankel_spectrum(const CoefficientSequence& seq, int l);

/// Modulus (and sign, in the real case) of the extremal characteristic value
/// of the l-section. Throws DomainError on an all-zero section.
CharValue largest_char_value(const CoefficientSequence& seq, int l);

/// det of the 2(l+1) block determinant D_{l+1}(lambda) and of the section
/// characteristic polynomial Delta(lambda); test hooks for the factorization
/// D_{l+1}(lambda) = Delta(lambda) Delta(-lambda) in the real case.
Complex eval_D(const CoefficientSequence& seq, int l, Complex lambda);
Complex eval_delta(const CoefficientSequence& seq, int l, Complex lambda);

struct CFOptions {
    double residual_tol = 1e-8;  // scaled by max(1, |tau|_inf)
    double zero_margin_tol = 1e-9;
    double root_tol = 1e-12;
};

/// Solve the matching identity gamma p = (sum tau_j z^j) p* mod z^{m+1} for
/// the non-leading coefficients of monic p (and the sign/phase of gamma),
/// then validate zeros and the Taylor residual.
MatchResult blaschke_match(const CoefficientSequence& seq, int l, double gamma_mod,
                           std::optional<double> sign_hint = std::nullopt,
                           const CFOptions& opts = {});

struct CFOutcome {
    std::optional<CFSolution> solution;
    std::vector<CFRejection> rejections; // all reasons seen during the l-search
};

/// Iterate l = 0..m, smallest first; return the first validated solution.
/// A fully rejected search (borderline/multiplicity data) comes back with an
/// empty solution and every rejection reason collected.
CFOutcome solve_cf(const CoefficientSequence& seq, const CFOptions& opts = {});

/// Same but throwing on failure; the common entry point.
CFSolution solve_cf_or_throw(const CoefficientSequence& seq, const CFOptions& opts = {});

/// Fejer condition tau_m >= tau_{m-1} >= ... >= tau_0 > 0 (real sequences);
/// when it holds, l = m and the coefficients of p are nonincreasing and
/// nonnegative.
bool fejer_monotone_check(const CoefficientSequence& seq);

} // namespace cfz

#endif
