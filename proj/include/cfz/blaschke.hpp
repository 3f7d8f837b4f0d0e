#ifndef CFZ_BLASCHKE_HPP
#define CFZ_BLASCHKE_HPP

#include <utility>
#include <vector>

#include "cfz/complex_poly.hpp"

namespace cfz {

/// Reversed-conjugate polynomial p*(z) = z^l conj(p(1/conj(z))) taken at p's
/// structural degree l: coefficient array reversed and conjugated.
ComplexPoly reciprocal(const ComplexPoly& p);

/// First order+1 Taylor coefficients of p/p* at z = 0 (recursive long
/// division; p*(0) != 0 whenever p's zeros lie in the disk).
std::vector<Complex> taylor_ratio(const ComplexPoly& p, int order);

/// Monic p with all zeros strictly inside the unit disk plus the scale gamma;
/// the Blaschke data behind the asymptotic Zolotarev polynomial.
struct BlaschkeDatum {
    BlaschkeDatum(ComplexPoly p_in, Complex gamma_in);

    ComplexPoly p;
    Complex gamma;
    double r = 0.0; // max |zero of p|, < 1
};

struct AsymZolotarev {
    AsymZolotarev(BlaschkeDatum datum_in, int n_in);
    BlaschkeDatum datum;
    int n;
};

/// (R_n, S_n) = (Re, Im) of z^n p*(z)/p(z) at z = e^{i phi}.
std::pair<double, double> eval_R_S(const BlaschkeDatum& datum, int n, double phi);

/// |gamma| Re{ e^{i arg gamma} z^n p*(z)/p(z) } — the asymptotic minimal
/// polynomial value at phi.
double eval_asym_zolotarev(const AsymZolotarev& az, double phi);

struct GridSample {
    double phi;
    double value;
};

/// Equispaced samples over [0, 2pi); N must be at least 2(n+l)+2 so Fourier
/// extraction of the head coefficients is alias-safe.
std::vector<GridSample> sample_grid(const AsymZolotarev& az, int n_nodes);

} // namespace cfz

#endif
