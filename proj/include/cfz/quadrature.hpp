#ifndef CFZ_QUADRATURE_HPP
#define CFZ_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace cfz {

using RealFn = std::function<double(double)>;

/// Trapezoid rule on 2^k equispaced nodes over [0, 2pi), doubling k until two
/// successive values differ by less than tol. Starts at k = 4, cap k = 22;
/// throws QuadratureCapError (with the last two estimates) past the cap.
double quad_periodic(const RealFn& f, double tol = 1e-12, int k_cap = 22);

struct SupResult {
    double value = 0.0;
    double arg = 0.0;
};

/// Sup of |f| over [0, 2pi): coarse equispaced grid followed by golden-section
/// refinement around the top local maxima (top 3 by default).
SupResult sup_norm_periodic(const RealFn& f, int min_nodes = 1024, int refine_top = 3,
                            double phi_tol = 1e-12);

/// Golden-section maximizer of f on [lo, hi]; returns (arg, value).
std::pair<double, double> golden_max(const RealFn& f, double lo, double hi,
                                     double tol = 1e-13);

/// Complex Fourier head coefficient a + ib of frequency k (value written as
/// a cos(k phi) + b sin(k phi)) from N equispaced samples; exact for trig
/// polynomials of degree d when N >= 2d + 2.
std::complex<double> trig_coeff(const std::vector<double>& samples, int k);

} // namespace cfz

#endif
