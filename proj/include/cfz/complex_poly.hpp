#ifndef CFZ_COMPLEX_POLY_HPP
#define CFZ_COMPLEX_POLY_HPP

#include <complex>
#include <span>
#include <vector>

namespace cfz {

using Complex = std::complex<double>;

/// Dense univariate polynomial over C, coefficients in ascending degree
/// order: coeffs()[k] multiplies z^k. Trailing exact zeros are trimmed at
/// construction so degree() is the index of the last structurally nonzero
/// entry (the zero polynomial keeps a single zero coefficient).
class ComplexPoly {
  public:
    ComplexPoly() : coeffs_{Complex(0.0)} {}
    explicit ComplexPoly(std::vector<Complex> coeffs);
    ComplexPoly(std::initializer_list<Complex> coeffs);

    static ComplexPoly from_roots(std::span<const Complex> roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex leading() const { return coeffs_.back(); }
    Complex operator[](int k) const;
    bool is_zero() const;

    Complex eval(Complex z) const;
    ComplexPoly derivative() const;

    friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
    friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
    ComplexPoly scaled(Complex factor) const;

  private:
    std::vector<Complex> coeffs_;
};

/// All complex roots of p, multiplicity included (result size == degree).
/// Aberth-Ehrlich simultaneous iteration, randomized initial circle, cap 500
/// iterations. Converged when |p(z_i)| <= tol * maxcoeff * (degree+1).
/// Throws NonConvergenceError (carrying the best iterate) on cap breach.
std::vector<Complex> poly_roots(const ComplexPoly& p, double tol = 1e-12);

} // namespace cfz

#endif
