#ifndef CFZ_LINALG_HPP
#define CFZ_LINALG_HPP

#include <complex>
#include <vector>

#include "cfz/error.hpp"

namespace cfz {

/// Dense row-major matrix, sized on construction.
template <typename T>
struct Dense {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    Dense() = default;
    Dense(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), T(0)) {}

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

using RealMatrix = Dense<double>;
using ComplexMatrix = Dense<std::complex<double>>;

struct LinSolveInfo {
    double cond_estimate = 0.0; // max/min pivot magnitude, crude
};

/// Gaussian elimination with partial pivoting. Throws SingularMatrixError when
/// a pivot falls below 1e-13 of its row scale, IllConditionedError when the
/// residual exceeds 1e-10 * (|A||x| + |b|).
std::vector<double> solve_linear(RealMatrix A, std::vector<double> b,
                                 LinSolveInfo* info = nullptr);
std::vector<std::complex<double>> solve_linear(ComplexMatrix A,
                                               std::vector<std::complex<double>> b,
                                               LinSolveInfo* info = nullptr);

double determinant(RealMatrix A);
std::complex<double> determinant(ComplexMatrix A);

/// Least squares via the normal equations (fine at kernel sizes).
std::vector<double> lstsq(const RealMatrix& A, const std::vector<double>& b);

/// Hermitian matrix; construction checks conjugate symmetry to 1e-14 absolute
/// and symmetrizes the stored entries.
struct HermitianMatrix {
    explicit HermitianMatrix(ComplexMatrix m);
    int order() const { return m.rows; }
    ComplexMatrix m;
};

struct EigResult {
    std::vector<double> values; // descending by modulus
    ComplexMatrix vectors;      // unit-norm columns, same order
    int sweeps = 0;
};

/// Cyclic Jacobi sweeps; ||A v_k - lambda_k v_k|| <= tol * ||A|| on return.
EigResult eig_hermitian(const HermitianMatrix& A, double tol = 1e-12);

} // namespace cfz

#endif
