#include "cfz/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cfz {

namespace {

template <typename T>
double mag(const T& x) {
    return std::abs(x);
}

template <typename T>
struct LuResult {
    Dense<T> lu;
    std::vector<int> perm;
    int sign = 1;
    double max_pivot = 0.0;
    double min_pivot = std::numeric_limits<double>::infinity();
    bool singular = false;
};

template <typename T>
LuResult<T> lu_factor(Dense<T> A) {
    const int n = A.rows;
    LuResult<T> r;
    r.perm.resize(static_cast<size_t>(n));
    std::vector<double> row_scale(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            row_scale[static_cast<size_t>(i)] =
                std::max(row_scale[static_cast<size_t>(i)], mag(A(i, j)));
        r.perm[static_cast<size_t>(i)] = i;
    }
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = mag(A(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (mag(A(i, k)) > best) {
                best = mag(A(i, k));
                piv = i;
            }
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j)
                std::swap(A(k, j), A(piv, j));
            std::swap(r.perm[static_cast<size_t>(k)], r.perm[static_cast<size_t>(piv)]);
            std::swap(row_scale[static_cast<size_t>(k)], row_scale[static_cast<size_t>(piv)]);
            r.sign = -r.sign;
        }
        const double scale = std::max(row_scale[static_cast<size_t>(k)], 1e-300);
        if (mag(A(k, k)) < 1e-13 * scale) {
            r.singular = true;
            r.lu = std::move(A);
            return r;
        }
        r.max_pivot = std::max(r.max_pivot, mag(A(k, k)));
        r.min_pivot = std::min(r.min_pivot, mag(A(k, k)));
        for (int i = k + 1; i < n; ++i) {
            const T f = A(i, k) / A(k, k);
            A(i, k) = f;
            for (int j = k + 1; j < n; ++j)
                A(i, j) -= f * A(k, j);
        }
    }
    r.lu = std::move(A);
    return r;
}

template <typename T>
std::vector<T> solve_impl(const Dense<T>& A, const std::vector<T>& b, LinSolveInfo* info) {
    const int n = A.rows;
    if (A.cols != n || static_cast<int>(b.size()) != n)
        throw DomainError("solve_linear: shape mismatch");
    LuResult<T> f = lu_factor(A);
    if (f.singular)
        throw SingularMatrixError("solve_linear: pivot below 1e-13 of row scale");
    if (info)
        info->cond_estimate = f.max_pivot / std::max(f.min_pivot, 1e-300);
    std::vector<T> x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        x[static_cast<size_t>(i)] = b[static_cast<size_t>(f.perm[static_cast<size_t>(i)])];
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j)
            x[static_cast<size_t>(i)] -= f.lu(i, j) * x[static_cast<size_t>(j)];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j)
            x[static_cast<size_t>(i)] -= f.lu(i, j) * x[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] /= f.lu(i, i);
    }

    // Residual check against the contract bound.
    double norm_a = 0.0, norm_x = 0.0, norm_b = 0.0, resid = 0.0;
    for (int i = 0; i < n; ++i) {
        T r = b[static_cast<size_t>(i)];
        double rowsum = 0.0;
        for (int j = 0; j < n; ++j) {
            r -= A(i, j) * x[static_cast<size_t>(j)];
            rowsum += mag(A(i, j));
        }
        norm_a = std::max(norm_a, rowsum);
        resid = std::max(resid, mag(r));
        norm_b = std::max(norm_b, mag(b[static_cast<size_t>(i)]));
        norm_x = std::max(norm_x, mag(x[static_cast<size_t>(i)]));
    }
    if (resid > 1e-10 * (norm_a * norm_x + norm_b))
        throw IllConditionedError("solve_linear: residual " + std::to_string(resid) +
                                  " exceeds 1e-10 * (|A||x| + |b|)");
    return x;
}

template <typename T>
T det_impl(Dense<T> A) {
    if (A.rows != A.cols)
        throw DomainError("determinant: matrix not square");
    LuResult<T> f = lu_factor(std::move(A));
    if (f.singular)
        return T(0);
    T d = T(f.sign);
    for (int i = 0; i < f.lu.rows; ++i)
        d *= f.lu(i, i);
    return d;
}

} // namespace

std::vector<double> solve_linear(RealMatrix A, std::vector<double> b, LinSolveInfo* info) {
    return solve_impl(A, b, info);
}

std::vector<std::complex<double>> solve_linear(ComplexMatrix A,
                                               std::vector<std::complex<double>> b,
                                               LinSolveInfo* info) {
    return solve_impl(A, b, info);
}

double determinant(RealMatrix A) { return det_impl(std::move(A)); }
std::complex<double> determinant(ComplexMatrix A) { return det_impl(std::move(A)); }

std::vector<double> lstsq(const RealMatrix& A, const std::vector<double>& b) {
    const int m = A.rows, n = A.cols;
    RealMatrix N(n, n);
    std::vector<double> rhs(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < m; ++k)
                s += A(k, i) * A(k, j);
            N(i, j) = s;
        }
        double s = 0.0;
        for (int k = 0; k < m; ++k)
            s += A(k, i) * b[static_cast<size_t>(k)];
        rhs[static_cast<size_t>(i)] = s;
    }
    return solve_linear(std::move(N), std::move(rhs));
}

HermitianMatrix::HermitianMatrix(ComplexMatrix mat) : m(std::move(mat)) {
    if (m.rows != m.cols || m.rows < 1)
        throw DomainError("HermitianMatrix: matrix must be square and nonempty");
    for (int i = 0; i < m.rows; ++i) {
        for (int j = i; j < m.cols; ++j) {
            const std::complex<double> d = m(i, j) - std::conj(m(j, i));
            if (std::abs(d) > 1e-14)
                throw DomainError("HermitianMatrix: conjugate symmetry violated beyond 1e-14");
            const std::complex<double> avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
        m(i, i) = std::complex<double>(m(i, i).real(), 0.0);
    }
}

EigResult eig_hermitian(const HermitianMatrix& A, double tol) {
    const int n = A.order();
    ComplexMatrix M = A.m;
    ComplexMatrix V(n, n);
    for (int i = 0; i < n; ++i)
        V(i, i) = 1.0;

    double norm_f = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            norm_f += std::norm(M(i, j));
    norm_f = std::sqrt(norm_f);

    const int sweep_cap = 64;
    int sweep = 0;
    if (norm_f > 0.0) {
        for (sweep = 1; sweep <= sweep_cap; ++sweep) {
            double off = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    off += 2.0 * std::norm(M(i, j));
            off = std::sqrt(off);
            if (off <= tol * norm_f)
                break;
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const std::complex<double> g = M(p, q);
                    const double ag = std::abs(g);
                    if (ag <= 1e-300)
                        continue;
                    // Phase factors out, then a real Jacobi rotation kills the
                    // off-diagonal pair.
                    const double phi = std::arg(g);
                    const double app = M(p, p).real();
                    const double aqq = M(q, q).real();
                    const double tau = (aqq - app) / (2.0 * ag);
                    const double t = (tau >= 0 ? 1.0 : -1.0) /
                                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const std::complex<double> upp = std::polar(c, phi / 2.0);
                    const std::complex<double> upq = std::polar(s, phi / 2.0);
                    const std::complex<double> uqp = std::polar(-s, -phi / 2.0);
                    const std::complex<double> uqq = std::polar(c, -phi / 2.0);
                    // M <- U^H M U on rows/cols p,q.
                    for (int k = 0; k < n; ++k) {
                        const std::complex<double> mkp = M(k, p);
                        const std::complex<double> mkq = M(k, q);
                        M(k, p) = mkp * upp + mkq * uqp;
                        M(k, q) = mkp * upq + mkq * uqq;
                    }
                    for (int k = 0; k < n; ++k) {
                        const std::complex<double> mpk = M(p, k);
                        const std::complex<double> mqk = M(q, k);
                        M(p, k) = std::conj(upp) * mpk + std::conj(uqp) * mqk;
                        M(q, k) = std::conj(upq) * mpk + std::conj(uqq) * mqk;
                    }
                    for (int k = 0; k < n; ++k) {
                        const std::complex<double> vkp = V(k, p);
                        const std::complex<double> vkq = V(k, q);
                        V(k, p) = vkp * upp + vkq * uqp;
                        V(k, q) = vkp * upq + vkq * uqq;
                    }
                }
            }
        }
        if (sweep > sweep_cap)
            throw NonConvergenceError("eig_hermitian: Jacobi sweep cap reached", {});
    }

    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        order[static_cast<size_t>(i)] = i;
    std::vector<double> diag(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        diag[static_cast<size_t>(i)] = M(i, i).real();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::abs(diag[static_cast<size_t>(a)]) > std::abs(diag[static_cast<size_t>(b)]);
    });

    EigResult out;
    out.sweeps = std::min(sweep, sweep_cap);
    out.values.resize(static_cast<size_t>(n));
    out.vectors = ComplexMatrix(n, n);
    for (int c = 0; c < n; ++c) {
        const int src = order[static_cast<size_t>(c)];
        out.values[static_cast<size_t>(c)] = diag[static_cast<size_t>(src)];
        double nrm = 0.0;
        for (int r = 0; r < n; ++r)
            nrm += std::norm(V(r, src));
        nrm = std::sqrt(nrm);
        for (int r = 0; r < n; ++r)
            out.vectors(r, c) = V(r, src) / nrm;
    }
    return out;
}

} // namespace cfz
