#include "cfz/cf_schur.hpp"

#include <algorithm>
#include <cmath>

#include "cfz/blaschke.hpp"
#include "cfz/error.hpp"

namespace cfz {

CoefficientSequence::CoefficientSequence(std::vector<Complex> taus) : taus_(std::move(taus)) {
    if (taus_.empty())
        throw DomainError("CoefficientSequence: needs at least one coefficient");
    bool any = false;
    double max_imag = 0.0;
    for (const Complex& t : taus_) {
        if (std::abs(t) > 0.0)
            any = true;
        max_imag = std::max(max_imag, std::abs(t.imag()));
    }
    if (!any)
        throw DomainError("CoefficientSequence: all coefficients zero");
    is_real_ = max_imag <= 1e-14;
}

double CoefficientSequence::max_abs() const {
    double s = 0.0;
    for (const Complex& t : taus_)
        s = std::max(s, std::abs(t));
    return s;
}

std::string to_string(CFReject r) {
    switch (r) {
    case CFReject::ZeroSection: return "zero-section";
    case CFReject::SingularSystem: return "singular-system";
    case CFReject::DegenerateLeading: return "degenerate-leading";
    case CFReject::ZeroMargin: return "zero-margin";
    case CFReject::Residual: return "residual";
    }
    return "?";
}

ComplexMatrix hankel_section(const CoefficientSequence& seq, int l) {
    if (l < 0 || l > seq.m())
        throw DomainError("hankel_section: l out of range");
    ComplexMatrix A(l + 1, l + 1);
    for (int i = 0; i <= l; ++i)
        for (int j = 0; j <= l - i; ++j)
            A(i, j) = seq[l - i - j];
    return A;
}

HankelSpectrum hankel_spectrum(const CoefficientSequence& seq, int l) {
    const ComplexMatrix A = hankel_section(seq, l);
    HankelSpectrum out;
    out.matrix_order = l + 1;
    if (seq.is_real()) {
        out.char_values = eig_hermitian(HermitianMatrix(A)).values;
    } else {
        // Singular values via the Hermitian product A^H A.
        ComplexMatrix N(l + 1, l + 1);
        for (int i = 0; i <= l; ++i)
            for (int j = 0; j <= l; ++j) {
                Complex s(0.0);
                for (int k = 0; k <= l; ++k)
                    s += std::conj(A(k, i)) * A(k, j);
                N(i, j) = s;
            }
        for (double w : eig_hermitian(HermitianMatrix(N)).values)
            out.char_values.push_back(std::sqrt(std::max(w, 0.0)));
    }
    return out;
}

CharValue largest_char_value(const CoefficientSequence& seq, int l) {
    double scale = 0.0;
    const ComplexMatrix A = hankel_section(seq, l);
    for (const auto& x : A.a)
        scale = std::max(scale, std::abs(x));
    if (scale == 0.0)
        throw DomainError("largest_char_value: all-zero Hankel section");
    const HankelSpectrum sp = hankel_spectrum(seq, l);
    CharValue out;
    if (seq.is_real()) {
        out.signed_value = sp.char_values.front();
        out.modulus = std::abs(*out.signed_value);
    } else {
        out.modulus = sp.char_values.front();
    }
    return out;
}

Complex eval_D(const CoefficientSequence& seq, int l, Complex lambda) {
    // det [[lambda I, U],[U^H, lambda I]] with U upper-triangular Toeplitz,
    // U[i][j] = tau_{j-i}. Normalized by (-1)^{l+1} so the leading coefficient
    // agrees with Delta(lambda) Delta(-lambda); the zero set is unchanged.
    const int n = l + 1;
    ComplexMatrix M(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        M(i, i) = lambda;
        M(n + i, n + i) = lambda;
        for (int j = 0; j < n; ++j) {
            if (j >= i) {
                M(i, n + j) = seq[j - i];
                M(n + j, i) = std::conj(seq[j - i]);
            }
        }
    }
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * determinant(std::move(M));
}

Complex eval_delta(const CoefficientSequence& seq, int l, Complex lambda) {
    ComplexMatrix M = hankel_section(seq, l);
    for (int i = 0; i <= l; ++i)
        M(i, i) -= lambda;
    return determinant(std::move(M));
}

namespace {

// Validation shared by both matching paths.
std::optional<CFRejection> validate(const CoefficientSequence& seq, int l,
                                    const ComplexPoly& p, Complex gamma,
                                    const CFOptions& opts, double& residual_out,
                                    double& margin_out) {
    double margin = 1.0;
    if (p.degree() >= 1) {
        try {
            double rmax = 0.0;
            for (const Complex& z : poly_roots(p, opts.root_tol))
                rmax = std::max(rmax, std::abs(z));
            margin = 1.0 - rmax;
        } catch (const NonConvergenceError& e) {
            return CFRejection{l, CFReject::ZeroMargin, std::string("root finder: ") + e.what()};
        }
    }
    if (margin <= opts.zero_margin_tol)
        return CFRejection{l, CFReject::ZeroMargin,
                           "zero margin " + std::to_string(margin)};
    double resid = 0.0;
    const std::vector<Complex> c = taylor_ratio(p, seq.m());
    for (int k = 0; k <= seq.m(); ++k)
        resid = std::max(resid, std::abs(gamma * c[static_cast<size_t>(k)] - seq[k]));
    residual_out = resid;
    margin_out = margin;
    if (resid > opts.residual_tol * std::max(1.0, seq.max_abs()))
        return CFRejection{l, CFReject::Residual, "Taylor residual " + std::to_string(resid)};
    return std::nullopt;
}

// Real case: gamma is a signed eigenvalue; the non-leading coefficients of p
// solve the (m+1) x l least-squares system
//   gamma c_k = sum_{i=0}^{min(l,k)} tau_{k-i} c_{l-i},  c_l = 1.
MatchResult match_real(const CoefficientSequence& seq, int l, double gamma,
                       const CFOptions& opts) {
    const int m = seq.m();
    MatchResult out;
    std::vector<Complex> coeffs(static_cast<size_t>(l) + 1, Complex(0.0));
    coeffs[static_cast<size_t>(l)] = 1.0;
    if (l > 0) {
        RealMatrix A(m + 1, l);
        std::vector<double> rhs(static_cast<size_t>(m) + 1, 0.0);
        for (int k = 0; k <= m; ++k) {
            if (k < l)
                A(k, k) += gamma;
            else if (k == l)
                rhs[static_cast<size_t>(k)] -= gamma;
            for (int i = 0; i <= std::min(l, k); ++i) {
                const int j = l - i;
                const double t = seq[k - i].real();
                if (j < l)
                    A(k, j) -= t;
                else
                    rhs[static_cast<size_t>(k)] += t;
            }
        }
        try {
            const std::vector<double> c = lstsq(A, rhs);
            for (int j = 0; j < l; ++j)
                coeffs[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
        } catch (const Error& e) {
            out.rejections.push_back({l, CFReject::SingularSystem, e.what()});
            return out;
        }
    }
    ComplexPoly p(coeffs);
    if (p.degree() != l) {
        out.rejections.push_back({l, CFReject::DegenerateLeading, "monic coefficient trimmed"});
        return out;
    }
    double resid = 0.0, margin = 0.0;
    if (auto rej = validate(seq, l, p, Complex(gamma), opts, resid, margin)) {
        out.rejections.push_back(*rej);
        return out;
    }
    out.solution = CFSolution{l, p, Complex(gamma), resid, margin};
    return out;
}

// Complex case: with u_k = e^{i theta/2} c_k the matching identity becomes the
// real-linear homogeneous system |gamma| u_k = sum tau_{k-i} conj(u_{l-i});
// its kernel vector recovers both p and the phase of gamma.
MatchResult match_complex(const CoefficientSequence& seq, int l, double gamma_mod,
                          const CFOptions& opts) {
    const int m = seq.m();
    MatchResult out;
    const int nu = l + 1;
    RealMatrix M(2 * (m + 1), 2 * nu);
    for (int k = 0; k <= m; ++k) {
        if (k <= l) {
            M(2 * k, k) += gamma_mod;
            M(2 * k + 1, nu + k) += gamma_mod;
        }
        for (int i = 0; i <= std::min(l, k); ++i) {
            const Complex t = seq[k - i];
            const int j = l - i;
            // -t conj(u_j): real part -(Re t x_j + Im t y_j),
            //               imag part -(Im t x_j - Re t y_j).
            M(2 * k, j) -= t.real();
            M(2 * k, nu + j) -= t.imag();
            M(2 * k + 1, j) -= t.imag();
            M(2 * k + 1, nu + j) += t.real();
        }
    }
    // Smallest eigenvector of M^T M spans the kernel.
    ComplexMatrix N(2 * nu, 2 * nu);
    for (int i = 0; i < 2 * nu; ++i)
        for (int j = 0; j < 2 * nu; ++j) {
            double s = 0.0;
            for (int k = 0; k < 2 * (m + 1); ++k)
                s += M(k, i) * M(k, j);
            N(i, j) = s;
        }
    const EigResult eig = eig_hermitian(HermitianMatrix(N));
    const int last = 2 * nu - 1;
    // The eigenvector of the (real symmetric) normal matrix is real only up
    // to a unimodular phase left behind by the complex Jacobi rotations;
    // strip it against the largest entry before reading components.
    Complex col_phase(1.0);
    double best = 0.0;
    for (int j = 0; j < 2 * nu; ++j) {
        const double mag = std::abs(eig.vectors(j, last));
        if (mag > best) {
            best = mag;
            col_phase = eig.vectors(j, last) / mag;
        }
    }
    std::vector<Complex> u(static_cast<size_t>(nu));
    double unorm = 0.0;
    for (int j = 0; j < nu; ++j) {
        const double x = (std::conj(col_phase) * eig.vectors(j, last)).real();
        const double y = (std::conj(col_phase) * eig.vectors(nu + j, last)).real();
        u[static_cast<size_t>(j)] = Complex(x, y);
        unorm = std::max(unorm, std::abs(u[static_cast<size_t>(j)]));
    }
    const Complex ul = u[static_cast<size_t>(l)];
    if (std::abs(ul) < 1e-8 * std::max(unorm, 1e-300)) {
        out.rejections.push_back({l, CFReject::DegenerateLeading,
                                  "kernel vector has |u_l| = " + std::to_string(std::abs(ul))});
        return out;
    }
    std::vector<Complex> coeffs(static_cast<size_t>(nu));
    for (int j = 0; j < nu; ++j)
        coeffs[static_cast<size_t>(j)] = u[static_cast<size_t>(j)] / ul;
    coeffs[static_cast<size_t>(l)] = 1.0;
    const Complex phase = ul / std::abs(ul);
    const Complex gamma = gamma_mod * phase * phase;
    ComplexPoly p(coeffs);
    if (p.degree() != l) {
        out.rejections.push_back({l, CFReject::DegenerateLeading, "monic coefficient trimmed"});
        return out;
    }
    double resid = 0.0, margin = 0.0;
    if (auto rej = validate(seq, l, p, gamma, opts, resid, margin)) {
        out.rejections.push_back(*rej);
        return out;
    }
    out.solution = CFSolution{l, p, gamma, resid, margin};
    return out;
}

} // namespace

MatchResult blaschke_match(const CoefficientSequence& seq, int l, double gamma_mod,
                           std::optional<double> sign_hint, const CFOptions& opts) {
    if (l < 0 || l > seq.m())
        throw DomainError("blaschke_match: l out of range");
    if (!(gamma_mod > 0.0))
        throw DomainError("blaschke_match: |gamma| must be positive");
    if (!seq.is_real())
        return match_complex(seq, l, gamma_mod, opts);
    // Real case: the +-lambda pair of D_{l+1} shares a modulus; try the hinted
    // sign first, the mirror on rejection.
    const double first = sign_hint.value_or(1.0) >= 0.0 ? gamma_mod : -gamma_mod;
    MatchResult r1 = match_real(seq, l, first, opts);
    if (r1.solution)
        return r1;
    MatchResult r2 = match_real(seq, l, -first, opts);
    if (r2.solution)
        return r2;
    r2.rejections.insert(r2.rejections.begin(), r1.rejections.begin(), r1.rejections.end());
    return r2;
}

CFOutcome solve_cf(const CoefficientSequence& seq, const CFOptions& opts) {
    CFOutcome out;
    for (int l = 0; l <= seq.m(); ++l) {
        CharValue cv;
        try {
            cv = largest_char_value(seq, l);
        } catch (const DomainError&) {
            out.rejections.push_back({l, CFReject::ZeroSection, "all-zero section"});
            continue;
        }
        std::optional<double> hint;
        if (cv.signed_value)
            hint = *cv.signed_value >= 0.0 ? 1.0 : -1.0;
        MatchResult mr = blaschke_match(seq, l, cv.modulus, hint, opts);
        if (mr.solution) {
            out.solution = std::move(mr.solution);
            return out;
        }
        out.rejections.insert(out.rejections.end(), mr.rejections.begin(), mr.rejections.end());
    }
    return out;
}

CFSolution solve_cf_or_throw(const CoefficientSequence& seq, const CFOptions& opts) {
    CFOutcome out = solve_cf(seq, opts);
    if (out.solution)
        return *out.solution;
    std::string msg = "solve_cf: no l validated;";
    for (const CFRejection& r : out.rejections)
        msg += " [l=" + std::to_string(r.l) + " " + to_string(r.reason) + ": " + r.detail + "]";
    throw NonConvergenceError(msg, {});
}

bool fejer_monotone_check(const CoefficientSequence& seq) {
    if (!seq.is_real())
        throw DomainError("fejer_monotone_check: sequence must be real");
    if (seq[0].real() <= 0.0)
        return false;
    for (int j = 0; j < seq.m(); ++j)
        if (seq[j + 1].real() < seq[j].real())
            return false;
    return true;
}

} // namespace cfz
