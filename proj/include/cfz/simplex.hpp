#ifndef CFZ_SIMPLEX_HPP
#define CFZ_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "cfz/linalg.hpp"

namespace cfz {

/// min c.x subject to A x = b, x >= 0.
struct LinearProgram {
    std::vector<double> c;
    RealMatrix A;
    std::vector<double> b;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterLimit };

struct LpResult {
    LpStatus status = LpStatus::IterLimit;
    double objective = 0.0;
    std::vector<double> x;
    long iterations = 0;
};

/// Dense two-phase primal simplex (Dantzig pricing with a Bland fallback
/// against cycling). basis_hint, when given, must name one basic column per
/// row whose submatrix is triangular-at-worst under row-by-row pivoting; the
/// hint is dropped in favor of phase 1 if canonicalization fails.
LpResult simplex_solve(const LinearProgram& lp,
                       const std::optional<std::vector<int>>& basis_hint = std::nullopt,
                       long iter_cap = 0);

} // namespace cfz

#endif
