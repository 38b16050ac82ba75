#pragma once

#include <cstddef>
#include <vector>

#include "aecc/linalg.hpp"

// Dense two-phase simplex for small maximization problems. Entering columns
// follow Dantzig's rule with a permanent switch to Bland's rule after a
// degenerate streak, so runs terminate and are deterministic for a fixed
// input. Variables may carry finite or infinite bounds in either direction.

namespace aecc {

enum class Sense { LessEq, Equal, GreaterEq };

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpProblem {
    Vec objective;             // maximize objective . x
    Mat constraint_matrix;     // m x n
    Vec rhs;                   // m
    std::vector<Sense> senses; // m
    std::vector<double> lower; // n, -inf allowed
    std::vector<double> upper; // n, +inf allowed

    // Problem with n free variables and no rows yet.
    static LpProblem with_free_vars(Vec objective);
    void add_row(Vec coeffs, Sense sense, double rhs_value);
};

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    double value = 0.0; // meaningful when Optimal
    Vec solution;       // meaningful when Optimal
};

struct LpOptions {
    double pivot_tol = 1e-9;
    double feas_tol = 1e-8;
    std::size_t max_iterations = 0; // 0 = scale with problem size
};

// Throws DimensionError/DomainError on malformed input and SolverError on
// numerical breakdown; an Optimal outcome is verified against the original
// constraints before being returned.
LpOutcome lp_solve(const LpProblem& p, const LpOptions& opts = {});

} // namespace aecc
