#include "aecc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "aecc/kernels.hpp"

namespace aecc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarKind { ShiftedLower, FlippedUpper, FreePair };

struct VarMap {
    VarKind kind;
    double anchor = 0.0; // lower bound (ShiftedLower) or upper bound (FlippedUpper)
    std::size_t col = 0;
    std::size_t col_neg = 0; // FreePair only
};

struct Tableau {
    std::size_t rows = 0;   // constraint rows (cost row stored behind them)
    std::size_t cols = 0;   // columns including rhs
    std::vector<double> t;  // (rows + 1) x cols, row-major; last row = cost
    std::vector<std::size_t> basis;

    double* row(std::size_t i) { return t.data() + i * cols; }
    const double* row(std::size_t i) const { return t.data() + i * cols; }
    double* cost() { return row(rows); }
    double rhs(std::size_t i) const { return row(i)[cols - 1]; }

    void pivot(std::size_t p, std::size_t jc) {
        double* rp = row(p);
        const double piv = rp[jc];
        kernels::scale(1.0 / piv, rp, cols);
        rp[jc] = 1.0;
        for (std::size_t i = 0; i <= rows; ++i) {
            if (i == p) continue;
            double* ri = row(i);
            const double f = ri[jc];
            if (f == 0.0) continue;
            kernels::axpy(-f, rp, ri, cols);
            ri[jc] = 0.0;
        }
        basis[p] = jc;
    }
};

struct PivotLoop {
    Tableau& tab;
    const std::vector<bool>& enterable;
    LpOptions opts;
    std::size_t max_iter;
    bool bland = false;
    std::size_t degenerate_streak = 0;

    // Returns true when optimal, false when no ratio row exists (unbounded
    // direction). Throws SolverError past the iteration cap.
    bool run() {
        const std::size_t ncols = tab.cols - 1;
        double* d = tab.cost();
        for (std::size_t iter = 0; iter < max_iter; ++iter) {
            std::size_t enter = ncols;
            if (bland) {
                for (std::size_t j = 0; j < ncols; ++j)
                    if (enterable[j] && d[j] < -opts.feas_tol) {
                        enter = j;
                        break;
                    }
            } else {
                double best = -opts.feas_tol;
                for (std::size_t j = 0; j < ncols; ++j)
                    if (enterable[j] && d[j] < best) {
                        best = d[j];
                        enter = j;
                    }
            }
            if (enter == ncols) return true;

            std::size_t leave = tab.rows;
            double best_ratio = kInf;
            for (std::size_t i = 0; i < tab.rows; ++i) {
                const double a = tab.row(i)[enter];
                if (a <= opts.pivot_tol) continue;
                const double ratio = std::max(tab.rhs(i), 0.0) / a;
                if (ratio < best_ratio - 1e-12 ||
                    (ratio <= best_ratio + 1e-12 &&
                     (leave == tab.rows || tab.basis[i] < tab.basis[leave]))) {
                    if (ratio < best_ratio) best_ratio = ratio;
                    leave = i;
                }
            }
            if (leave == tab.rows) return false;

            if (best_ratio <= 1e-12) {
                if (++degenerate_streak >= 64) bland = true;
            } else {
                degenerate_streak = 0;
            }
            tab.pivot(leave, enter);
            d = tab.cost();
        }
        throw SolverError("simplex iteration limit exceeded");
    }
};

void validate(const LpProblem& p) {
    const std::size_t m = p.constraint_matrix.rows();
    const std::size_t n = p.objective.size();
    if (p.constraint_matrix.cols() != n && m > 0)
        throw DimensionError("lp_solve: constraint matrix width does not match objective");
    if (p.rhs.size() != m || p.senses.size() != m)
        throw DimensionError("lp_solve: rhs/senses length does not match row count");
    if (p.lower.size() != n || p.upper.size() != n)
        throw DimensionError("lp_solve: bounds length does not match variable count");
    for (std::size_t j = 0; j < n; ++j) {
        if (std::isnan(p.lower[j]) || std::isnan(p.upper[j]))
            throw DomainError("lp_solve: NaN bound");
        if (p.lower[j] == kInf || p.upper[j] == -kInf)
            throw DomainError("lp_solve: bound interval is empty at infinity");
    }
}

} // namespace

LpProblem LpProblem::with_free_vars(Vec objective) {
    LpProblem p;
    const std::size_t n = objective.size();
    p.objective = std::move(objective);
    p.constraint_matrix = Mat(0, n);
    p.lower.assign(n, -kInf);
    p.upper.assign(n, kInf);
    return p;
}

void LpProblem::add_row(Vec coeffs, Sense sense, double rhs_value) {
    if (coeffs.size() != objective.size())
        throw DimensionError("add_row: coefficient length does not match variable count");
    const std::size_t n = objective.size();
    const std::size_t m = constraint_matrix.rows();
    Mat grown(m + 1, n);
    std::copy(constraint_matrix.entries().begin(), constraint_matrix.entries().end(),
              grown.row(0));
    std::copy(coeffs.begin(), coeffs.end(), grown.row(m));
    constraint_matrix = std::move(grown);
    Vec new_rhs(m + 1);
    for (std::size_t i = 0; i < m; ++i) new_rhs[i] = rhs[i];
    new_rhs[m] = rhs_value;
    rhs = std::move(new_rhs);
    senses.push_back(sense);
}

LpOutcome lp_solve(const LpProblem& p, const LpOptions& opts) {
    validate(p);
    const std::size_t n = p.objective.size();
    const std::size_t m = p.constraint_matrix.rows();

    for (std::size_t j = 0; j < n; ++j)
        if (p.lower[j] > p.upper[j]) return {LpStatus::Infeasible, 0.0, {}};

    // Substitute every variable by nonnegative ones.
    std::vector<VarMap> vmap(n);
    std::size_t n_struct = 0;
    std::size_t n_bound_rows = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (p.lower[j] > -kInf) {
            vmap[j] = {VarKind::ShiftedLower, p.lower[j], n_struct++, 0};
            if (p.upper[j] < kInf) ++n_bound_rows;
        } else if (p.upper[j] < kInf) {
            vmap[j] = {VarKind::FlippedUpper, p.upper[j], n_struct++, 0};
        } else {
            vmap[j] = {VarKind::FreePair, 0.0, n_struct, n_struct + 1};
            n_struct += 2;
        }
    }

    const std::size_t rows = m + n_bound_rows;
    std::vector<double> row_coeffs(rows * n_struct, 0.0);
    std::vector<double> row_rhs(rows, 0.0);
    std::vector<Sense> row_sense(rows, Sense::LessEq);

    auto emit = [&](std::size_t i, std::size_t j, double a) {
        const VarMap& v = vmap[j];
        switch (v.kind) {
        case VarKind::ShiftedLower:
            row_coeffs[i * n_struct + v.col] += a;
            row_rhs[i] -= a * v.anchor;
            break;
        case VarKind::FlippedUpper:
            row_coeffs[i * n_struct + v.col] -= a;
            row_rhs[i] -= a * v.anchor;
            break;
        case VarKind::FreePair:
            row_coeffs[i * n_struct + v.col] += a;
            row_coeffs[i * n_struct + v.col_neg] -= a;
            break;
        }
    };

    for (std::size_t i = 0; i < m; ++i) {
        row_rhs[i] = p.rhs[i];
        row_sense[i] = p.senses[i];
        const double* arow = p.constraint_matrix.row(i);
        for (std::size_t j = 0; j < n; ++j)
            if (arow[j] != 0.0) emit(i, j, arow[j]);
    }
    {
        std::size_t i = m;
        for (std::size_t j = 0; j < n; ++j)
            if (p.lower[j] > -kInf && p.upper[j] < kInf) {
                row_coeffs[i * n_struct + vmap[j].col] = 1.0;
                row_rhs[i] = p.upper[j] - p.lower[j];
                row_sense[i] = Sense::LessEq;
                ++i;
            }
    }

    for (std::size_t i = 0; i < rows; ++i) {
        if (row_rhs[i] < 0.0) {
            for (std::size_t j = 0; j < n_struct; ++j) row_coeffs[i * n_struct + j] *= -1.0;
            row_rhs[i] = -row_rhs[i];
            if (row_sense[i] == Sense::LessEq)
                row_sense[i] = Sense::GreaterEq;
            else if (row_sense[i] == Sense::GreaterEq)
                row_sense[i] = Sense::LessEq;
        }
    }

    std::size_t n_slack = 0, n_art = 0;
    for (Sense s : row_sense) {
        if (s != Sense::Equal) ++n_slack;
        if (s != Sense::LessEq) ++n_art;
    }

    const std::size_t ncols = n_struct + n_slack + n_art;
    Tableau tab;
    tab.rows = rows;
    tab.cols = ncols + 1;
    tab.t.assign((rows + 1) * tab.cols, 0.0);
    tab.basis.assign(rows, 0);

    std::vector<bool> is_artificial(ncols, false);
    {
        std::size_t next_slack = n_struct;
        std::size_t next_art = n_struct + n_slack;
        for (std::size_t i = 0; i < rows; ++i) {
            double* r = tab.row(i);
            std::copy_n(row_coeffs.begin() + static_cast<std::ptrdiff_t>(i * n_struct), n_struct,
                        r);
            r[tab.cols - 1] = row_rhs[i];
            switch (row_sense[i]) {
            case Sense::LessEq:
                r[next_slack] = 1.0;
                tab.basis[i] = next_slack++;
                break;
            case Sense::GreaterEq:
                r[next_slack++] = -1.0;
                [[fallthrough]];
            case Sense::Equal:
                r[next_art] = 1.0;
                is_artificial[next_art] = true;
                tab.basis[i] = next_art++;
                break;
            }
        }
    }

    LpOptions eff = opts;
    const std::size_t max_iter =
        opts.max_iterations ? opts.max_iterations : 10000 + 100 * (rows + ncols);

    std::vector<bool> enterable(ncols, true);
    for (std::size_t j = 0; j < ncols; ++j)
        if (is_artificial[j]) enterable[j] = false;

    // Phase 1: maximize -sum(artificials) starting from the slack/artificial basis.
    if (n_art > 0) {
        double* d = tab.cost();
        std::fill(d, d + tab.cols, 0.0);
        for (std::size_t i = 0; i < rows; ++i)
            if (is_artificial[tab.basis[i]]) kernels::axpy(-1.0, tab.row(i), d, tab.cols);
        for (std::size_t j = 0; j < ncols; ++j)
            if (is_artificial[j]) d[j] += 1.0; // -c_j with c_j = -1

        PivotLoop loop{tab, enterable, eff, max_iter};
        if (!loop.run())
            throw SolverError("lp_solve: phase-1 breakdown (no pivot above tolerance)");
        if (tab.cost()[tab.cols - 1] < -eff.feas_tol) return {LpStatus::Infeasible, 0.0, {}};

        // Drive leftover artificials out of the basis where possible.
        for (std::size_t i = 0; i < rows; ++i) {
            if (!is_artificial[tab.basis[i]]) continue;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (is_artificial[j]) continue;
                if (std::fabs(tab.row(i)[j]) > eff.pivot_tol) {
                    tab.pivot(i, j);
                    break;
                }
            }
            // If no column qualifies the row is redundant; the artificial
            // stays basic at level zero and can never re-enter elsewhere.
        }
        for (std::size_t i = 0; i < rows; ++i) {
            double& b = tab.row(i)[tab.cols - 1];
            if (b < 0.0 && b > -eff.feas_tol) b = 0.0;
        }
    }

    // Phase 2: real objective in substituted variables.
    std::vector<double> cost2(ncols, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double c = p.objective[j];
        if (c == 0.0) continue;
        const VarMap& v = vmap[j];
        switch (v.kind) {
        case VarKind::ShiftedLower:
            cost2[v.col] += c;
            break;
        case VarKind::FlippedUpper:
            cost2[v.col] -= c;
            break;
        case VarKind::FreePair:
            cost2[v.col] += c;
            cost2[v.col_neg] -= c;
            break;
        }
    }
    {
        double* d = tab.cost();
        std::fill(d, d + tab.cols, 0.0);
        for (std::size_t j = 0; j < ncols; ++j) d[j] = -cost2[j];
        for (std::size_t i = 0; i < rows; ++i) {
            const double cb = cost2[tab.basis[i]];
            if (cb != 0.0) kernels::axpy(cb, tab.row(i), d, tab.cols);
        }
    }

    PivotLoop loop{tab, enterable, eff, max_iter};
    if (!loop.run()) return {LpStatus::Unbounded, 0.0, {}};

    std::vector<double> vs(n_struct, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
        if (tab.basis[i] < n_struct) vs[tab.basis[i]] = std::max(tab.rhs(i), 0.0);

    Vec x(n);
    for (std::size_t j = 0; j < n; ++j) {
        const VarMap& v = vmap[j];
        switch (v.kind) {
        case VarKind::ShiftedLower:
            x[j] = v.anchor + vs[v.col];
            break;
        case VarKind::FlippedUpper:
            x[j] = v.anchor - vs[v.col];
            break;
        case VarKind::FreePair:
            x[j] = vs[v.col] - vs[v.col_neg];
            break;
        }
    }

    // Verify before reporting Optimal; a violated row is a solver bug, not
    // an answer.
    for (std::size_t i = 0; i < m; ++i) {
        const double lhs = kernels::dot(p.constraint_matrix.row(i), x.data(), n);
        const double tol = eff.feas_tol * std::max(1.0, std::fabs(p.rhs[i]));
        const double res = lhs - p.rhs[i];
        const bool ok = (p.senses[i] == Sense::LessEq && res <= tol) ||
                        (p.senses[i] == Sense::Equal && std::fabs(res) <= tol) ||
                        (p.senses[i] == Sense::GreaterEq && res >= -tol);
        if (!ok)
            throw SolverError("lp_solve: optimal candidate violates row " + std::to_string(i) +
                              " by " + std::to_string(res));
    }
    for (std::size_t j = 0; j < n; ++j)
        if (x[j] < p.lower[j] - eff.feas_tol || x[j] > p.upper[j] + eff.feas_tol)
            throw SolverError("lp_solve: optimal candidate violates bound " + std::to_string(j));

    LpOutcome out;
    out.status = LpStatus::Optimal;
    out.solution = std::move(x);
    out.value = dot(p.objective, out.solution);
    return out;
}

} // namespace aecc
