#include "aecc/height.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "aecc/combinatorics.hpp"
#include "aecc/lp.hpp"
#include "aecc/parallel.hpp"
#include "aecc/rng.hpp"

namespace aecc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Coefficients alpha (max-abs 1) with sum_l alpha_l h_{b[l]} ~ 0, or empty
// when the columns are independent at the given pivot tolerance.
std::vector<double> column_null_combination(const AnalogCode& code,
                                            const std::vector<std::size_t>& b, double tol) {
    const std::size_t r = code.redundancy();
    const std::size_t m = b.size();
    // work = r x m copy of the selected columns
    std::vector<double> work(r * m);
    for (std::size_t l = 0; l < m; ++l) {
        const auto col = code.column(b[l]);
        for (std::size_t i = 0; i < r; ++i) work[i * m + l] = col[i];
    }

    std::vector<std::size_t> pivot_col, pivot_row;
    std::vector<bool> row_used(r, false);
    std::size_t free_col = m;
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t best = r;
        double best_abs = tol;
        for (std::size_t i = 0; i < r; ++i) {
            if (row_used[i]) continue;
            const double v = std::fabs(work[i * m + c]);
            if (v > best_abs) {
                best_abs = v;
                best = i;
            }
        }
        if (best == r) {
            free_col = c;
            break;
        }
        row_used[best] = true;
        const double piv = work[best * m + c];
        for (std::size_t i = 0; i < r; ++i) {
            if (i == best) continue;
            const double f = work[i * m + c] / piv;
            if (f == 0.0) continue;
            for (std::size_t t = 0; t < m; ++t) work[i * m + t] -= f * work[best * m + t];
            work[i * m + c] = 0.0;
        }
        pivot_col.push_back(c);
        pivot_row.push_back(best);
    }
    if (free_col == m) return {};

    std::vector<double> alpha(m, 0.0);
    alpha[free_col] = 1.0;
    for (std::size_t p = 0; p < pivot_col.size(); ++p)
        alpha[pivot_col[p]] =
            -work[pivot_row[p] * m + free_col] / work[pivot_row[p] * m + pivot_col[p]];
    const double scale = *std::max_element(alpha.begin(), alpha.end(), [](double a, double bt) {
        return std::fabs(a) < std::fabs(bt);
    });
    for (double& v : alpha) v /= std::fabs(scale) > 0 ? std::fabs(scale) : 1.0;
    return alpha;
}

Vec certificate_from_alpha(const AnalogCode& code, const std::vector<std::size_t>& b,
                           const std::vector<double>& alpha) {
    Vec c(code.length());
    for (std::size_t l = 0; l < b.size(); ++l) c[b[l]] = alpha[l];
    return c;
}

// One subproblem: maximize c_a with sigma_j c_j >= 1 on the support set and
// |c_j| <= 1 elsewhere, over codewords c = x G.
LpProblem build_subproblem(const AnalogCode& code, const std::vector<double>& gcols,
                           const std::vector<std::size_t>& b, std::size_t a_pos,
                           std::uint32_t sign_mask) {
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const std::size_t m = b.size();

    Vec obj(k);
    std::copy_n(gcols.begin() + static_cast<std::ptrdiff_t>(b[a_pos] * k), k, obj.data());

    LpProblem p = LpProblem::with_free_vars(std::move(obj));
    const std::size_t rows = m + 2 * (n - m);
    Mat a(rows, k);
    Vec rhs(rows);
    p.senses.assign(rows, Sense::LessEq);

    std::size_t row = 0;
    std::uint32_t bit = 0;
    std::vector<bool> in_b(n, false);
    for (std::size_t l = 0; l < m; ++l) {
        in_b[b[l]] = true;
        double sigma = 1.0;
        if (l != a_pos) {
            sigma = (sign_mask >> bit) & 1u ? -1.0 : 1.0;
            ++bit;
        }
        const double* col = gcols.data() + b[l] * k;
        for (std::size_t i = 0; i < k; ++i) a.at(row, i) = sigma * col[i];
        rhs[row] = 1.0;
        p.senses[row] = Sense::GreaterEq;
        ++row;
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (in_b[j]) continue;
        const double* col = gcols.data() + j * k;
        for (std::size_t i = 0; i < k; ++i) {
            a.at(row, i) = col[i];
            a.at(row + 1, i) = -col[i];
        }
        rhs[row] = 1.0;
        rhs[row + 1] = 1.0;
        row += 2;
    }
    p.constraint_matrix = std::move(a);
    p.rhs = std::move(rhs);
    return p;
}

std::vector<double> gather_generator_columns(const AnalogCode& code) {
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    std::vector<double> gcols(n * k);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < k; ++i) gcols[j * k + i] = code.generator().at(i, j);
    return gcols;
}

void require_m_in_range(const AnalogCode& code, std::size_t m, const char* who) {
    if (m == 0) throw DomainError(std::string(who) + ": m must be >= 1");
    if (m > code.redundancy())
        throw DomainError(std::string(who) + ": m = " + std::to_string(m) +
                          " exceeds the redundancy r = " + std::to_string(code.redundancy()) +
                          "; h_m is +inf for every such m by definition");
}

} // namespace

double m_height_vector(const Vec& c, std::size_t m) {
    const std::size_t n = c.size();
    bool all_zero = true;
    for (std::size_t i = 0; i < n; ++i)
        if (c[i] != 0.0) {
            all_zero = false;
            break;
        }
    if (all_zero) return 0.0;
    if (m >= n) return kInf;

    std::vector<double> mags(n);
    for (std::size_t i = 0; i < n; ++i) mags[i] = std::fabs(c[i]);
    std::sort(mags.begin(), mags.end(), std::greater<>());
    if (mags[m] == 0.0) return kInf;
    return mags[0] / mags[m];
}

double gamma_of(double h) {
    if (std::isnan(h) || h < 0.0) throw DomainError("gamma_of: height must be >= 0");
    if (std::isinf(h)) return kInf;
    return 2.0 * (h + 1.0);
}

HeightReport m_height_exact(const AnalogCode& code, std::size_t m, const HeightBudget& budget) {
    require_m_in_range(code, m, "m_height_exact");
    const std::size_t n = code.length();

    const std::uint64_t subsets = binomial(n, m);
    const std::uint64_t per_subset =
        static_cast<std::uint64_t>(m) << static_cast<unsigned>(m - 1);
    const std::uint64_t lp_count =
        subsets > std::numeric_limits<std::uint64_t>::max() / per_subset
            ? std::numeric_limits<std::uint64_t>::max()
            : subsets * per_subset;
    if (lp_count > budget.max_lps)
        throw BudgetError("m_height_exact: enumeration needs " + std::to_string(lp_count) +
                          " LPs, budget is " + std::to_string(budget.max_lps));

    HeightReport report;
    report.m = m;
    report.method = HeightMethod::ExactLP;

    // A support set with dependent columns carries a codeword of weight <= m,
    // so h_m = +inf outright. (The corresponding LPs are unbounded when a
    // sign pattern admits a feasible point and infeasible otherwise, so the
    // enumeration alone cannot be relied on to notice.)
    {
        std::vector<std::size_t> b = first_combination(m);
        std::size_t dependents = 0;
        std::vector<double> first_alpha;
        std::vector<std::size_t> first_b;
        do {
            const auto alpha = column_null_combination(code, b, 1e-8);
            if (!alpha.empty()) {
                if (dependents == 0) {
                    first_alpha = alpha;
                    first_b = b;
                }
                ++dependents;
            }
        } while (next_combination(b, n));
        if (dependents > 0) {
            report.value = kInf;
            report.gamma = kInf;
            report.unbounded_count = dependents;
            report.certificate = certificate_from_alpha(code, first_b, first_alpha);
            return report;
        }
    }

    const std::vector<double> gcols = gather_generator_columns(code);
    const std::uint32_t masks = 1u << static_cast<unsigned>(m - 1);

    struct Partial {
        double best = -kInf;
        std::uint64_t best_idx = std::numeric_limits<std::uint64_t>::max();
        Vec best_x;
        std::uint64_t inf_idx = std::numeric_limits<std::uint64_t>::max();
        std::vector<std::size_t> inf_b;
        std::size_t lps = 0;
        std::size_t unbounded = 0;
    };

    const std::size_t workers = worker_count();
    const std::size_t chunk =
        std::max<std::size_t>(1, static_cast<std::size_t>(subsets) / (workers * 8) + 1);
    auto partials = run_chunked<Partial>(
        static_cast<std::size_t>(subsets), chunk, workers,
        [&](std::size_t, std::size_t begin, std::size_t end) {
            Partial part;
            std::vector<std::size_t> b = unrank_combination(n, m, begin);
            for (std::size_t s = begin; s < end; ++s) {
                for (std::size_t a_pos = 0; a_pos < m; ++a_pos) {
                    for (std::uint32_t mask = 0; mask < masks; ++mask) {
                        const std::uint64_t idx = (static_cast<std::uint64_t>(s) * m + a_pos) *
                                                      masks +
                                                  mask;
                        const LpProblem lp = build_subproblem(code, gcols, b, a_pos, mask);
                        const LpOutcome out = lp_solve(lp);
                        ++part.lps;
                        if (out.status == LpStatus::Unbounded) {
                            ++part.unbounded;
                            if (idx < part.inf_idx) {
                                part.inf_idx = idx;
                                part.inf_b = b;
                            }
                        } else if (out.status == LpStatus::Optimal && out.value > part.best) {
                            part.best = out.value;
                            part.best_idx = idx;
                            part.best_x = out.solution;
                        }
                    }
                }
                if (s + 1 < end) next_combination(b, n);
            }
            return part;
        });

    Partial merged;
    for (const Partial& p : partials) {
        merged.lps += p.lps;
        merged.unbounded += p.unbounded;
        if (p.inf_idx < merged.inf_idx) {
            merged.inf_idx = p.inf_idx;
            merged.inf_b = p.inf_b;
        }
        if (p.best > merged.best || (p.best == merged.best && p.best_idx < merged.best_idx)) {
            merged.best = p.best;
            merged.best_idx = p.best_idx;
            merged.best_x = p.best_x;
        }
    }

    report.lps_solved = merged.lps;
    report.unbounded_count = merged.unbounded;
    if (merged.inf_idx != std::numeric_limits<std::uint64_t>::max()) {
        report.value = kInf;
        report.gamma = kInf;
        const auto alpha = column_null_combination(code, merged.inf_b, 1e-5);
        report.certificate = alpha.empty() ? Vec(n)
                                           : certificate_from_alpha(code, merged.inf_b, alpha);
        return report;
    }
    if (merged.best_idx == std::numeric_limits<std::uint64_t>::max())
        throw SolverError("m_height_exact: no feasible subproblem");

    report.value = merged.best;
    report.gamma = gamma_of(report.value);
    report.certificate = row_times_mat(merged.best_x, code.generator());
    return report;
}

HeightReport m_height_sample(const AnalogCode& code, std::size_t m, std::size_t trials,
                             std::uint64_t seed) {
    require_m_in_range(code, m, "m_height_sample");
    if (trials == 0) throw DomainError("m_height_sample: trials must be >= 1");
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();

    struct Partial {
        double best = -kInf;
        std::uint64_t best_trial = std::numeric_limits<std::uint64_t>::max();
        Vec best_c;
    };

    const std::size_t workers = worker_count();
    auto partials = run_chunked<Partial>(
        trials, std::max<std::size_t>(1, trials / (workers * 4) + 1), workers,
        [&](std::size_t, std::size_t begin, std::size_t end) {
            Partial part;
            Vec u(k);
            for (std::size_t t = begin; t < end; ++t) {
                Rng rng(derive_stream(seed, t));
                for (std::size_t i = 0; i < k; ++i) u[i] = rng.normal();
                Vec c = row_times_mat(u, code.generator());
                const double h = m_height_vector(c, m);
                if (h > part.best) {
                    part.best = h;
                    part.best_trial = t;
                    part.best_c = std::move(c);
                }
            }
            return part;
        });

    Partial merged;
    for (Partial& p : partials)
        if (p.best > merged.best ||
            (p.best == merged.best && p.best_trial < merged.best_trial)) {
            merged.best = p.best;
            merged.best_trial = p.best_trial;
            merged.best_c = std::move(p.best_c);
        }

    HeightReport report;
    report.m = m;
    report.method = HeightMethod::Sampled;
    report.value = merged.best;
    report.certificate = merged.best_c;

    // Local refinement: re-optimize within the best sample's support and sign
    // pattern. Still a lower bound on h_m(C).
    if (std::isfinite(merged.best) && merged.best > 0.0) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t bi) {
            return std::fabs(merged.best_c[a]) > std::fabs(merged.best_c[bi]);
        });
        Vec c = merged.best_c;
        if (c[order[0]] < 0.0)
            for (std::size_t i = 0; i < n; ++i) c[i] = -c[i];

        std::vector<std::size_t> b(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
        std::sort(b.begin(), b.end());
        std::size_t a_pos = 0;
        while (b[a_pos] != order[0]) ++a_pos;
        std::uint32_t mask = 0;
        std::uint32_t bit = 0;
        for (std::size_t l = 0; l < m; ++l) {
            if (l == a_pos) continue;
            if (c[b[l]] < 0.0) mask |= 1u << bit;
            ++bit;
        }

        const std::vector<double> gcols = gather_generator_columns(code);
        const LpOutcome out = lp_solve(build_subproblem(code, gcols, b, a_pos, mask));
        report.lps_solved = 1;
        if (out.status == LpStatus::Optimal && out.value > report.value) {
            report.value = out.value;
            report.certificate = row_times_mat(out.solution, code.generator());
        } else if (out.status == LpStatus::Unbounded) {
            const auto alpha = column_null_combination(code, b, 1e-6);
            if (!alpha.empty()) {
                report.value = kInf;
                report.unbounded_count = 1;
                report.certificate = certificate_from_alpha(code, b, alpha);
            }
        }
    }

    report.gamma = gamma_of(report.value);
    return report;
}

std::string height_report_to_json(const HeightReport& report) {
    nlohmann::json j;
    j["m"] = report.m;
    j["value"] = std::isinf(report.value) ? nlohmann::json("inf") : nlohmann::json(report.value);
    j["gamma"] = std::isinf(report.gamma) ? nlohmann::json("inf") : nlohmann::json(report.gamma);
    j["method"] = report.method == HeightMethod::ExactLP ? "ExactLP" : "Sampled";
    j["certificate"] = report.certificate.entries();
    j["lps_solved"] = report.lps_solved;
    return j.dump();
}

} // namespace aecc
