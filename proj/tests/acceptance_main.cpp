// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances and runtime budget in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "aecc/channel.hpp"
#include "aecc/code.hpp"
#include "aecc/height.hpp"
#include "aecc/rng.hpp"
#include "aecc/sphere.hpp"

using namespace aecc;

namespace {

constexpr double kPi = std::numbers::pi;

// Exact Gamma_2 of the [33, 30] ring code, frozen as a regression constant
// the first time the 2112-LP enumeration was run.
constexpr double kFrozenGamma2Sphere4 = 87.80611975206997;

struct Failure {
    std::string message;
};

struct Check {
    std::ostringstream detail;
    bool ok = true;

    void require(bool cond, const std::string& msg) {
        if (!cond) {
            ok = false;
            throw Failure{msg};
        }
    }
};

// Unit-norm parity check of the [3,1] repetition code: a 120-degree frame.
AnalogCode repetition3() {
    const double s3 = std::sqrt(3.0) / 2.0;
    return AnalogCode::from_parity_check(Mat{{0.0, -s3, s3}, {1.0, -0.5, -0.5}},
                                         "repetition-3");
}

AnalogCode random_unit_code(Rng& rng, std::size_t r, std::size_t n) {
    for (;;) {
        Mat h(r, n);
        for (std::size_t j = 0; j < n; ++j) {
            double nn = 0.0;
            do {
                nn = 0.0;
                for (std::size_t i = 0; i < r; ++i) {
                    h.at(i, j) = rng.normal();
                    nn += h.at(i, j) * h.at(i, j);
                }
            } while (nn < 1e-12);
            for (std::size_t i = 0; i < r; ++i) h.at(i, j) /= std::sqrt(nn);
        }
        if (pairwise_coherence(h).rho > 0.995) continue;
        return AnalogCode::from_parity_check(std::move(h), "random");
    }
}

// Campaign tallies shared between criteria 5-7.
TrialStats g_stats_above;       // 1e5 trials at 2*Delta, uniform eps
TrialStats g_stats_adversarial; // 1e3 trials at 2*Delta, adversarial eps
TrialStats g_stats_sub;         // 1e5 trials in [0, Delta]

void criterion1(Check& c) {
    double worst_excess = -1.0;
    for (std::size_t t = 4; t <= 12; ++t) {
        const auto pts = build_omega(t).flattened();
        const double bound = std::cos(kPi / (2.0 * static_cast<double>(t)));
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                const double d = std::fabs(pts[a].x * pts[b].x + pts[a].y * pts[b].y +
                                           pts[a].z * pts[b].z);
                worst_excess = std::max(worst_excess, d - bound);
                c.require(d <= bound + 1e-12,
                          "pairwise coherence exceeds cos(pi/2t) at t = " + std::to_string(t));
            }
    }
    c.detail << "t in {4..12}, worst excess " << worst_excess;
}

void criterion2(Check& c) {
    for (std::size_t t = 4; t <= 12; ++t) {
        const OmegaFamily fam = build_omega(t);
        c.require(fam.total_points() == 2 * t * t + 1,
                  "family size is not 2t^2+1 at t = " + std::to_string(t));
        for (const auto& ring : fam.rings)
            for (const auto& p : ring) {
                const double nrm = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
                c.require(std::fabs(nrm - 1.0) <= 1e-12,
                          "non-unit point at t = " + std::to_string(t));
            }
    }
    c.detail << "|Omega| = 2t^2+1 and unit norms within 1e-12 for t in {4..12}";
}

void criterion3(Check& c) {
    const AnalogCode code = construct_code(4);
    const HeightReport r = m_height_exact(code, 2);
    const double upper = 66.0 / std::sin(kPi / 8.0);
    c.require(r.lps_solved == 2112, "expected the full 2112-LP enumeration, got " +
                                        std::to_string(r.lps_solved));
    c.require(r.gamma >= 4.0 - 1e-6, "Gamma_2 below the floor of 4");
    c.require(r.gamma <= upper + 1e-6, "Gamma_2 above the closed-form bound");
    c.require(std::fabs(r.gamma - kFrozenGamma2Sphere4) <= 1e-6,
              "Gamma_2 regression constant drifted: got " + std::to_string(r.gamma));
    c.require(m_height_vector(r.certificate, 2) >= r.value - 1e-6,
              "certificate does not reproduce the reported height");
    c.detail << "Gamma_2 = " << r.gamma << " in [4, " << upper << "], " << r.lps_solved
             << " LPs";
}

void criterion4(Check& c) {
    const HeightReport r = m_height_exact(repetition3(), 2);
    c.require(std::fabs(r.gamma - 4.0) <= 1e-6,
              "repetition-code Gamma_2 is " + std::to_string(r.gamma) + ", expected 4");
    c.detail << "Gamma_2 = " << r.gamma;
}

void criterion5(Check& c) {
    const AnalogCode code = construct_code(4);
    TrialConfig cfg;
    cfg.code = &code;
    cfg.delta = 1.0;
    cfg.magnitude = MagnitudeSpec::fixed_above(2.0);
    cfg.check_correlation_bounds = true;

    cfg.trials = 100000;
    cfg.seed = 0xACCE55;
    g_stats_above = run_campaign(cfg);

    cfg.trials = 1000;
    cfg.seed = 0xADE55A;
    cfg.adversarial = true;
    g_stats_adversarial = run_campaign(cfg);

    c.require(g_stats_above.exact_location == 100000,
              "uniform-eps campaign missed locations: " +
                  std::to_string(g_stats_above.exact_location));
    c.require(g_stats_above.violation_d1 + g_stats_above.violation_d2 == 0,
              "contract violations in the uniform-eps campaign");
    c.require(g_stats_adversarial.exact_location == 1000,
              "adversarial campaign missed locations");
    c.require(g_stats_adversarial.violation_d1 + g_stats_adversarial.violation_d2 == 0,
              "contract violations in the adversarial campaign");
    c.detail << "100000 + 1000 trials at 2*Delta, exact-location rate 100%, 0 violations";
}

void criterion6(Check& c) {
    const AnalogCode code = construct_code(4);
    const BoundSet b = decoder_thresholds(code.length(), code.rho(), 1.0);
    TrialConfig cfg;
    cfg.code = &code;
    cfg.delta = 1.0;
    cfg.trials = 100000;
    cfg.seed = 0x5B7;
    cfg.magnitude = MagnitudeSpec::uniform(0.0, b.delta_threshold);
    cfg.check_correlation_bounds = true;
    g_stats_sub = run_campaign(cfg);

    c.require(g_stats_sub.violation_d1 == 0, "sub-threshold campaign mislocated an error");
    c.require(g_stats_sub.violation_d2 == 0,
              "sub-threshold campaign flagged a D2 violation below Delta");
    c.require(g_stats_sub.exact_location + g_stats_sub.safe_subset == 100000,
              "tally mismatch");
    c.detail << "100000 trials in [0, Delta]: " << g_stats_sub.exact_location << " located, "
             << g_stats_sub.safe_subset << " empty, 0 violations";
}

void criterion7(Check& c) {
    const std::size_t failures = g_stats_above.bound_check_failures +
                                 g_stats_adversarial.bound_check_failures +
                                 g_stats_sub.bound_check_failures;
    c.require(g_stats_above.trials + g_stats_adversarial.trials + g_stats_sub.trials == 201000,
              "criteria 5-6 campaigns did not run");
    c.require(failures == 0,
              "per-trial deviation/cross-correlation bounds failed " +
                  std::to_string(failures) + " times");
    c.detail << "deviation statements and correlation bound held in all 201000 trials "
                "(slack 1e-9)";
}

void criterion8(Check& c) {
    const double n = 33.0;
    for (int i = 0; i < 1000; ++i) {
        const double rho = static_cast<double>(i) / 1000.0;
        const double delta_thr =
            decoder_thresholds(33, rho, 1.0).delta_threshold;
        const double lo = 2.0 * n / std::sqrt(1.0 - rho * rho);
        const double hi = 2.0 * n / std::sqrt(1.0 - rho);
        c.require(lo <= delta_thr + 1e-12 * std::max(1.0, delta_thr),
                  "sandwich lower bound failed at rho = " + std::to_string(rho));
        c.require(delta_thr <= hi + 1e-12 * std::max(1.0, hi),
                  "sandwich upper bound failed at rho = " + std::to_string(rho));
        c.require(hi < std::sqrt(2.0) * lo + 1e-12 * std::max(1.0, lo),
                  "sandwich sqrt(2) cap failed at rho = " + std::to_string(rho));
    }
    for (std::size_t ell = 1; ell <= 64; ++ell) {
        const double s = std::sin(kPi / (2.0 * static_cast<double>(ell)));
        for (int i = 0; i < 10000; ++i) {
            const double x = (kPi / 2.0) * static_cast<double>(i) / 9999.0;
            c.require(s * std::sin(x) >= std::sin(x / static_cast<double>(ell)) - 1e-12,
                      "monotone-angle inequality failed at ell = " + std::to_string(ell));
        }
    }
    c.detail << "sandwich on 1000 rho points (n = 33) and angle inequality on 64 x 10^4 grid";
}

void criterion9(Check& c) {
    Rng rng(0x0C0DE);
    double worst_gap = 1e9;
    for (int i = 0; i < 50; ++i) {
        const std::size_t r = (i % 2 == 0) ? 2 : 3;
        const std::size_t n = r + 2 + rng.index(static_cast<std::uint64_t>(10 - r - 1));
        const AnalogCode code = random_unit_code(rng, r, n);
        const HeightReport ex = m_height_exact(code, 2);
        const HeightReport sa = m_height_sample(code, 2, 2000, 0xBEEF + i);
        c.require(std::isfinite(ex.value), "exact height unexpectedly infinite");
        c.require(sa.value <= ex.value + 1e-6, "sampled height exceeds the exact height");
        const double cap =
            static_cast<double>(code.length()) / std::sqrt(1.0 - code.rho() * code.rho()) - 1.0;
        c.require(ex.value <= cap + 1e-6, "exact height exceeds the coherence cap");
        worst_gap = std::min(worst_gap, cap - ex.value);
    }
    c.detail << "50 random codes (n <= 10, r in {2,3}): sampled <= exact <= n/sqrt(1-rho^2)-1, "
                "tightest cap margin "
             << worst_gap;
}

void criterion10(Check& c) {
    double prev = 1e9;
    std::ostringstream ratios;
    for (double n : {1e3, 1e4, 1e5, 1e6}) {
        const double ratio = gamma2_bound_formula(n) / (n * std::sqrt(n));
        c.require(ratio <= 0.9203, "ratio above 2*sqrt(2)/pi + 0.02 at n = " +
                                       std::to_string(static_cast<long>(n)));
        c.require(ratio < prev, "ratio not decreasing at n = " +
                                    std::to_string(static_cast<long>(n)));
        prev = ratio;
        ratios << ' ' << ratio;
    }
    c.detail << "bound/(n sqrt(n)) =" << ratios.str() << " (limit 2*sqrt(2)/pi = "
             << 2.0 * std::numbers::sqrt2 / kPi << ")";
}

struct Criterion {
    int id;
    const char* name;
    void (*run)(Check&);
    double budget_seconds; // 0 = no budget pinned
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "construction coherence bound", criterion1, 10.0},
        {2, "family cardinality and unit norms", criterion2, 0.0},
        {3, "exact Gamma_2 of the [33,30] code", criterion3, 120.0},
        {4, "repetition-code floor Gamma_2 = 4", criterion4, 0.0},
        {5, "decoder Monte Carlo at 2*Delta", criterion5, 30.0},
        {6, "sub-threshold safety", criterion6, 0.0},
        {7, "per-trial deviation assertions", criterion7, 0.0},
        {8, "threshold sandwich and angle inequality sweeps", criterion8, 0.0},
        {9, "sampled-exact-bound bracketing", criterion9, 0.0},
        {10, "asymptotic bound constant", criterion10, 0.0},
    };

    int failures = 0;
    for (const Criterion& cr : criteria) {
        Check check;
        std::string error;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const Failure& f) {
            check.ok = false;
            error = f.message;
        } catch (const std::exception& e) {
            check.ok = false;
            error = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (check.ok && cr.budget_seconds > 0.0 && secs > cr.budget_seconds) {
            check.ok = false;
            error = "runtime " + std::to_string(secs) + " s exceeds budget of " +
                    std::to_string(cr.budget_seconds) + " s";
        }
        if (check.ok) {
            std::printf("[PASS] criterion %2d: %s (%s; %.2f s)\n", cr.id, cr.name,
                        check.detail.str().c_str(), secs);
        } else {
            ++failures;
            std::printf("[FAIL] criterion %2d: %s (%s; %.2f s)\n", cr.id, cr.name,
                        error.c_str(), secs);
        }
    }
    if (failures == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
