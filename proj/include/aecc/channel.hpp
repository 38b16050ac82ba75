#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "aecc/code.hpp"
#include "aecc/decoder.hpp"
#include "aecc/rng.hpp"

// Channel model y = c + eps + e and the seeded Monte-Carlo campaign that
// classifies every decode against the locate-within-support contract.

namespace aecc {

struct MagnitudeSpec {
    enum class Kind { FixedAboveDelta, UniformRange, None };
    Kind kind = Kind::None;
    double factor = 0.0; // FixedAboveDelta: |e| = factor * Delta
    double lo = 0.0, hi = 0.0;

    static MagnitudeSpec fixed_above(double factor);
    static MagnitudeSpec uniform(double lo, double hi);
    static MagnitudeSpec none();
    // Grammar: "<K>xDelta" | "uniform:<lo>:<hi>" | "none".
    static MagnitudeSpec parse(std::string_view text);
    std::string to_string() const;
};

struct TrialConfig {
    const AnalogCode* code = nullptr;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double delta = 1.0; // disturbance bound
    MagnitudeSpec magnitude = MagnitudeSpec::none();
    double message_amplitude = 1.0;
    bool adversarial = false; // extreme-point disturbance aligned with h_j0
    bool check_correlation_bounds = true;
    double check_slack = 1e-9;
    std::optional<double> classification_delta; // default: decoder's Delta
    std::size_t workers = 0;                    // 0 = worker_count()
};

struct TrialStats {
    std::size_t trials = 0;
    std::size_t exact_location = 0; // contract met with a located position
    std::size_t safe_subset = 0;    // contract met with the empty set
    std::size_t violation_d1 = 0;
    std::size_t violation_d2 = 0;
    std::size_t bound_check_failures = 0;   // per-trial correlation bounds that failed
    double max_no_error_xi = 0.0;     // max |xi| over trials with e = 0
    double wall_seconds = 0.0;

    bool same_counts(const TrialStats& other) const {
        return trials == other.trials && exact_location == other.exact_location &&
               safe_subset == other.safe_subset && violation_d1 == other.violation_d1 &&
               violation_d2 == other.violation_d2 && bound_check_failures == other.bound_check_failures &&
               max_no_error_xi == other.max_no_error_xi;
    }
};

// n i.i.d. entries uniform on [-delta, delta].
Vec sample_disturbance(std::size_t n, double delta, Rng& rng);

// Zero vector except position j0 (uniform), value +-magnitude (uniform sign).
std::pair<Vec, std::size_t> sample_single_error(std::size_t n, double magnitude, Rng& rng);

// Extreme point of the disturbance box with signs aligned to <h_j0, h_l>,
// the alignment that pushes the correlations hardest.
Vec adversarial_epsilon(const AnalogCode& code, std::size_t j0, double delta);

// Deterministic for a fixed config (per-trial counter-derived seeds),
// independent of the worker count.
TrialStats run_campaign(const TrialConfig& cfg);

// CSV: label,n,k,rho,delta,Delta,trials,exact,safe_subset,violation_d1,violation_d2,seed
std::string stats_csv_header();
std::string stats_csv_row(const TrialConfig& cfg, const TrialStats& stats);
void append_stats_csv(const std::filesystem::path& path, const TrialConfig& cfg,
                      const TrialStats& stats);

} // namespace aecc
