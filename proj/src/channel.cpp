#include "aecc/channel.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "aecc/kernels.hpp"
#include "aecc/parallel.hpp"

namespace aecc {

MagnitudeSpec MagnitudeSpec::fixed_above(double factor) {
    if (!(factor >= 0.0)) throw ConfigError("magnitude: factor must be >= 0");
    return {Kind::FixedAboveDelta, factor, 0.0, 0.0};
}

MagnitudeSpec MagnitudeSpec::uniform(double lo, double hi) {
    if (!(lo >= 0.0 && hi >= lo)) throw ConfigError("magnitude: need 0 <= lo <= hi");
    return {Kind::UniformRange, 0.0, lo, hi};
}

MagnitudeSpec MagnitudeSpec::none() { return {}; }

namespace {

double parse_double(std::string_view s, const char* what) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw ConfigError(std::string("magnitude: cannot parse ") + what + " from '" +
                          std::string(s) + "'");
    return v;
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace

MagnitudeSpec MagnitudeSpec::parse(std::string_view text) {
    if (text == "none") return none();
    if (auto pos = text.find("xDelta"); pos != std::string_view::npos &&
                                        pos + 6 == text.size() && pos > 0)
        return fixed_above(parse_double(text.substr(0, pos), "factor"));
    constexpr std::string_view kUniform = "uniform:";
    if (text.substr(0, kUniform.size()) == kUniform) {
        const std::string_view rest = text.substr(kUniform.size());
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos)
            throw ConfigError("magnitude: expected uniform:<lo>:<hi>");
        return uniform(parse_double(rest.substr(0, colon), "lo"),
                       parse_double(rest.substr(colon + 1), "hi"));
    }
    throw ConfigError("magnitude: expected '<K>xDelta', 'uniform:<lo>:<hi>' or 'none', got '" +
                      std::string(text) + "'");
}

std::string MagnitudeSpec::to_string() const {
    switch (kind) {
    case Kind::FixedAboveDelta:
        return format_double(factor) + "xDelta";
    case Kind::UniformRange:
        return "uniform:" + format_double(lo) + ":" + format_double(hi);
    case Kind::None:
        return "none";
    }
    return "none";
}

Vec sample_disturbance(std::size_t n, double delta, Rng& rng) {
    if (!(delta >= 0.0)) throw DomainError("sample_disturbance: delta must be >= 0");
    Vec eps(n);
    for (std::size_t i = 0; i < n; ++i) eps[i] = rng.uniform(-delta, delta);
    return eps;
}

std::pair<Vec, std::size_t> sample_single_error(std::size_t n, double magnitude, Rng& rng) {
    if (!(magnitude >= 0.0)) throw DomainError("sample_single_error: magnitude must be >= 0");
    Vec e(n);
    const auto j0 = static_cast<std::size_t>(rng.index(n));
    e[j0] = rng.sign() * magnitude;
    return {std::move(e), j0};
}

Vec adversarial_epsilon(const AnalogCode& code, std::size_t j0, double delta) {
    if (!(delta > 0.0)) throw DomainError("adversarial_epsilon: delta must be positive");
    if (j0 >= code.length()) throw DomainError("adversarial_epsilon: j0 out of range");
    const std::size_t n = code.length();
    Vec eps(n);
    for (std::size_t l = 0; l < n; ++l)
        eps[l] = code.gram(j0, l) < 0.0 ? -delta : delta;
    return eps;
}

namespace {

struct Partial {
    TrialStats stats;
};

// Per-trial correlation bounds: the two-sided deviation statements for the
// true error position plus the cross-correlation bound
// |xi_j| <= |xi_j0 rho_jj0| + sqrt(1 - rho_jj0^2) * delta * n.
std::size_t correlation_bound_failures(const AnalogCode& code, const Vec& xi, std::size_t j0,
                                 double e_j0, double theta, double delta_threshold, double delta,
                                 double slack) {
    const std::size_t n = code.length();
    const double dn = delta * static_cast<double>(n);
    std::size_t failures = 0;
    const double xi0 = std::fabs(xi[j0]);

    if (std::fabs(e_j0) > delta_threshold && !(xi0 > theta - slack)) ++failures;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == j0) continue;
        const double xj = std::fabs(xi[j]);
        if (xi0 > theta && !(xi0 > xj - slack)) ++failures;
        if (xi0 <= theta && !(xj <= theta + slack)) ++failures;
        const double g = code.gram(j, j0);
        if (!(xj <= xi0 * std::fabs(g) + std::sqrt(std::max(0.0, 1.0 - g * g)) * dn + slack))
            ++failures;
    }
    return failures;
}

} // namespace

TrialStats run_campaign(const TrialConfig& cfg) {
    if (cfg.code == nullptr) throw ConfigError("run_campaign: no code");
    if (cfg.trials == 0) throw ConfigError("run_campaign: trials must be >= 1");
    if (!(cfg.delta > 0.0)) throw ConfigError("run_campaign: delta must be positive");
    if (cfg.adversarial && cfg.magnitude.kind == MagnitudeSpec::Kind::None)
        throw ConfigError("run_campaign: adversarial epsilon needs an error distribution "
                          "(it targets the error position)");

    const AnalogCode& code = *cfg.code;
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const BoundSet bounds = decoder_thresholds(n, code.rho(), cfg.delta);
    const double delta_cls = cfg.classification_delta.value_or(bounds.delta_threshold);

    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t workers = cfg.workers ? cfg.workers : worker_count();
    auto partials = run_chunked<Partial>(
        cfg.trials, std::max<std::size_t>(1, cfg.trials / (workers * 8) + 1), workers,
        [&](std::size_t, std::size_t begin, std::size_t end) {
            Partial part;
            Vec u(k);
            Vec y(n);
            for (std::size_t t = begin; t < end; ++t) {
                Rng rng(derive_stream(cfg.seed, t));
                for (std::size_t i = 0; i < k; ++i)
                    u[i] = cfg.message_amplitude * rng.normal();
                const Vec c = row_times_mat(u, code.generator());

                double magnitude = 0.0;
                bool has_error = true;
                switch (cfg.magnitude.kind) {
                case MagnitudeSpec::Kind::FixedAboveDelta:
                    magnitude = cfg.magnitude.factor * bounds.delta_threshold;
                    break;
                case MagnitudeSpec::Kind::UniformRange:
                    magnitude = rng.uniform(cfg.magnitude.lo, cfg.magnitude.hi);
                    break;
                case MagnitudeSpec::Kind::None:
                    has_error = false;
                    break;
                }

                Vec e(n);
                std::size_t j0 = n;
                if (has_error) {
                    auto drawn = sample_single_error(n, magnitude, rng);
                    e = std::move(drawn.first);
                    j0 = drawn.second;
                }
                const Vec eps = (cfg.adversarial && has_error)
                                    ? adversarial_epsilon(code, j0, cfg.delta)
                                    : sample_disturbance(n, cfg.delta, rng);

                for (std::size_t i = 0; i < n; ++i) y[i] = c[i] + eps[i] + e[i];
                const DecodeResult res = decode_d1(code, y, cfg.delta);

                switch (check_contract(e, delta_cls, res)) {
                case ContractOutcome::ExactWithinSupport:
                    if (res.located.empty())
                        ++part.stats.safe_subset;
                    else
                        ++part.stats.exact_location;
                    break;
                case ContractOutcome::ViolationD1:
                    ++part.stats.violation_d1;
                    break;
                case ContractOutcome::ViolationD2:
                    ++part.stats.violation_d2;
                    break;
                }

                if (!has_error || e[j0] == 0.0) {
                    part.stats.max_no_error_xi =
                        std::max(part.stats.max_no_error_xi, max_abs(res.correlations));
                    if (cfg.check_correlation_bounds)
                        for (std::size_t j = 0; j < n; ++j)
                            if (!(std::fabs(res.correlations[j]) <=
                                  cfg.delta * static_cast<double>(n) + cfg.check_slack))
                                ++part.stats.bound_check_failures;
                } else if (cfg.check_correlation_bounds) {
                    part.stats.bound_check_failures += correlation_bound_failures(
                        code, res.correlations, j0, e[j0], res.theta, bounds.delta_threshold,
                        cfg.delta, cfg.check_slack);
                }
                ++part.stats.trials;
            }
            return part;
        });

    TrialStats total;
    for (const Partial& p : partials) {
        total.trials += p.stats.trials;
        total.exact_location += p.stats.exact_location;
        total.safe_subset += p.stats.safe_subset;
        total.violation_d1 += p.stats.violation_d1;
        total.violation_d2 += p.stats.violation_d2;
        total.bound_check_failures += p.stats.bound_check_failures;
        total.max_no_error_xi = std::max(total.max_no_error_xi, p.stats.max_no_error_xi);
    }
    total.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return total;
}

std::string stats_csv_header() {
    return "label,n,k,rho,delta,Delta,trials,exact,safe_subset,violation_d1,violation_d2,seed";
}

std::string stats_csv_row(const TrialConfig& cfg, const TrialStats& stats) {
    const AnalogCode& code = *cfg.code;
    const BoundSet bounds = decoder_thresholds(code.length(), code.rho(), cfg.delta);
    const double delta_cls = cfg.classification_delta.value_or(bounds.delta_threshold);
    std::ostringstream os;
    os << code.label() << ',' << code.length() << ',' << code.dimension() << ','
       << format_double(code.rho()) << ',' << format_double(cfg.delta) << ','
       << format_double(delta_cls) << ',' << stats.trials << ',' << stats.exact_location << ','
       << stats.safe_subset << ',' << stats.violation_d1 << ',' << stats.violation_d2 << ','
       << cfg.seed;
    return os.str();
}

void append_stats_csv(const std::filesystem::path& path, const TrialConfig& cfg,
                      const TrialStats& stats) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw IoError("cannot open for appending: " + path.string());
    if (fresh) out << stats_csv_header() << '\n';
    out << stats_csv_row(cfg, stats) << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace aecc
