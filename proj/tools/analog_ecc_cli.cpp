// Command-line front end: construct spherical codes, evaluate heights and
// bounds, and run fault-injection campaigns against the threshold decoder.
//
// Exit codes: 0 success, 1 domain/runtime error, 2 usage error.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aecc/channel.hpp"
#include "aecc/code.hpp"
#include "aecc/height.hpp"
#include "aecc/sphere.hpp"

namespace {

std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct ConstructArgs {
    std::optional<std::size_t> t;
    std::optional<std::size_t> n;
    std::string out;
};

void run_construct(const ConstructArgs& args) {
    aecc::AnalogCode code = args.t ? aecc::construct_code(*args.t)
                                   : aecc::construct_code_for_length(*args.n);
    const std::size_t t = args.t ? *args.t : aecc::ring_parameter_for_length(*args.n);
    aecc::save_code(code, args.out);
    std::cout << "label: " << code.label() << '\n'
              << "n: " << code.length() << "  k: " << code.dimension()
              << "  r: " << code.redundancy() << '\n'
              << "rho: " << fmt(code.rho()) << '\n'
              << "coherence bound cos(pi/2t): "
              << fmt(std::cos(std::numbers::pi / (2.0 * static_cast<double>(t)))) << '\n'
              << "wrote: " << args.out << '\n';
}

struct EvalArgs {
    std::string code_path;
    std::size_t m = 2;
    std::string mode = "exact";
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    std::size_t budget = 1'000'000;
};

void run_eval(const EvalArgs& args) {
    const aecc::AnalogCode code = aecc::load_code(args.code_path);
    aecc::HeightReport report;
    if (args.mode == "exact")
        report = aecc::m_height_exact(code, args.m, {args.budget});
    else
        report = aecc::m_height_sample(code, args.m, args.trials, args.seed);
    std::cout << aecc::height_report_to_json(report) << '\n';

    try {
        const double rho_m = args.m == 2 ? code.rho()
                                         : aecc::coherence_profile(code.parity_check(), args.m);
        if (rho_m < 1.0)
            std::cout << "coherence bound: Gamma_" << args.m
                      << " <= " << fmt(aecc::gamma_upper_bound(code.length(), rho_m))
                      << "  (rho_m = " << fmt(rho_m) << ")\n";
        else
            std::cout << "coherence bound: n/a (rho_m = " << fmt(rho_m) << ")\n";
    } catch (const aecc::RankError& e) {
        // dependent columns: the height is infinite and the bound is vacuous
        std::cout << "coherence bound: n/a (" << e.what() << ")\n";
    }
    if (code.length() >= 20)
        std::cout << "r=3 construction bound: Gamma_2 <= "
                  << fmt(aecc::gamma2_bound_for_length(code.length())) << '\n';
    else
        std::cout << "r=3 construction bound: n/a (needs n >= 20)\n";
}

struct SimulateArgs {
    std::string code_path;
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    double delta = 1.0;
    std::string magnitude = "2xDelta";
    bool adversarial = false;
    std::string out_csv;
};

int run_simulate(const SimulateArgs& args) {
    const aecc::AnalogCode code = aecc::load_code(args.code_path);
    aecc::TrialConfig cfg;
    cfg.code = &code;
    cfg.trials = args.trials;
    cfg.seed = args.seed;
    cfg.delta = args.delta;
    cfg.magnitude = aecc::MagnitudeSpec::parse(args.magnitude);
    cfg.adversarial = args.adversarial;

    const aecc::TrialStats stats = aecc::run_campaign(cfg);
    if (!args.out_csv.empty()) aecc::append_stats_csv(args.out_csv, cfg, stats);

    const aecc::BoundSet b = aecc::decoder_thresholds(code.length(), code.rho(), args.delta);
    std::cout << "code: " << code.label() << "  trials: " << stats.trials
              << "  magnitude: " << cfg.magnitude.to_string() << "  delta: " << fmt(args.delta)
              << "  Delta: " << fmt(b.delta_threshold) << '\n'
              << "exact: " << stats.exact_location << "  safe_subset: " << stats.safe_subset
              << "  violation_d1: " << stats.violation_d1
              << "  violation_d2: " << stats.violation_d2 << '\n'
              << "bound_check_failures: " << stats.bound_check_failures
              << "  max_no_error_xi: " << fmt(stats.max_no_error_xi)
              << "  wall_s: " << fmt(stats.wall_seconds) << '\n';
    if (!args.out_csv.empty()) std::cout << "appended: " << args.out_csv << '\n';
    return stats.violation_d1 + stats.violation_d2 > 0 ? 1 : 0;
}

struct BoundArgs {
    std::string code_path;
    std::optional<std::size_t> n;
    std::optional<double> rho;
    double delta = 1.0;
};

void run_bound(const BoundArgs& args) {
    std::size_t n = 0;
    double rho = 0.0;
    std::string origin;
    if (!args.code_path.empty()) {
        const aecc::AnalogCode code = aecc::load_code(args.code_path);
        n = code.length();
        rho = code.rho();
        origin = code.label();
    } else if (args.n && args.rho) {
        n = *args.n;
        rho = *args.rho;
        origin = "explicit";
    } else {
        throw aecc::ConfigError("bound: pass --code, or both --n and --rho");
    }
    const aecc::BoundSet b = aecc::decoder_thresholds(n, rho, args.delta);
    const double dn = static_cast<double>(n);
    std::cout << "source: " << origin << "  n: " << n << "  rho: " << fmt(rho)
              << "  delta: " << fmt(args.delta) << '\n'
              << "theta: " << fmt(b.theta) << '\n'
              << "Delta: " << fmt(b.delta_threshold) << '\n'
              << "gamma bound 2n/sqrt(1-rho^2): " << fmt(b.gamma_bound) << '\n'
              << "sandwich: " << fmt(args.delta * b.gamma_bound) << " < Delta <= "
              << fmt(args.delta * 2.0 * dn / std::sqrt(1.0 - rho)) << '\n';
}

void run_table(const std::vector<std::size_t>& lengths) {
    constexpr double kLimit = 2.0 * std::numbers::sqrt2 / std::numbers::pi;
    std::cout << "n,r,gamma2_bound,bound_over_n_sqrt_n,limit_2sqrt2_over_pi,mds_r2_reference\n";
    for (std::size_t n : lengths) {
        const double bound = aecc::gamma2_bound_for_length(n); // throws for n < 20
        const double ratio = bound / (static_cast<double>(n) * std::sqrt(static_cast<double>(n)));
        std::cout << n << ",3," << fmt(bound) << ',' << fmt(ratio) << ',' << fmt(kLimit)
                  << ",Gamma2 = O(n^2)\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    std::setvbuf(stdout, nullptr, _IOLBF, 1 << 13); // line-buffered output

    CLI::App app{"analog error correcting codes over the reals"};
    app.require_subcommand(1);

    ConstructArgs cargs;
    auto* construct = app.add_subcommand(
        "construct", "generate a spherical parity-check code and write it as JSON");
    auto* copt_t = construct->add_option("--t", cargs.t, "ring parameter (n = 2t^2+1)");
    auto* copt_n = construct->add_option("--n", cargs.n, "code length (uses the first n points)");
    construct->add_option("--out", cargs.out, "output JSON path")->required();
    copt_t->excludes(copt_n);

    EvalArgs eargs;
    auto* eval = app.add_subcommand("eval", "compute the m-height of a stored code");
    eval->add_option("--code", eargs.code_path, "code JSON path")->required();
    eval->add_option("--m", eargs.m, "height index (>= 1)")->required()->check(CLI::PositiveNumber);
    eval->add_option("--mode", eargs.mode, "exact|sample")
        ->check(CLI::IsMember({"exact", "sample"}));
    eval->add_option("--trials", eargs.trials, "samples in sample mode")
        ->check(CLI::PositiveNumber);
    eval->add_option("--seed", eargs.seed, "sampling seed");
    eval->add_option("--budget", eargs.budget, "max LPs in exact mode");

    SimulateArgs sargs;
    auto* simulate =
        app.add_subcommand("simulate", "run a seeded fault-injection campaign");
    simulate->add_option("--code", sargs.code_path, "code JSON path")->required();
    simulate->add_option("--trials", sargs.trials, "trial count")
        ->required()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sargs.seed, "campaign seed");
    simulate->add_option("--delta", sargs.delta, "disturbance bound")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--magnitude", sargs.magnitude,
                         "error magnitude: <K>xDelta | uniform:<lo>:<hi> | none");
    simulate->add_flag("--adversarial", sargs.adversarial,
                       "extreme-point disturbance aligned with the error column");
    simulate->add_option("--out", sargs.out_csv, "CSV file to append the campaign row to");

    BoundArgs bargs;
    auto* bound = app.add_subcommand("bound", "print decoder thresholds and height bounds");
    bound->add_option("--code", bargs.code_path, "code JSON path");
    bound->add_option("--n", bargs.n, "code length");
    bound->add_option("--rho", bargs.rho, "coherence in [0, 1)");
    bound->add_option("--delta", bargs.delta, "disturbance bound")->check(CLI::PositiveNumber);

    std::vector<std::size_t> table_lengths;
    auto* table = app.add_subcommand("table", "per-length bound comparison table");
    table->add_option("--n-list", table_lengths, "comma-separated lengths (each >= 20)")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (construct->parsed()) {
            if (!cargs.t && !cargs.n) {
                std::cerr << "construct: exactly one of --t/--n is required\n";
                return 2;
            }
            run_construct(cargs);
        } else if (eval->parsed()) {
            run_eval(eargs);
        } else if (simulate->parsed()) {
            return run_simulate(sargs);
        } else if (bound->parsed()) {
            run_bound(bargs);
        } else if (table->parsed()) {
            run_table(table_lengths);
        }
    } catch (const aecc::ConfigError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const aecc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
