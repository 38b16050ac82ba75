#include "aecc/decoder.hpp"

#include <cmath>

#include "aecc/kernels.hpp"

namespace aecc {

Vec syndrome(const AnalogCode& code, const Vec& y) {
    if (y.size() != code.length()) throw DimensionError("syndrome: length(y) != n");
    return mat_times_col(code.parity_check(), y);
}

Vec correlations(const AnalogCode& code, const Vec& s) {
    if (s.size() != code.redundancy()) throw DimensionError("correlations: length(s) != r");
    const std::size_t n = code.length();
    Vec xi(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto col = code.column(j);
        xi[j] = kernels::dot(col.data(), s.data(), col.size());
    }
    return xi;
}

DecodeResult decode_d1(const AnalogCode& code, const Vec& y, double delta) {
    if (!(delta > 0.0)) throw DomainError("decode_d1: delta must be positive");
    DecodeResult res;
    const Vec s = syndrome(code, y);
    res.syndrome_norm = euclidean_norm(s);
    res.correlations = correlations(code, s);
    res.theta = delta * std::sqrt((1.0 + code.rho()) / (1.0 - code.rho())) *
                static_cast<double>(code.length());

    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t j = 0; j < code.length(); ++j) {
        const double a = std::fabs(res.correlations[j]);
        if (a > best) {
            best = a;
            arg = j;
        }
    }
    if (best > res.theta) res.located.push_back(arg);
    return res;
}

ContractOutcome check_contract(const Vec& e, double delta_threshold, const DecodeResult& result) {
    for (std::size_t j : result.located)
        if (j >= e.size() || e[j] == 0.0) return ContractOutcome::ViolationD1;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (std::fabs(e[j]) <= delta_threshold) continue;
        bool covered = false;
        for (std::size_t loc : result.located) covered = covered || loc == j;
        if (!covered) return ContractOutcome::ViolationD2;
    }
    return ContractOutcome::ExactWithinSupport;
}

} // namespace aecc
