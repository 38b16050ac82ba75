#pragma once

#include <cstddef>
#include <vector>

#include "aecc/code.hpp"

// Single-error threshold decoder: correlate the syndrome against every
// parity-check column and locate the argmax when it clears theta. The
// located set is empty or a singleton.

namespace aecc {

struct DecodeResult {
    std::vector<std::size_t> located; // empty or {argmax j}
    Vec correlations;                 // xi_j = <s, h_j>
    double theta = 0.0;
    double syndrome_norm = 0.0;
};

enum class ContractOutcome {
    ExactWithinSupport, // Supp_Delta(e) subset located subset Supp(e)
    ViolationD1,        // located not inside Supp(e)
    ViolationD2         // some |e_j| > Delta left unlocated
};

// s = H y^T
Vec syndrome(const AnalogCode& code, const Vec& y);

// xi_j = <s, h_j> for every column
Vec correlations(const AnalogCode& code, const Vec& s);

// theta = delta*sqrt((1+rho)/(1-rho))*n. All |xi_j| <= theta (exact
// comparison) yields the empty set; otherwise the smallest index attaining
// max |xi_j|.
DecodeResult decode_d1(const AnalogCode& code, const Vec& y, double delta = 1.0);

ContractOutcome check_contract(const Vec& e, double delta_threshold, const DecodeResult& result);

} // namespace aecc
