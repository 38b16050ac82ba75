#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "aecc/code.hpp"

// m-heights of vectors and codes. The exact code height enumerates one small
// LP per (support candidate, argmax position, sign pattern) and takes the
// maximum; the sampled variant draws random codewords and therefore always
// reports a lower bound of the exact value.

namespace aecc {

enum class HeightMethod { ExactLP, Sampled };

struct HeightReport {
    std::size_t m = 0;
    double value = 0.0; // h_m, may be +inf
    double gamma = 0.0; // 2 (h_m + 1), may be +inf
    HeightMethod method = HeightMethod::ExactLP;
    Vec certificate; // codeword attaining or witnessing the value
    std::size_t lps_solved = 0;
    std::size_t unbounded_count = 0; // unbounded LPs plus dependent support sets
};

struct HeightBudget {
    std::size_t max_lps = 1'000'000;
};

// Ratio of the largest to the (m+1)-th largest magnitude: 0 for the zero
// vector, +inf when m >= length or the (m+1)-th largest magnitude vanishes.
double m_height_vector(const Vec& c, std::size_t m);

// 2 (h + 1); +inf maps to +inf, negative h is a domain error.
double gamma_of(double h);

// Exact h_m(C) by LP enumeration. Requires 1 <= m <= r; refuses with
// BudgetError when the enumeration would exceed the budget, reporting the
// LP count. A support set with dependent parity-check columns (or any
// unbounded subproblem) short-circuits to +inf: a codeword of weight <= m
// exists.
HeightReport m_height_exact(const AnalogCode& code, std::size_t m,
                            const HeightBudget& budget = {});

// Max of m_height_vector over `trials` standard-normal codewords, locally
// refined by one LP restricted to the best sample's support/sign pattern.
// Deterministic for a fixed seed, independent of worker count.
HeightReport m_height_sample(const AnalogCode& code, std::size_t m, std::size_t trials,
                             std::uint64_t seed);

// { "m", "value", "gamma", "method", "certificate", "lps_solved" };
// infinities serialize as the string "inf".
std::string height_report_to_json(const HeightReport& report);

} // namespace aecc
