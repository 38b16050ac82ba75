#pragma once

#include <cmath>

#include "aecc/code.hpp"
#include "aecc/rng.hpp"

// Shared test fixtures.

namespace aecc::testing {

// Unit-norm parity check for the [3,1] repetition code: three unit vectors in
// the plane at mutual angle 120 degrees, summing to zero. rho = 1/2.
inline AnalogCode mercedes_repetition_code() {
    const double s3 = std::sqrt(3.0) / 2.0;
    Mat h{{0.0, -s3, s3}, {1.0, -0.5, -0.5}};
    return AnalogCode::from_parity_check(std::move(h), "repetition-3");
}

// Columns {e1, e2, (e1+e2)/sqrt(2)} in the plane; rho = 1/sqrt(2), codewords
// are multiples of (1, 1, -sqrt(2)).
inline AnalogCode diagonal_pair_code() {
    const double s = 1.0 / std::sqrt(2.0);
    Mat h{{1.0, 0.0, s}, {0.0, 1.0, s}};
    return AnalogCode::from_parity_check(std::move(h), "diag-pair");
}

// Random code with unit-norm columns; redraws until rho stays away from 1.
inline AnalogCode random_unit_code(Rng& rng, std::size_t r, std::size_t n,
                                   double rho_cap = 0.999) {
    for (;;) {
        Mat h(r, n);
        for (std::size_t j = 0; j < n; ++j) {
            double norm_sq = 0.0;
            do {
                norm_sq = 0.0;
                for (std::size_t i = 0; i < r; ++i) {
                    h.at(i, j) = rng.normal();
                    norm_sq += h.at(i, j) * h.at(i, j);
                }
            } while (norm_sq < 1e-12);
            const double inv = 1.0 / std::sqrt(norm_sq);
            for (std::size_t i = 0; i < r; ++i) h.at(i, j) *= inv;
        }
        if (pairwise_coherence(h).rho > rho_cap) continue;
        return AnalogCode::from_parity_check(std::move(h), "random-r" + std::to_string(r) +
                                                               "-n" + std::to_string(n));
    }
}

} // namespace aecc::testing
