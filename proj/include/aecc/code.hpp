#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "aecc/linalg.hpp"

namespace aecc {

// Tolerances tied to the code invariants.
inline constexpr double kUnitColumnTol = 1e-10;
inline constexpr double kSyndromeTol = 1e-10;

struct CoherencePair {
    double rho = 0.0;
    std::size_t j = 0;       // lexicographically smallest maximizing pair
    std::size_t j_prime = 0; // j < j_prime
};

// Threshold bundle for a height index m: the Gamma upper bound together with
// the decoder pair (theta, Delta) scaled to a disturbance bound delta_unit.
struct BoundSet {
    std::size_t m = 2;
    double gamma_bound = 0.0;     // 2n / sqrt(1 - rho^2)
    double theta = 0.0;           // delta * sqrt((1+rho)/(1-rho)) * n
    double delta_threshold = 0.0; // theta + delta * n
    double delta_unit = 1.0;
};

// An [n, k] linear code over the reals carried by a parity-check matrix with
// unit-norm columns and coherence rho < 1. Immutable after construction; the
// generator, the Gram matrix of H's columns, and rho are derived once.
class AnalogCode {
public:
    static AnalogCode from_parity_check(Mat h, std::string label);

    std::size_t length() const { return n_; }     // n
    std::size_t dimension() const { return k_; }  // k
    std::size_t redundancy() const { return r_; } // r = n - k
    double rho() const { return rho_; }
    const std::string& label() const { return label_; }
    const Mat& parity_check() const { return h_; }
    const Mat& generator() const { return g_; }

    // Column h_j as a contiguous span of length r.
    std::span<const double> column(std::size_t j) const {
        return {cols_.data() + j * r_, r_};
    }
    // <h_i, h_j>
    double gram(std::size_t i, std::size_t j) const { return gram_[i * n_ + j]; }

private:
    AnalogCode() = default;

    std::size_t n_ = 0, k_ = 0, r_ = 0;
    Mat h_;
    Mat g_;
    double rho_ = 0.0;
    std::string label_;
    std::vector<double> cols_; // H column-major, n x r blocks
    std::vector<double> gram_; // n x n
};

// Indices of columns whose Euclidean norm differs from 1 by more than tol.
std::vector<std::size_t> validate_unit_columns(const Mat& h, double tol);

// Max |<h_j, h_j'>| over unordered pairs; deterministic argmax. Throws
// DomainError with fewer than two columns.
CoherencePair pairwise_coherence(const Mat& h);

// Norm of the projection of h_j onto span{h_j' : j' in j_prime}, i.e. the
// supremum of |<h_j, u>| / ||u|| over nonzero u in that span. Throws
// RankError when the spanning columns are dependent.
double subspace_coherence(const Mat& h, std::size_t j, const std::vector<std::size_t>& j_prime);

// rho_m: max of subspace_coherence over all j and all (m-1)-subsets of the
// remaining columns; 0 for m = 1 (empty span constrains nothing).
double coherence_profile(const Mat& h, std::size_t m);

// 2n / sqrt(1 - rho_m^2); requires 0 <= rho_m < 1.
double gamma_upper_bound(std::size_t n, double rho_m);

// theta = delta*sqrt((1+rho)/(1-rho))*n and Delta = theta + delta*n; the
// bundle also carries the Gamma bound for m = 2. delta = 1 is the canonical
// scale, everything is linear in delta.
BoundSet decoder_thresholds(std::size_t n, double rho, double delta = 1.0);

// c = u G; length(u) must equal k.
Vec encode(const AnalogCode& code, const Vec& u);

// JSON form: { "label", "n", "k", "H" (row-major), "rho" }. G is recomputed
// on load, never stored. Floats round-trip exactly.
std::string code_to_json(const AnalogCode& code);
AnalogCode code_from_json(const std::string& text);
void save_code(const AnalogCode& code, const std::filesystem::path& path);
AnalogCode load_code(const std::filesystem::path& path);

} // namespace aecc
