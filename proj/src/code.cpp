#include "aecc/code.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aecc/combinatorics.hpp"
#include "aecc/kernels.hpp"

namespace aecc {

std::vector<std::size_t> validate_unit_columns(const Mat& h, double tol) {
    std::vector<std::size_t> bad;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < h.rows(); ++i) s += h.at(i, j) * h.at(i, j);
        if (std::fabs(std::sqrt(s) - 1.0) > tol) bad.push_back(j);
    }
    return bad;
}

CoherencePair pairwise_coherence(const Mat& h) {
    const std::size_t n = h.cols();
    const std::size_t r = h.rows();
    if (n < 2) throw DomainError("pairwise_coherence: need at least two columns");

    std::vector<double> cols(n * r);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < r; ++i) cols[j * r + i] = h.at(i, j);

    CoherencePair best{-1.0, 0, 1};
    for (std::size_t j = 0; j + 1 < n; ++j)
        for (std::size_t jp = j + 1; jp < n; ++jp) {
            const double d = std::fabs(kernels::dot(&cols[j * r], &cols[jp * r], r));
            if (d > best.rho) best = {d, j, jp};
        }
    return best;
}

double subspace_coherence(const Mat& h, std::size_t j, const std::vector<std::size_t>& j_prime) {
    const std::size_t r = h.rows();
    for (std::size_t idx : j_prime)
        if (idx == j) throw DomainError("subspace_coherence: j must not belong to J'");

    // Modified Gram-Schmidt with one re-orthogonalization pass.
    std::vector<Vec> basis;
    basis.reserve(j_prime.size());
    for (std::size_t idx : j_prime) {
        Vec v = h.column(idx);
        const double orig = euclidean_norm(v);
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& q : basis) {
                const double c = dot(v, q);
                for (std::size_t i = 0; i < r; ++i) v[i] -= c * q[i];
            }
        const double nrm = euclidean_norm(v);
        if (nrm <= 1e-10 * std::max(1.0, orig)) {
            std::ostringstream os;
            os << "subspace_coherence: dependent columns {";
            for (std::size_t t = 0; t < j_prime.size(); ++t) os << (t ? "," : "") << j_prime[t];
            os << "}";
            throw RankError(os.str());
        }
        for (std::size_t i = 0; i < r; ++i) v[i] /= nrm;
        basis.push_back(std::move(v));
    }

    const Vec hj = h.column(j);
    double proj_sq = 0.0;
    for (const Vec& q : basis) {
        const double c = dot(hj, q);
        proj_sq += c * c;
    }
    return std::sqrt(proj_sq);
}

double coherence_profile(const Mat& h, std::size_t m) {
    const std::size_t n = h.cols();
    if (m == 0) throw DomainError("coherence_profile: m must be >= 1");
    if (m == 1) return 0.0; // empty J' spans nothing, condition is vacuous
    if (n < m) throw DomainError("coherence_profile: fewer columns than m");

    const std::size_t take = m - 1;
    double best = 0.0;
    std::vector<std::size_t> others(n - 1);
    std::vector<std::size_t> subset(take);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t w = 0;
        for (std::size_t idx = 0; idx < n; ++idx)
            if (idx != j) others[w++] = idx;

        std::vector<std::size_t> pick = first_combination(take);
        do {
            for (std::size_t i = 0; i < take; ++i) subset[i] = others[pick[i]];
            best = std::max(best, subspace_coherence(h, j, subset));
        } while (next_combination(pick, others.size()));
    }
    return best;
}

double gamma_upper_bound(std::size_t n, double rho_m) {
    if (!(rho_m >= 0.0 && rho_m < 1.0))
        throw DomainError("gamma_upper_bound: rho must lie in [0, 1)");
    return 2.0 * static_cast<double>(n) / std::sqrt(1.0 - rho_m * rho_m);
}

BoundSet decoder_thresholds(std::size_t n, double rho, double delta) {
    if (!(rho >= 0.0 && rho < 1.0))
        throw DomainError("decoder_thresholds: rho must lie in [0, 1)");
    if (!(delta > 0.0)) throw DomainError("decoder_thresholds: delta must be positive");
    BoundSet b;
    b.m = 2;
    b.delta_unit = delta;
    b.gamma_bound = gamma_upper_bound(n, rho);
    b.theta = delta * std::sqrt((1.0 + rho) / (1.0 - rho)) * static_cast<double>(n);
    b.delta_threshold = b.theta + delta * static_cast<double>(n);
    return b;
}

AnalogCode AnalogCode::from_parity_check(Mat h, std::string label) {
    const std::size_t r = h.rows();
    const std::size_t n = h.cols();
    if (r == 0 || n <= r) throw DomainError("AnalogCode: need r x n parity check with r < n");

    if (auto bad = validate_unit_columns(h, kUnitColumnTol); !bad.empty())
        throw DomainError("AnalogCode: column " + std::to_string(bad.front()) +
                          " is not unit-norm");

    AnalogCode code;
    code.n_ = n;
    code.r_ = r;
    code.k_ = n - r;
    code.label_ = std::move(label);

    code.cols_.resize(n * r);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < r; ++i) code.cols_[j * r + i] = h.at(i, j);

    code.gram_.resize(n * n);
    double rho = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
        code.gram_[a * n + a] = kernels::dot(&code.cols_[a * r], &code.cols_[a * r], r);
        for (std::size_t b = a + 1; b < n; ++b) {
            const double d = kernels::dot(&code.cols_[a * r], &code.cols_[b * r], r);
            code.gram_[a * n + b] = d;
            code.gram_[b * n + a] = d;
            rho = std::max(rho, std::fabs(d));
        }
    }
    if (!(rho < 1.0))
        throw DomainError("AnalogCode: coherence rho = " + std::to_string(rho) +
                          " is not below 1 (repeated or antipodal columns)");
    code.rho_ = rho;

    NullspaceBasis ns = systematic_nullspace(h); // RankError propagates
    code.g_ = std::move(ns.generator);
    code.h_ = std::move(h);

    // H G^T must vanish; anything above tolerance means the elimination broke.
    for (std::size_t i = 0; i < code.k_; ++i) {
        const double* grow = code.g_.row(i);
        for (std::size_t q = 0; q < r; ++q)
            if (std::fabs(kernels::dot(code.h_.row(q), grow, n)) > kSyndromeTol)
                throw SolverError("AnalogCode: null-space residual above tolerance");
    }
    return code;
}

Vec encode(const AnalogCode& code, const Vec& u) {
    if (u.size() != code.dimension())
        throw DimensionError("encode: message length " + std::to_string(u.size()) +
                             " != k = " + std::to_string(code.dimension()));
    return row_times_mat(u, code.generator());
}

std::string code_to_json(const AnalogCode& code) {
    nlohmann::json j;
    j["label"] = code.label();
    j["n"] = code.length();
    j["k"] = code.dimension();
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < code.redundancy(); ++i) {
        const double* row = code.parity_check().row(i);
        rows.push_back(std::vector<double>(row, row + code.length()));
    }
    j["H"] = std::move(rows);
    j["rho"] = code.rho();
    return j.dump(2);
}

AnalogCode code_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("code JSON parse error: ") + e.what());
    }
    try {
        const auto n = j.at("n").get<std::size_t>();
        const auto k = j.at("k").get<std::size_t>();
        const auto label = j.at("label").get<std::string>();
        const auto& rows = j.at("H");
        if (!rows.is_array() || rows.size() != n - k)
            throw IoError("code JSON: H must have n-k rows");
        std::vector<double> entries;
        entries.reserve((n - k) * n);
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != n) throw IoError("code JSON: H row of wrong length");
            for (const auto& v : row) entries.push_back(v.get<double>());
        }
        AnalogCode code = AnalogCode::from_parity_check(Mat::of(n - k, n, std::move(entries)), label);
        const auto stored_rho = j.at("rho").get<double>();
        if (std::fabs(stored_rho - code.rho()) > 1e-12)
            throw IoError("code JSON: stored rho disagrees with recomputed coherence");
        return code;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("code JSON: ") + e.what());
    }
}

void save_code(const AnalogCode& code, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << code_to_json(code) << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

AnalogCode load_code(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return code_from_json(ss.str());
}

} // namespace aecc
