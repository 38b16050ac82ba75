#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "aecc/errors.hpp"

// Dense real vectors and row-major matrices. Values entering through the
// checked constructors must be finite; NaN/Inf are rejected at construction
// so poisoned data fails fast. Mutation through element access is unchecked.

namespace aecc {

class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n) : data_(n, 0.0) {}
    Vec(std::initializer_list<double> xs);

    // Takes ownership of xs; throws DomainError on non-finite entries.
    static Vec of(std::vector<double> xs);

    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }
    double operator[](std::size_t i) const { return data_[i]; }
    double& operator[](std::size_t i) { return data_[i]; }
    const double* data() const { return data_.data(); }
    double* data() { return data_.data(); }
    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }
    auto begin() { return data_.begin(); }
    auto end() { return data_.end(); }
    const std::vector<double>& entries() const { return data_; }

    bool operator==(const Vec&) const = default;

private:
    std::vector<double> data_;
};

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
    Mat(std::initializer_list<std::initializer_list<double>> rows);

    // Row-major entries; throws DimensionError/DomainError on bad shape or
    // non-finite values.
    static Mat of(std::size_t rows, std::size_t cols, std::vector<double> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }
    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const std::vector<double>& entries() const { return data_; }

    Vec column(std::size_t j) const;
    Mat transposed() const;

    bool operator==(const Mat&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// <x, z> = sum x_i z_i; throws DimensionError on length mismatch.
double dot(const Vec& x, const Vec& z);

// ||x||_2 = sqrt(<x, x>)
double euclidean_norm(const Vec& x);

double max_abs(const Vec& x);
double max_abs(const Mat& a);

// u (length k) times G (k x n) -> length n
Vec row_times_mat(const Vec& u, const Mat& g);

// H (r x n) times y^T (length n) -> length r
Vec mat_times_col(const Mat& h, const Vec& y);

// A (p x q) times B (q x s)
Mat mat_mul(const Mat& a, const Mat& b);

struct NullspaceBasis {
    Mat generator;                         // k x n, rows span null(H)
    std::vector<std::size_t> column_order; // permutation putting generator into [I_k | G']
};

// Basis of the null space of a full-row-rank H (r x n, r < n) in systematic
// form: under column_order (message positions first, pivot positions last)
// the basis reads [I_k | G']. Pivot columns are chosen from the right by
// Gauss-Jordan elimination with partial pivoting, so H = [A | I_r] yields
// exactly [I_k | -A^T]. Throws RankError when rank(H) < r.
NullspaceBasis systematic_nullspace(const Mat& h);

} // namespace aecc
