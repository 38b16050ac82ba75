#include "aecc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aecc/kernels.hpp"

namespace aecc {

namespace {

void require_finite(const std::vector<double>& xs, const char* what) {
    for (double v : xs)
        if (!std::isfinite(v)) throw DomainError(std::string(what) + " contains NaN/Inf");
}

} // namespace

Vec::Vec(std::initializer_list<double> xs) : data_(xs) { require_finite(data_, "vector"); }

Vec Vec::of(std::vector<double> xs) {
    require_finite(xs, "vector");
    Vec v;
    v.data_ = std::move(xs);
    return v;
}

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
    require_finite(data_, "matrix");
}

Mat Mat::of(std::size_t rows, std::size_t cols, std::vector<double> entries) {
    if (entries.size() != rows * cols)
        throw DimensionError("matrix entries length does not match rows*cols");
    require_finite(entries, "matrix");
    Mat m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(entries);
    return m;
}

Vec Mat::column(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

double dot(const Vec& x, const Vec& z) {
    if (x.size() != z.size())
        throw DimensionError("dot: length mismatch (" + std::to_string(x.size()) + " vs " +
                             std::to_string(z.size()) + ")");
    return kernels::dot(x.data(), z.data(), x.size());
}

double euclidean_norm(const Vec& x) {
    return std::sqrt(kernels::dot(x.data(), x.data(), x.size()));
}

double max_abs(const Vec& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    return m;
}

double max_abs(const Mat& a) {
    double m = 0.0;
    for (double v : a.entries()) m = std::max(m, std::fabs(v));
    return m;
}

Vec row_times_mat(const Vec& u, const Mat& g) {
    if (u.size() != g.rows()) throw DimensionError("row_times_mat: length mismatch");
    Vec c(g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) kernels::axpy(u[i], g.row(i), c.data(), g.cols());
    return c;
}

Vec mat_times_col(const Mat& h, const Vec& y) {
    if (y.size() != h.cols()) throw DimensionError("mat_times_col: length mismatch");
    Vec s(h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) s[i] = kernels::dot(h.row(i), y.data(), h.cols());
    return s;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimension mismatch");
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t p = 0; p < a.cols(); ++p)
            kernels::axpy(a.at(i, p), b.row(p), c.row(i), b.cols());
    return c;
}

NullspaceBasis systematic_nullspace(const Mat& h) {
    const std::size_t r = h.rows();
    const std::size_t n = h.cols();
    if (r == 0 || n <= r) throw RankError("systematic_nullspace: need r x n with 0 < r < n");

    Mat a = h;
    const double pivot_tol = 1e-10 * std::max(1.0, max_abs(a));

    // Scan columns right to left so pivots land on the systematic tail.
    std::vector<std::size_t> pivot_col, pivot_row;
    std::vector<bool> row_used(r, false);
    for (std::size_t cc = n; cc-- > 0 && pivot_col.size() < r;) {
        std::size_t best = r;
        double best_abs = pivot_tol;
        for (std::size_t i = 0; i < r; ++i) {
            if (row_used[i]) continue;
            const double v = std::fabs(a.at(i, cc));
            if (v > best_abs) {
                best_abs = v;
                best = i;
            }
        }
        if (best == r) continue; // no usable pivot in this column
        row_used[best] = true;
        // Gauss-Jordan: clear the pivot column in all other rows.
        const double piv = a.at(best, cc);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == best) continue;
            const double f = a.at(i, cc) / piv;
            if (f == 0.0) continue;
            kernels::axpy(-f, a.row(best), a.row(i), n);
            a.at(i, cc) = 0.0;
        }
        pivot_col.push_back(cc);
        pivot_row.push_back(best);
    }
    if (pivot_col.size() < r)
        throw RankError("systematic_nullspace: H is rank deficient (rank " +
                        std::to_string(pivot_col.size()) + " < " + std::to_string(r) + ")");

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    const std::size_t k = n - r;
    Mat g(k, n);
    for (std::size_t f = 0; f < k; ++f) {
        g.at(f, free_cols[f]) = 1.0;
        for (std::size_t p = 0; p < r; ++p)
            g.at(f, pivot_col[p]) =
                -a.at(pivot_row[p], free_cols[f]) / a.at(pivot_row[p], pivot_col[p]);
    }

    NullspaceBasis out;
    out.generator = std::move(g);
    out.column_order = free_cols;
    std::vector<std::size_t> pivots_sorted = pivot_col;
    std::sort(pivots_sorted.begin(), pivots_sorted.end());
    out.column_order.insert(out.column_order.end(), pivots_sorted.begin(), pivots_sorted.end());
    return out;
}

} // namespace aecc
