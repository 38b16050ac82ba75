#include <doctest.h>

#include <cmath>
#include <limits>

#include "aecc/linalg.hpp"
#include "aecc/rng.hpp"

using namespace aecc;

TEST_CASE("dot") {
    CHECK(dot(Vec{1, 0}, Vec{0, 1}) == 0.0);
    CHECK(dot(Vec{1, 2, 3}, Vec{1, 1, 1}) == doctest::Approx(6.0));
    CHECK(dot(Vec{0.6, 0.8}, Vec{0.6, 0.8}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(dot(Vec{1, 2}, Vec{1, 2, 3}), DimensionError);
}

TEST_CASE("euclidean_norm") {
    CHECK(euclidean_norm(Vec{0, 0, 0}) == 0.0);
    CHECK(euclidean_norm(Vec{3, 4}) == doctest::Approx(5.0));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(euclidean_norm(Vec{s, s}) == doctest::Approx(1.0));
}

TEST_CASE("construction rejects NaN/Inf") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((Vec{1.0, nan}), DomainError);
    CHECK_THROWS_AS(Vec::of({std::numeric_limits<double>::infinity()}), DomainError);
    CHECK_THROWS_AS((Mat{{1.0}, {nan}}), DomainError);
    CHECK_THROWS_AS(Mat::of(1, 2, {1.0}), DimensionError);
}

TEST_CASE("systematic_nullspace: 1-D null space") {
    const Mat h{{0.70710678, 0.70710678}};
    const auto ns = systematic_nullspace(h);
    REQUIRE(ns.generator.rows() == 1);
    CHECK(ns.generator.at(0, 0) == doctest::Approx(1.0));
    CHECK(ns.generator.at(0, 1) == doctest::Approx(-1.0));
    const Vec g0 = Vec::of({ns.generator.row(0), ns.generator.row(0) + 2});
    CHECK(std::fabs(dot(Vec{0.70710678, 0.70710678}, g0)) < 1e-12);
}

TEST_CASE("systematic_nullspace: identity permutation case") {
    const Mat h{{1, 0, 1}, {0, 1, 1}};
    const auto ns = systematic_nullspace(h);
    REQUIRE(ns.generator.rows() == 1);
    CHECK(ns.generator.at(0, 0) == doctest::Approx(1.0));
    CHECK(ns.generator.at(0, 1) == doctest::Approx(1.0));
    CHECK(ns.generator.at(0, 2) == doctest::Approx(-1.0));
    CHECK(ns.column_order == std::vector<std::size_t>{0, 1, 2});
    // oracle: H G^T = 0 and rank(G) = 1
    const Mat res = mat_mul(h, ns.generator.transposed());
    CHECK(max_abs(res) < 1e-12);
}

TEST_CASE("systematic_nullspace: [A | I_r] gives [I_k | -A^T]") {
    Rng rng(7);
    const std::size_t r = 3, kdim = 4, n = r + kdim;
    Mat h(r, n);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < kdim; ++j) h.at(i, j) = rng.uniform(-1.0, 1.0);
        h.at(i, kdim + i) = 1.0;
    }
    const auto ns = systematic_nullspace(h);
    REQUIRE(ns.generator.rows() == kdim);
    for (std::size_t f = 0; f < kdim; ++f)
        for (std::size_t j = 0; j < n; ++j) {
            const double want = j < kdim ? (j == f ? 1.0 : 0.0) : -h.at(j - kdim, f);
            CHECK(ns.generator.at(f, j) == doctest::Approx(want).epsilon(1e-12));
        }
    for (std::size_t i = 0; i < n; ++i) CHECK(ns.column_order[i] == i);
}

TEST_CASE("systematic_nullspace: rank-deficient H throws") {
    const Mat h{{1, 2, 3, 4}, {2, 4, 6, 8}};
    CHECK_THROWS_AS(systematic_nullspace(h), RankError);
}

TEST_CASE("systematic_nullspace: random H round-trip property") {
    Rng rng(0xABCD);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t r = 1 + rng.index(4);
        const std::size_t n = r + 1 + rng.index(8);
        Mat h(r, n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) h.at(i, j) = rng.uniform(-1.0, 1.0);
        NullspaceBasis ns;
        try {
            ns = systematic_nullspace(h);
        } catch (const RankError&) {
            continue; // measure-zero draw
        }
        REQUIRE(ns.generator.rows() == n - r);
        const Mat res = mat_mul(h, ns.generator.transposed());
        CHECK(max_abs(res) <= 1e-10);
        // rows of G form a basis: the free-column block is an identity
        std::vector<bool> seen(n, false);
        for (std::size_t j : ns.column_order) seen[j] = true;
        for (bool s : seen) CHECK(s);
        for (std::size_t f = 0; f < n - r; ++f)
            for (std::size_t f2 = 0; f2 < n - r; ++f2)
                CHECK(ns.generator.at(f, ns.column_order[f2]) == (f == f2 ? 1.0 : 0.0));
    }
}

TEST_CASE("row_times_mat and mat_times_col agree with naive loops") {
    Rng rng(11);
    const Mat g = [] {
        Mat m(3, 5);
        Rng rr(5);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = rr.uniform(-2.0, 2.0);
        return m;
    }();
    Vec u(3);
    for (auto& x : u) x = rng.uniform(-1.0, 1.0);
    const Vec c = row_times_mat(u, g);
    for (std::size_t j = 0; j < 5; ++j) {
        double want = 0.0;
        for (std::size_t i = 0; i < 3; ++i) want += u[i] * g.at(i, j);
        CHECK(c[j] == doctest::Approx(want).epsilon(1e-14));
    }
    const Vec s = mat_times_col(g, c);
    for (std::size_t i = 0; i < 3; ++i) {
        double want = 0.0;
        for (std::size_t j = 0; j < 5; ++j) want += g.at(i, j) * c[j];
        CHECK(s[i] == doctest::Approx(want).epsilon(1e-14));
    }
}
