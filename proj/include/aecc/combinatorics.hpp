#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace aecc {

// C(n, m), saturating at uint64 max instead of overflowing.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t m) {
    if (m > n) return 0;
    m = std::min(m, n - m);
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= m; ++i) {
        const std::uint64_t num = n - m + i;
        if (out > std::numeric_limits<std::uint64_t>::max() / num)
            return std::numeric_limits<std::uint64_t>::max();
        out = out * num / i;
    }
    return out;
}

inline std::vector<std::size_t> first_combination(std::size_t m) {
    std::vector<std::size_t> c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = i;
    return c;
}

// Advances c to the lexicographically next m-subset of [0, n); false at the end.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t m = c.size();
    for (std::size_t i = m; i-- > 0;) {
        if (c[i] + (m - i) < n) {
            ++c[i];
            for (std::size_t t = i + 1; t < m; ++t) c[t] = c[t - 1] + 1;
            return true;
        }
    }
    return false;
}

// Lexicographic unranking of an m-subset of [0, n).
inline std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t m,
                                                   std::uint64_t rank) {
    std::vector<std::size_t> c(m);
    std::size_t value = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (;; ++value) {
            const std::uint64_t block = binomial(n - value - 1, m - i - 1);
            if (rank < block) break;
            rank -= block;
        }
        c[i] = value++;
    }
    return c;
}

} // namespace aecc
