#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

// Counter-friendly deterministic RNG (splitmix64). Trial harnesses derive one
// independent stream per trial index, so results do not depend on how trials
// are split across workers.

namespace aecc {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller on (0, 1] x [0, 1).
    double normal() {
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    // Uniform integer in [0, n) without modulo bias (Lemire reduction).
    std::uint64_t index(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    double sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

private:
    std::uint64_t state_;
};

// Decorrelated per-stream seed for (seed, stream index).
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    mix.next_u64();
    return mix.next_u64();
}

} // namespace aecc
