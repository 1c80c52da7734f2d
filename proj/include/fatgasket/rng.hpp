#pragma once

// Reproducible random streams. Every stream is a std::mt19937_64 seeded from
// splitmix64(seed, stream index); doubles use the top 53 bits so results do
// not depend on the standard library's distribution implementations.

#include <cstdint>
#include <random>

#include "fatgasket/geometry.hpp"

namespace fatgasket::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed of the independent stream `stream` derived from `seed`.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ull));
}

class Stream {
public:
    explicit Stream(std::uint64_t seed, std::uint64_t stream = 0) : engine_(stream_seed(seed, stream)) {}

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % n;
    }

    /// Uniform point in the triangle Delta with legs `leg`.
    Point in_hull(double leg) {
        double u = uniform();
        double v = uniform();
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        return {leg * u, leg * v};
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace fatgasket::rng
