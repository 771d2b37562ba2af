#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace elhs {

/// Deterministic 64-bit PRNG (splitmix64: Weyl counter plus avalanche
/// finalizer). The algorithm is fixed as part of the library contract:
/// the same seed and the same call sequence produce bit-identical draws
/// on every platform. std:: distributions and std::shuffle are
/// implementation-defined and are not used anywhere.
///
/// A stream is single-owner; parallel work derives child streams with
/// child() instead of sharing one instance.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0,1) built from the top 53 bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound), bound >= 1. Rejection sampling, so
    /// there is no modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("next_below: bound must be >= 1");
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    /// Independently seeded child stream, child_seed = mix(seed, index).
    /// Leaves the parent untouched, so children can be handed to worker
    /// threads while the parent keeps drawing.
    RngStream child(std::uint64_t index) const {
        std::uint64_t z = seed_ ^ (0xD1B54A32D192ED03ULL * (index + 1));
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return RngStream(z ^ (z >> 31));
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

/// Uniform random permutation of {0,...,m-1} by Fisher-Yates.
inline std::vector<std::size_t> random_permutation(std::size_t m, RngStream& rng) {
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = m; i > 1; --i) {
        std::swap(perm[i - 1], perm[rng.next_below(i)]);
    }
    return perm;
}

/// m distinct elements of `pool` drawn uniformly without replacement
/// (partial Fisher-Yates), returned sorted ascending.
inline std::vector<std::size_t> sample_without_replacement(std::vector<std::size_t> pool,
                                                           std::size_t m, RngStream& rng) {
    if (m > pool.size()) {
        throw std::invalid_argument("sample_without_replacement: m exceeds pool size");
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::swap(pool[i], pool[i + rng.next_below(pool.size() - i)]);
    }
    pool.resize(m);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace elhs
