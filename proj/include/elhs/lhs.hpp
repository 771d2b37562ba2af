#pragma once

#include "elhs/rng.hpp"
#include "elhs/sample_set.hpp"

namespace elhs {

/// Classic Latin hypercube sample of n points in [0,1)^p: per dimension,
/// a random permutation assigns each point its own stratum of width 1/n
/// and the point is jittered uniformly inside it. Every dimension ends up
/// with exactly one point per bin, so the result has degree 1.
inline SampleSet sample_lhs(std::size_t p, std::size_t n, RngStream& rng) {
    if (n == 0 || p == 0) {
        throw std::invalid_argument("sample_lhs: n and p must be positive");
    }
    SampleSet set(n, p);
    for (std::size_t j = 0; j < p; ++j) {
        const auto strata = random_permutation(n, rng);
        for (std::size_t i = 0; i < n; ++i) {
            set(i, j) = coord_in_bin(strata[i], rng.next_unit(), n);
        }
    }
    return set;
}

}  // namespace elhs
