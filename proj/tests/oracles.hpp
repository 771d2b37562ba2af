#pragma once

// Independent oracle transcriptions used by the unit and acceptance
// suites. Deliberately naive and kept apart from the library code paths
// they check: no shared binning or kernel helpers.

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "elhs/rng.hpp"
#include "elhs/sample_set.hpp"

namespace elhs::oracles {

// Degree via the literal indicator double sum: for every dimension j and
// bin l, count the samples inside [l/n, (l+1)/n) by direct interval
// membership and take min(count, 1).
inline double degree_by_indicator(const SampleSet& set) {
    const std::size_t n = set.n();
    const std::size_t p = set.p();
    std::size_t total = 0;
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
            const double lo = static_cast<double>(l) / static_cast<double>(n);
            const double hi = static_cast<double>(l + 1) / static_cast<double>(n);
            std::size_t inside = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const double x = set(i, j);
                if (x >= lo && x < hi) ++inside;
            }
            total += std::min<std::size_t>(inside, 1);
        }
    }
    return static_cast<double>(total) / static_cast<double>(n * p);
}

// Squared centered L2 discrepancy, transcribed term by term.
inline double centered_l2_sq_naive(const SampleSet& set) {
    const std::size_t n = set.n();
    const std::size_t p = set.p();
    double constant = 1.0;
    for (std::size_t j = 0; j < p; ++j) constant *= 13.0 / 12.0;

    double single = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double prod = 1.0;
        for (std::size_t j = 0; j < p; ++j) {
            const double d = std::fabs(set(i, j) - 0.5);
            prod *= 1.0 + d / 2.0 - d * d / 2.0;
        }
        single += prod;
    }

    double pair = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            double prod = 1.0;
            for (std::size_t j = 0; j < p; ++j) {
                const double di = std::fabs(set(i, j) - 0.5);
                const double dk = std::fabs(set(k, j) - 0.5);
                const double dik = std::fabs(set(i, j) - set(k, j));
                prod *= 1.0 + di / 2.0 + dk / 2.0 - dik / 2.0;
            }
            pair += prod;
        }
    }

    const double nd = static_cast<double>(n);
    return constant - 2.0 * single / nd + pair / (nd * nd);
}

inline double centered_l2_naive(const SampleSet& set) {
    const double sq = centered_l2_sq_naive(set);
    return std::sqrt(sq > 0.0 ? sq : 0.0);
}

// Brute-force min pairwise distance, one sqrt per pair.
inline double geometric_naive(const SampleSet& set) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < set.n(); ++i) {
        for (std::size_t k = i + 1; k < set.n(); ++k) {
            double d2 = 0.0;
            for (std::size_t j = 0; j < set.p(); ++j) {
                const double d = set(i, j) - set(k, j);
                d2 += d * d;
            }
            best = std::min(best, std::sqrt(d2));
        }
    }
    return best;
}

// Arbitrary (non-LHS) set with coordinates uniform in [0,1).
inline SampleSet random_set(std::size_t n, std::size_t p, RngStream& rng) {
    SampleSet set(n, p);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < p; ++j) set(i, j) = rng.next_unit();
    }
    return set;
}

}  // namespace elhs::oracles
