#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "elhs/sample_set.hpp"

namespace elhs {

/// Per-dimension histogram of a sample set under a k-bin uniform grid.
struct OccupancyProfile {
    std::size_t k = 0;                             ///< bins per dimension
    std::vector<std::vector<std::size_t>> counts;  ///< counts[j][l], size p x k
    std::vector<std::size_t> occupied;             ///< bins with >= 1 sample, per dimension
    std::vector<std::size_t> empty;                ///< k - occupied[j]

    /// Indices of the empty bins in dimension j, ascending.
    std::vector<std::size_t> empty_bins(std::size_t j) const {
        std::vector<std::size_t> out;
        out.reserve(empty[j]);
        for (std::size_t l = 0; l < k; ++l) {
            if (counts[j][l] == 0) out.push_back(l);
        }
        return out;
    }
};

inline OccupancyProfile occupancy(const SampleSet& set, std::size_t k) {
    require_valid(set);
    if (k == 0) throw std::invalid_argument("occupancy: k must be positive");
    OccupancyProfile prof;
    prof.k = k;
    prof.counts.assign(set.p(), std::vector<std::size_t>(k, 0));
    prof.occupied.assign(set.p(), 0);
    prof.empty.assign(set.p(), 0);
    for (std::size_t j = 0; j < set.p(); ++j) {
        auto& c = prof.counts[j];
        for (std::size_t i = 0; i < set.n(); ++i) {
            ++c[bin_index(set(i, j), k)];
        }
        std::size_t occ = 0;
        for (std::size_t l = 0; l < k; ++l) {
            if (c[l] > 0) ++occ;
        }
        prof.occupied[j] = occ;
        prof.empty[j] = k - occ;
    }
    return prof;
}

/// LHS degree: the fraction of (dimension, bin) cells occupied under the
/// n-bin grid, equal to 1 exactly when the set is a Latin hypercube.
///
/// The indicator-sum definition collapses to a histogram pass: a bin
/// contributes 1 when it holds at least one sample. Counts are integers
/// and there is a single final division, so values like 1 and 19/20 are
/// exact and safe to compare with ==.
inline double degree(const SampleSet& set) {
    const OccupancyProfile prof = occupancy(set, set.n());
    std::size_t occupied_total = 0;
    for (const std::size_t occ : prof.occupied) occupied_total += occ;
    return static_cast<double>(occupied_total) /
           static_cast<double>(set.n() * set.p());
}

/// Degree the set will have after an expansion by m samples, computed
/// without drawing them.
///
/// Under the n+m grid, dimension j has c_j occupied bins. The expansion
/// places its m new samples in m distinct previously-empty bins of every
/// dimension, so the expanded occupancy is c_j + m regardless of which
/// voids get picked or where the samples sit inside them. Hence the
/// post-expansion degree depends only on the input set and m:
///
///   predicted = sum_j (c_j + m) / ((n + m) * p)
inline double predicted_degree(const SampleSet& set, std::size_t m) {
    if (m == 0) return degree(set);
    const OccupancyProfile prof = occupancy(set, set.n() + m);
    std::size_t numer = 0;
    for (const std::size_t occ : prof.occupied) numer += occ + m;
    return static_cast<double>(numer) /
           static_cast<double>((set.n() + m) * set.p());
}

/// Least-squares constants of the degree-vs-ratio fit 1 + a (b + r)^c,
/// r = m/n. Rounding them to a = -1/6, b = 1, c = -3 gives the closed
/// form used by fitted_degree().
inline constexpr double kDegreeFitA = -0.167;
inline constexpr double kDegreeFitB = 1.01;
inline constexpr double kDegreeFitC = -2.99;

/// Mean-degree curve 1 - 1/(6 (1 + r)^3) as a function of the expansion
/// ratio r = m/n. Describes the average away from the integer and
/// half-integer multiples of n, where the true curve spikes upward.
inline double fitted_degree(double ratio) {
    if (!(ratio >= 0.0)) {
        throw std::invalid_argument("fitted_degree: ratio must be >= 0");
    }
    const double g = 1.0 + ratio;
    return 1.0 - 1.0 / (6.0 * g * g * g);
}

/// The unrounded least-squares fit itself.
inline double fitted_degree_lsq(double ratio) {
    if (!(ratio >= 0.0)) {
        throw std::invalid_argument("fitted_degree_lsq: ratio must be >= 0");
    }
    return 1.0 + kDegreeFitA * std::pow(kDegreeFitB + ratio, kDegreeFitC);
}

}  // namespace elhs
