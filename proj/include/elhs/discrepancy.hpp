#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "elhs/sample_set.hpp"

namespace elhs {

/// Centered L2 discrepancy (Hickernell). Measures how far the empirical
/// point coverage is from uniform volume coverage; lower is more uniform.
///
///   CD2^2 = (13/12)^p
///         - (2/n)   sum_i  prod_j [1 + |x_ij - 1/2|/2 - |x_ij - 1/2|^2/2]
///         + (1/n^2) sum_ik prod_j [1 + |x_ij - 1/2|/2 + |x_kj - 1/2|/2
///                                    - |x_ij - x_kj|/2]
///
/// Returns CD2, the square root, not the squared value. O(n^2 p).
inline double centered_l2(const SampleSet& set) {
    require_valid(set);
    const std::size_t n = set.n();
    const std::size_t p = set.p();

    double sum1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double prod = 1.0;
        for (std::size_t j = 0; j < p; ++j) {
            const double a = std::abs(set(i, j) - 0.5);
            prod *= 1.0 + 0.5 * a - 0.5 * a * a;
        }
        sum1 += prod;
    }

    double sum2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            double prod = 1.0;
            for (std::size_t j = 0; j < p; ++j) {
                const double ai = std::abs(set(i, j) - 0.5);
                const double ak = std::abs(set(k, j) - 0.5);
                prod *= 1.0 + 0.5 * ai + 0.5 * ak - 0.5 * std::abs(set(i, j) - set(k, j));
            }
            sum2 += prod;
        }
    }

    const double nd = static_cast<double>(n);
    const double sq = std::pow(13.0 / 12.0, static_cast<double>(p)) -
                      (2.0 / nd) * sum1 + sum2 / (nd * nd);
    // rounding can push a tiny true value just below zero
    return std::sqrt(std::max(sq, 0.0));
}

/// Geometric discrepancy (maximin criterion): the minimum Euclidean
/// distance over all sample pairs. Higher means better spread. Undefined
/// for fewer than two samples.
inline double geometric(const SampleSet& set) {
    require_valid(set);
    const std::size_t n = set.n();
    if (n < 2) throw std::invalid_argument("geometric: needs at least two samples");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            double d2 = 0.0;
            for (std::size_t j = 0; j < set.p(); ++j) {
                const double d = set(i, j) - set(k, j);
                d2 += d * d;
            }
            if (d2 < best) best = d2;
        }
    }
    return std::sqrt(best);
}

}  // namespace elhs
