#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace elhs {

/// N x P matrix of coordinates in the half-open unit hypercube [0,1)^P.
///
/// Row order is significant: expansions append new rows and never touch
/// the originals. Treat instances as immutable once filled; sharing a
/// const SampleSet across threads is safe.
class SampleSet {
public:
    SampleSet() = default;
    SampleSet(std::size_t n, std::size_t p) : n_(n), p_(p), data_(n * p, 0.0) {}

    /// Builds a set from row vectors. Throws on ragged rows.
    static SampleSet from_rows(const std::vector<std::vector<double>>& rows) {
        SampleSet set(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != set.p_) {
                std::ostringstream oss;
                oss << "ragged row " << i << ": has " << rows[i].size()
                    << " values, expected " << set.p_;
                throw std::invalid_argument(oss.str());
            }
            for (std::size_t j = 0; j < set.p_; ++j) set(i, j) = rows[i][j];
        }
        return set;
    }

    std::size_t n() const { return n_; }
    std::size_t p() const { return p_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * p_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * p_ + j]; }

    std::span<const double> row(std::size_t i) const { return {data_.data() + i * p_, p_}; }
    const std::vector<double>& data() const { return data_; }

    /// New set with `extra`'s rows appended below this one's.
    SampleSet append(const SampleSet& extra) const {
        if (extra.p_ != p_) throw std::invalid_argument("append: dimension mismatch");
        SampleSet out(n_ + extra.n_, p_);
        std::copy(data_.begin(), data_.end(), out.data_.begin());
        std::copy(extra.data_.begin(), extra.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
        return out;
    }

    bool operator==(const SampleSet&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t p_ = 0;
    std::vector<double> data_;  // row-major
};

/// Checks the unit-hypercube invariants: n >= 1, p >= 1, and every
/// coordinate in [0,1). Returns an error message naming the offending
/// row, column, and value, or nullopt when the set is valid.
inline std::optional<std::string> validate(const SampleSet& set) {
    if (set.n() == 0) return "sample set has no rows";
    if (set.p() == 0) return "sample set has no columns";
    for (std::size_t i = 0; i < set.n(); ++i) {
        for (std::size_t j = 0; j < set.p(); ++j) {
            const double x = set(i, j);
            if (!(x >= 0.0 && x < 1.0)) {  // also catches NaN
                std::ostringstream oss;
                oss << "coordinate out of [0,1) at row " << i << ", column " << j
                    << ": " << x;
                return oss.str();
            }
        }
    }
    return std::nullopt;
}

inline void require_valid(const SampleSet& set) {
    if (auto err = validate(set)) throw std::invalid_argument(*err);
}

/// Index of the interval [l/k, (l+1)/k) containing x, for x in [0,1).
/// floor(x*k) can land one past the last bin when x*k rounds up; the
/// result is clamped to k-1 so exact values keep their semantics.
inline std::size_t bin_index(double x, std::size_t k) {
    if (k == 0) throw std::invalid_argument("bin_index: k must be positive");
    if (!(x >= 0.0 && x < 1.0)) {
        std::ostringstream oss;
        oss << "bin_index: x outside [0,1): " << x;
        throw std::invalid_argument(oss.str());
    }
    const auto raw = static_cast<std::size_t>(x * static_cast<double>(k));
    return raw < k ? raw : k - 1;
}

/// Jittered coordinate (bin + u) / k with u in [0,1). Rounding of the sum
/// or the division can push the value across a bin boundary; the result
/// is nudged by ulps until bin_index(result, k) == bin, so stratification
/// holds exactly.
inline double coord_in_bin(std::size_t bin, double u, std::size_t k) {
    double x = (static_cast<double>(bin) + u) / static_cast<double>(k);
    if (x >= 1.0) x = std::nextafter(1.0, 0.0);
    while (bin_index(x, k) > bin) x = std::nextafter(x, 0.0);
    while (bin_index(x, k) < bin) x = std::nextafter(x, 1.0);
    return x;
}

}  // namespace elhs
