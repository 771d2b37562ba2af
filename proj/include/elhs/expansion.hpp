#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "elhs/degree.hpp"
#include "elhs/discrepancy.hpp"
#include "elhs/parallel.hpp"
#include "elhs/rng.hpp"
#include "elhs/sample_set.hpp"

namespace elhs {

/// Metric used to rank candidate expansions. Centered discrepancy is
/// minimized, geometric discrepancy is maximized.
enum class OptimizeMode { kNone, kCenteredDiscrepancy, kGeometricDiscrepancy };

/// Largest accepted expansion size; grids of n+m bins per dimension are
/// allocated, so this bounds memory.
inline constexpr std::size_t kMaxExpansionSize = 1'000'000;

struct ExpansionConfig {
    std::size_t m = 1;  ///< number of new samples (0 is a no-op)
    OptimizeMode optimize = OptimizeMode::kNone;
    std::size_t candidates = 100;      ///< search budget when optimize != kNone
    std::optional<double> tolerance;   ///< early-stop threshold on the metric
    std::uint64_t seed = 0;
};

struct ExpansionResult {
    SampleSet expanded;                 ///< input rows first, m new rows appended
    double measured_degree = 0.0;       ///< degree of `expanded`
    std::optional<double> metric_value; ///< selected candidate's metric, if optimized
    std::size_t candidates_evaluated = 0;
};

/// Occupancy of the set under the n+m grid the expansion will use. By
/// pigeonhole (n samples over n+m bins) every dimension ends up with at
/// least m empty bins.
inline OccupancyProfile regrid(const SampleSet& set, std::size_t m) {
    if (m == 0) throw std::invalid_argument("regrid: m must be positive");
    if (m > kMaxExpansionSize) throw std::invalid_argument("regrid: m exceeds the supported maximum");
    return occupancy(set, set.n() + m);
}

/// For each dimension independently, m bins drawn uniformly without
/// replacement from that dimension's empty bins, sorted ascending so the
/// downstream void pairing is deterministic.
inline std::vector<std::vector<std::size_t>> select_voids(const OccupancyProfile& profile,
                                                          std::size_t m, RngStream& rng) {
    std::vector<std::vector<std::size_t>> voids(profile.counts.size());
    for (std::size_t j = 0; j < voids.size(); ++j) {
        if (profile.empty[j] < m) {
            // cannot happen after regrid(); signals a caller bug
            throw std::logic_error("select_voids: fewer empty bins than m");
        }
        voids[j] = sample_without_replacement(profile.empty_bins(j), m, rng);
    }
    return voids;
}

/// LHS drawn on the m x p subgrid formed by the selected voids: in each
/// dimension a random permutation pairs the m new samples with the m
/// voids, and each coordinate is jittered inside its void bin of the
/// grid_k grid. Every new sample occupies a distinct selected void in
/// every dimension.
inline SampleSet inner_lhs(const std::vector<std::vector<std::size_t>>& voids,
                           std::size_t m, std::size_t grid_k, RngStream& rng) {
    const std::size_t p = voids.size();
    if (p == 0) throw std::invalid_argument("inner_lhs: no dimensions");
    for (std::size_t j = 0; j < p; ++j) {
        if (voids[j].size() != m) {
            throw std::invalid_argument("inner_lhs: dimension must supply exactly m bins");
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (voids[j][i] >= grid_k) throw std::invalid_argument("inner_lhs: bin index out of range");
            if (i > 0 && voids[j][i] == voids[j][i - 1]) {
                throw std::invalid_argument("inner_lhs: duplicate bin index within a dimension");
            }
        }
    }
    SampleSet pts(m, p);
    for (std::size_t j = 0; j < p; ++j) {
        const auto sigma = random_permutation(m, rng);
        for (std::size_t i = 0; i < m; ++i) {
            pts(i, j) = coord_in_bin(voids[j][sigma[i]], rng.next_unit(), grid_k);
        }
    }
    return pts;
}

namespace detail {

/// One unoptimized expansion drawn from rng; the profile must be
/// occupancy(set, set.n() + m).
inline SampleSet expand_once(const SampleSet& set, const OccupancyProfile& profile,
                             std::size_t m, RngStream& rng) {
    const auto voids = select_voids(profile, m, rng);
    return set.append(inner_lhs(voids, m, set.n() + m, rng));
}

}  // namespace detail

/// Expands the set by config.m new samples.
///
/// With optimize == kNone a single expansion is drawn. Otherwise up to
/// config.candidates independent expansions are drawn (candidate i uses
/// the child stream of index i, so they are reproducible and order-free),
/// each full n+m set is scored with the chosen metric, and the best one
/// wins; ties go to the lowest candidate index. A tolerance stops the
/// search at the first candidate (in index order) that reaches it.
///
/// Candidates are evaluated in chunks sized by ELHS_THREADS; the reduction
/// runs in index order, so parallel output is byte-identical to serial.
inline ExpansionResult expand(const SampleSet& set, const ExpansionConfig& config) {
    require_valid(set);
    if (config.candidates == 0) throw std::invalid_argument("expand: candidates must be >= 1");
    if (config.tolerance && !(*config.tolerance > 0.0)) {
        throw std::invalid_argument("expand: tolerance must be positive");
    }

    const bool minimize = config.optimize == OptimizeMode::kCenteredDiscrepancy;

    if (config.m == 0) {
        // no-op expansion, kept legal for CLI convenience
        ExpansionResult out{set, degree(set), std::nullopt, 0};
        if (config.optimize == OptimizeMode::kCenteredDiscrepancy) {
            out.metric_value = centered_l2(set);
        } else if (config.optimize == OptimizeMode::kGeometricDiscrepancy) {
            out.metric_value = geometric(set);
        }
        return out;
    }

    const RngStream parent(config.seed);
    const OccupancyProfile profile = regrid(set, config.m);

    if (config.optimize == OptimizeMode::kNone) {
        RngStream rng = parent.child(0);
        SampleSet expanded = detail::expand_once(set, profile, config.m, rng);
        const double deg = degree(expanded);
        return ExpansionResult{std::move(expanded), deg, std::nullopt, 1};
    }

    struct Scored {
        SampleSet candidate;
        double metric = 0.0;
    };

    SampleSet best_set;
    double best_metric = 0.0;
    bool have_best = false;
    bool stop = false;
    std::size_t evaluated = 0;
    const unsigned workers = worker_count();
    const std::size_t chunk = std::max<std::size_t>(workers, 1);

    for (std::size_t start = 0; start < config.candidates && !stop; start += chunk) {
        const std::size_t end = std::min(start + chunk, config.candidates);
        std::vector<Scored> scored(end - start);
        parallel_for(end - start, workers, [&](std::size_t t) {
            RngStream rng = parent.child(start + t);
            SampleSet cand = detail::expand_once(set, profile, config.m, rng);
            const double metric = minimize ? centered_l2(cand) : geometric(cand);
            scored[t] = Scored{std::move(cand), metric};
        });
        for (std::size_t t = 0; t < scored.size() && !stop; ++t) {
            const double metric = scored[t].metric;
            if (!have_best || (minimize ? metric < best_metric : metric > best_metric)) {
                best_metric = metric;
                best_set = std::move(scored[t].candidate);
                have_best = true;
            }
            ++evaluated;
            if (config.tolerance &&
                (minimize ? metric <= *config.tolerance : metric >= *config.tolerance)) {
                stop = true;  // first candidate meeting the tolerance ends the search
            }
        }
    }

    const double deg = degree(best_set);
    return ExpansionResult{std::move(best_set), deg, best_metric, evaluated};
}

/// Repeated unitary expansion: m single-sample expansions in sequence,
/// regridding the grown set each step. Baseline for comparison against
/// the one-shot expand(); overlap opportunities compound per step, so the
/// resulting degree is systematically lower, and the cost scales with m.
inline ExpansionResult expand_unitary(const SampleSet& set, std::size_t m, RngStream& rng) {
    require_valid(set);
    SampleSet current = set;
    for (std::size_t step = 0; step < m; ++step) {
        const OccupancyProfile profile = regrid(current, 1);
        current = detail::expand_once(current, profile, 1, rng);
    }
    const double deg = degree(current);
    return ExpansionResult{std::move(current), deg, std::nullopt, m};
}

/// Predicted degree for every expansion size in [m_min, m_max], plus the
/// m = 0 baseline, ranked by degree descending with ties going to the
/// smaller (cheaper) m. No samples are drawn. verbose returns the whole
/// ranking; otherwise only the top entry.
inline std::vector<std::pair<std::size_t, double>> optimal_expansion(
    const SampleSet& set, std::size_t m_min, std::size_t m_max, bool verbose) {
    require_valid(set);
    if (m_min > m_max) throw std::invalid_argument("optimal_expansion: empty range");
    if (m_max > kMaxExpansionSize) {
        throw std::invalid_argument("optimal_expansion: m_max exceeds the supported maximum");
    }
    std::vector<std::pair<std::size_t, double>> ranked;
    ranked.reserve(m_max - m_min + 2);
    if (m_min > 0) ranked.emplace_back(0, degree(set));
    for (std::size_t m = m_min; m <= m_max; ++m) {
        ranked.emplace_back(m, predicted_degree(set, m));
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (!verbose) ranked.resize(1);
    return ranked;
}

}  // namespace elhs
