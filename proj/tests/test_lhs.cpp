#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "elhs/degree.hpp"
#include "elhs/lhs.hpp"

using elhs::RngStream;
using elhs::sample_lhs;

TEST_CASE("sample_lhs satisfies the projection property") {
    RngStream seeds(31337);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t p = 1 + seeds.next_below(6);
        const std::size_t n = 1 + seeds.next_below(120);
        RngStream rng(seeds.next_u64());
        const auto set = sample_lhs(p, n, rng);
        REQUIRE(set.n() == n);
        REQUIRE(set.p() == p);
        for (std::size_t j = 0; j < p; ++j) {
            std::set<std::size_t> bins;
            for (std::size_t i = 0; i < n; ++i) {
                bins.insert(elhs::bin_index(set(i, j), n));
            }
            REQUIRE(bins.size() == n);  // one sample per stratum
        }
    }
}

TEST_CASE("sample_lhs has degree one by construction") {
    RngStream seeds(777);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t p = 1 + seeds.next_below(8);
        const std::size_t n = 1 + seeds.next_below(200);
        RngStream rng(seeds.next_u64());
        CHECK(elhs::degree(sample_lhs(p, n, rng)) == 1.0);
    }
}

TEST_CASE("single-point LHS is one uniform draw per dimension") {
    RngStream rng(5);
    const auto set = sample_lhs(3, 1, rng);
    REQUIRE(set.n() == 1);
    REQUIRE(set.p() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(set(0, j) >= 0.0);
        CHECK(set(0, j) < 1.0);
    }
    CHECK(elhs::degree(set) == 1.0);
}

TEST_CASE("marginal means converge to one half") {
    // mean over many seeds of every coordinate; 3 sigma of the uniform
    // estimator with n*seeds samples per dimension
    const std::size_t n = 16;
    const std::size_t p = 2;
    const int seeds = 400;
    double sum[p] = {0.0, 0.0};
    for (int s = 0; s < seeds; ++s) {
        RngStream rng(9000 + s);
        const auto set = sample_lhs(p, n, rng);
        for (std::size_t j = 0; j < p; ++j) {
            for (std::size_t i = 0; i < n; ++i) sum[j] += set(i, j);
        }
    }
    const double count = static_cast<double>(n) * seeds;
    const double sigma = std::sqrt(1.0 / 12.0 / count);
    for (std::size_t j = 0; j < p; ++j) {
        CHECK(std::abs(sum[j] / count - 0.5) < 3.0 * sigma);
    }
}

TEST_CASE("sample_lhs is deterministic in the seed") {
    RngStream a(123), b(123), c(124);
    const auto sa = sample_lhs(4, 33, a);
    const auto sb = sample_lhs(4, 33, b);
    const auto sc = sample_lhs(4, 33, c);
    CHECK(sa == sb);
    CHECK_FALSE(sa == sc);
}

TEST_CASE("sample_lhs rejects degenerate shapes") {
    RngStream rng(1);
    CHECK_THROWS_AS(sample_lhs(0, 5, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_lhs(5, 0, rng), std::invalid_argument);
}
