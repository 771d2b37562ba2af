#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <vector>

#include "elhs/rng.hpp"
#include "elhs/sample_set.hpp"

using elhs::bin_index;
using elhs::coord_in_bin;
using elhs::RngStream;
using elhs::SampleSet;

TEST_CASE("validate accepts in-range sets") {
    const auto set = SampleSet::from_rows({{0.1, 0.9}, {0.5, 0.0}});
    CHECK_FALSE(elhs::validate(set).has_value());
}

TEST_CASE("validate rejects the closed upper boundary") {
    const auto set = SampleSet::from_rows({{1.0}});
    const auto err = elhs::validate(set);
    REQUIRE(err.has_value());
    CHECK(err->find("row 0") != std::string::npos);
}

TEST_CASE("validate reports the offending row and column") {
    const auto set = SampleSet::from_rows({{0.5, -0.1}});
    const auto err = elhs::validate(set);
    REQUIRE(err.has_value());
    CHECK(err->find("row 0") != std::string::npos);
    CHECK(err->find("column 1") != std::string::npos);
    CHECK(err->find("-0.1") != std::string::npos);
}

TEST_CASE("validate rejects empty sets and NaN") {
    CHECK(elhs::validate(SampleSet(0, 2)).has_value());
    CHECK(elhs::validate(SampleSet(2, 0)).has_value());
    auto set = SampleSet(1, 1);
    set(0, 0) = std::nan("");
    CHECK(elhs::validate(set).has_value());
}

TEST_CASE("from_rows rejects ragged input") {
    CHECK_THROWS_AS(SampleSet::from_rows({{0.1, 0.2}, {0.3}}), std::invalid_argument);
}

TEST_CASE("bin_index boundary cases") {
    CHECK(bin_index(0.0, 10) == 0);
    CHECK(bin_index(std::nextafter(1.0, 0.0), 10) == 9);
    CHECK(bin_index(0.35, 10) == 3);
    CHECK_THROWS_AS(bin_index(1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(bin_index(-0.1, 10), std::invalid_argument);
    CHECK_THROWS_AS(bin_index(0.5, 0), std::invalid_argument);
}

TEST_CASE("bin_index brackets its argument") {
    RngStream rng(2024);
    for (int trial = 0; trial < 20000; ++trial) {
        const double x = rng.next_unit();
        const std::size_t k = 1 + rng.next_below(500);
        const std::size_t bin = bin_index(x, k);
        REQUIRE(bin < k);
        // lower edge always holds; the upper edge can be off only when the
        // clamp fired, i.e. floor(x*k) == k
        CHECK(static_cast<double>(bin) / static_cast<double>(k) <= x);
        if (static_cast<std::size_t>(x * static_cast<double>(k)) < k) {
            CHECK(x < static_cast<double>(bin + 1) / static_cast<double>(k));
        }
    }
}

TEST_CASE("coord_in_bin lands in its bin, always") {
    RngStream rng(99);
    for (int trial = 0; trial < 20000; ++trial) {
        const std::size_t k = 1 + rng.next_below(1000);
        const std::size_t bin = rng.next_below(k);
        const double x = coord_in_bin(bin, rng.next_unit(), k);
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
        CHECK(bin_index(x, k) == bin);
    }
    // jitter hard against the top of the stratum
    for (std::size_t k : {1ul, 7ul, 1024ul, 2048ul}) {
        const double u = std::nextafter(1.0, 0.0);
        for (std::size_t bin = 0; bin < k; bin += (k > 16 ? k / 16 : 1)) {
            CHECK(bin_index(coord_in_bin(bin, u, k), k) == bin);
        }
        CHECK(bin_index(coord_in_bin(k - 1, u, k), k) == k - 1);
    }
}

TEST_CASE("RngStream replays bit-identically") {
    RngStream a(0xDEADBEEF);
    RngStream b(0xDEADBEEF);
    for (int i = 0; i < 10000; ++i) {
        REQUIRE(a.next_u64() == b.next_u64());
    }
    // interleave draw kinds; sequences must still agree
    RngStream c(7), d(7);
    for (int i = 0; i < 10000; ++i) {
        REQUIRE(c.next_unit() == d.next_unit());
        REQUIRE(c.next_below(1 + (i % 97)) == d.next_below(1 + (i % 97)));
    }
}

TEST_CASE("next_unit stays in [0,1)") {
    RngStream rng(1);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.next_unit();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("next_below is unbiased enough and in range") {
    RngStream rng(5);
    const std::uint64_t bound = 7;
    std::vector<std::size_t> hits(bound, 0);
    const int draws = 70000;
    for (int i = 0; i < draws; ++i) {
        const auto v = rng.next_below(bound);
        REQUIRE(v < bound);
        ++hits[v];
    }
    // each cell ~10000, sigma ~ sqrt(10000 * 6/7) ~ 93; allow 5 sigma
    for (const auto h : hits) {
        CHECK(std::llabs(static_cast<long long>(h) - draws / 7) < 500);
    }
    CHECK_THROWS_AS(rng.next_below(0), std::invalid_argument);
}

TEST_CASE("child streams are deterministic and distinct") {
    const RngStream parent(42);
    RngStream c0 = parent.child(0);
    RngStream c0again = parent.child(0);
    RngStream c1 = parent.child(1);
    CHECK(c0.next_u64() == c0again.next_u64());
    RngStream c0fresh = parent.child(0);
    CHECK(c0fresh.next_u64() != c1.next_u64());
}

TEST_CASE("random_permutation produces a permutation") {
    RngStream rng(11);
    for (std::size_t m : {1ul, 2ul, 17ul, 100ul}) {
        const auto perm = elhs::random_permutation(m, rng);
        REQUIRE(perm.size() == m);
        std::set<std::size_t> seen(perm.begin(), perm.end());
        CHECK(seen.size() == m);
        CHECK(*seen.begin() == 0);
        CHECK(*seen.rbegin() == m - 1);
    }
}

TEST_CASE("sample_without_replacement returns sorted distinct picks") {
    RngStream rng(13);
    std::vector<std::size_t> pool{3, 8, 9, 15, 21, 40};
    for (int trial = 0; trial < 200; ++trial) {
        const auto picked = elhs::sample_without_replacement(pool, 4, rng);
        REQUIRE(picked.size() == 4);
        CHECK(std::is_sorted(picked.begin(), picked.end()));
        for (std::size_t i = 1; i < picked.size(); ++i) CHECK(picked[i] != picked[i - 1]);
        for (const auto v : picked) {
            CHECK(std::find(pool.begin(), pool.end(), v) != pool.end());
        }
    }
    CHECK_THROWS_AS(elhs::sample_without_replacement(pool, 7, rng), std::invalid_argument);
}

TEST_CASE("append keeps originals first, bitwise") {
    const auto a = SampleSet::from_rows({{0.1, 0.2}, {0.3, 0.4}});
    const auto b = SampleSet::from_rows({{0.5, 0.6}});
    const auto joined = a.append(b);
    REQUIRE(joined.n() == 3);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) CHECK(joined(i, j) == a(i, j));
    }
    CHECK(joined(2, 0) == 0.5);
    CHECK(joined(2, 1) == 0.6);
    CHECK_THROWS_AS(a.append(SampleSet::from_rows({{0.5}})), std::invalid_argument);
}
