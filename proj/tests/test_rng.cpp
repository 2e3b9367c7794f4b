#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hopwar/rng.hpp"

using namespace hopwar;

TEST_CASE("splitmix64 matches the reference sequence") {
    // Reference generator seeded with 0: the k-th output mixes k * golden gamma.
    constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ULL;
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(splitmix64(gamma) == 0x6e789e6aa1b965f4ULL);
    CHECK(splitmix64(2 * gamma) == 0x06c45d188009454fULL);
}

TEST_CASE("derived seeds differ per stream and per master seed") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t master : {0ULL, 1ULL, 2ULL, 12345ULL}) {
        for (StreamKey k : {StreamKey::Defender, StreamKey::Attacker, StreamKey::Phy}) {
            seen.insert(derive_seed(master, k));
        }
    }
    CHECK(seen.size() == 12);
    CHECK(derive_seed(7, StreamKey::Attacker) == derive_seed(7, StreamKey::Attacker));
}

TEST_CASE("identical seeds give identical streams") {
    RandomStream a(99), b(99);
    for (int i = 0; i < 1000; ++i) {
        REQUIRE(a.next_u64() == b.next_u64());
        REQUIRE(a.uniform_open() == b.uniform_open());
        REQUIRE(a.normal() == b.normal());
    }
}

TEST_CASE("uniform_open stays inside the open unit interval") {
    RandomStream rng(3);
    double sum = 0.0;
    constexpr int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform_open();
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.005));
}

TEST_CASE("uniform_index covers the range evenly") {
    RandomStream rng(11);
    constexpr std::uint64_t m = 12;
    constexpr int n = 120000;
    std::vector<int> counts(m, 0);
    for (int i = 0; i < n; ++i) {
        const auto k = rng.uniform_index(m);
        REQUIRE(k < m);
        ++counts[k];
    }
    // Pearson chi-square, 11 degrees of freedom; 31.26 is the 0.999 quantile.
    double chi2 = 0.0;
    const double expected = static_cast<double>(n) / m;
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    CHECK(chi2 < 31.26);
    CHECK(rng.uniform_index(1) == 0);
    CHECK_THROWS_AS(rng.uniform_index(0), std::invalid_argument);
}

TEST_CASE("normal variates have zero mean and unit variance") {
    RandomStream rng(5);
    constexpr int n = 200000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        sum += z;
        sq += z * z;
    }
    const double mean = sum / n;
    CHECK(std::abs(mean) < 0.01);
    CHECK(sq / n - mean * mean == doctest::Approx(1.0).epsilon(0.02));
}
