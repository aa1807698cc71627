#include "doctest.h"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "aircov/parallel.hpp"
#include "aircov/rng.hpp"

using namespace aircov;

TEST_CASE("effective thread count resolution order") {
    CHECK(effective_threads(3) == 3);
    CHECK(effective_threads(0) >= 1);

    setenv("AIRCOV_THREADS", "2", 1);
    CHECK(effective_threads(0) == 2);
    CHECK(effective_threads(5) == 5); // explicit request beats the env var
    setenv("AIRCOV_THREADS", "garbage", 1);
    CHECK(effective_threads(0) >= 1);
    unsetenv("AIRCOV_THREADS");
}

TEST_CASE("parallel_for touches every index exactly once") {
    for (unsigned threads : {1u, 4u}) {
        const std::size_t n = 10000;
        std::vector<std::atomic<int>> hits(n);
        parallel_for(n, [&](std::size_t i) { hits[i].fetch_add(1); }, threads);
        for (std::size_t i = 0; i < n; ++i) CHECK(hits[i].load() == 1);
    }
    parallel_for(0, [](std::size_t) { FAIL("must not be called"); }, 4);
}

TEST_CASE("parallel_blocks partitions the range") {
    std::atomic<long long> total{0};
    parallel_blocks(1000, 64,
                    [&](std::size_t, std::size_t begin, std::size_t end) {
                        long long s = 0;
                        for (std::size_t i = begin; i < end; ++i)
                            s += static_cast<long long>(i);
                        total.fetch_add(s);
                    },
                    4);
    CHECK(total.load() == 999LL * 1000 / 2);
}

TEST_CASE("parallel_for propagates worker exceptions") {
    CHECK_THROWS_AS(
        parallel_for(100, [](std::size_t i) {
            if (i == 37) throw std::runtime_error("boom");
        }, 4),
        std::runtime_error);
}

TEST_CASE("counter rng is a pure function of seed and counter") {
    CHECK(rng::word(42, 7) == rng::word(42, 7));
    CHECK(rng::word(42, 7) != rng::word(42, 8));
    CHECK(rng::word(42, 7) != rng::word(43, 7));

    for (std::uint64_t c = 0; c < 2000; ++c) {
        const double u = rng::uniform(1, c);
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("lane layout keeps samples disjoint") {
    CHECK(rng::lanes_per_sample == 8);
    CHECK(rng::counter_for(0, rng::lane::bernoulli) == 0);
    CHECK(rng::counter_for(3, rng::lane::px) ==
          3 * rng::lanes_per_sample + static_cast<std::uint64_t>(rng::lane::px));
    // gaussian lane equals the inverse cdf of the uniform lane
    const double u = rng::uniform_lane(9, 15, rng::lane::x_l);
    CHECK(rng::normal_lane(9, 15, rng::lane::x_l) == normal_inv(u));
}

TEST_CASE("normal lane has roughly standard moments") {
    double sum = 0.0, sq = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double z = rng::normal_lane(5, static_cast<std::uint64_t>(i), rng::lane::x_n);
        sum += z;
        sq += z * z;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    CHECK(std::abs(mean) < 0.02);
    CHECK(std::abs(var - 1.0) < 0.02);
}
