#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "co2cast/dataset.hpp"
#include "co2cast/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace co2cast;

namespace {

Dataset iota_dataset(std::size_t n, double y_base = 0.0) {
    Dataset d;
    for (std::size_t i = 0; i < n; ++i) {
        d.xs.push_back(1960.0 + static_cast<double>(i));
        d.ys.push_back(y_base + static_cast<double>(i) * 0.5);
    }
    return d;
}

} // namespace

TEST_CASE("59 samples at ratio 0.9 split 53/6") {
    const Split s = split_dataset(iota_dataset(59), 0.9, SplitStrategy::SeededRandom, 42);
    CHECK(s.train.size() == 53);
    CHECK(s.test.size() == 6);
}

TEST_CASE("chronological tail puts the last years in test") {
    const Split s =
        split_dataset(iota_dataset(10), 0.9, SplitStrategy::ChronologicalTail, 0);
    REQUIRE(s.test.size() == 1);
    CHECK(s.test.xs[0] == 1969.0);
    CHECK(s.train.xs.back() == 1968.0);
}

TEST_CASE("identical seeds give identical partitions") {
    const Split a = split_dataset(iota_dataset(59), 0.9, SplitStrategy::SeededRandom, 42);
    const Split b = split_dataset(iota_dataset(59), 0.9, SplitStrategy::SeededRandom, 42);
    CHECK(a.train.xs == b.train.xs);
    CHECK(a.test.xs == b.test.xs);

    const Split c = split_dataset(iota_dataset(59), 0.9, SplitStrategy::SeededRandom, 43);
    CHECK(a.train.xs != c.train.xs);
}

TEST_CASE("parts stay in ascending year order") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Split s = split_dataset(iota_dataset(30), 0.8, SplitStrategy::SeededRandom, seed);
        CHECK(std::is_sorted(s.train.xs.begin(), s.train.xs.end()));
        CHECK(std::is_sorted(s.test.xs.begin(), s.test.xs.end()));
    }
}

TEST_CASE("train and test multisets recompose the input") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> value(-5.0, 25.0);
    std::uniform_int_distribution<std::size_t> size(2, 40);
    std::uniform_real_distribution<double> ratio(0.15, 0.9);

    for (int round = 0; round < 200; ++round) {
        Dataset data;
        const std::size_t n = size(gen);
        for (std::size_t i = 0; i < n; ++i) {
            data.xs.push_back(static_cast<double>(i));
            data.ys.push_back(value(gen));
        }
        Split s;
        try {
            s = split_dataset(data, ratio(gen), SplitStrategy::SeededRandom, gen());
        } catch (const DegenerateSplit&) {
            continue; // tiny n with extreme ratio
        }
        REQUIRE(s.train.size() + s.test.size() == n);

        std::multiset<double> expected(data.ys.begin(), data.ys.end());
        std::multiset<double> got(s.train.ys.begin(), s.train.ys.end());
        got.insert(s.test.ys.begin(), s.test.ys.end());
        CHECK(expected == got);
    }
}

TEST_CASE("degenerate splits are rejected") {
    CHECK_THROWS_AS(split_dataset(iota_dataset(1), 0.9, SplitStrategy::SeededRandom, 0),
                    DegenerateSplit);
    // round(0.999 * 59) == 59: empty test part
    CHECK_THROWS_AS(split_dataset(iota_dataset(59), 0.999, SplitStrategy::SeededRandom, 0),
                    DegenerateSplit);
    CHECK_THROWS_AS(split_dataset(iota_dataset(59), 0.001, SplitStrategy::SeededRandom, 0),
                    DegenerateSplit);
    CHECK_THROWS_AS(split_dataset(iota_dataset(10), 1.0, SplitStrategy::SeededRandom, 0),
                    DegenerateSplit);
}

TEST_CASE("strategy names round-trip") {
    CHECK(split_strategy_from_string("random") == SplitStrategy::SeededRandom);
    CHECK(split_strategy_from_string("chronological") == SplitStrategy::ChronologicalTail);
    CHECK(to_string(SplitStrategy::SeededRandom) == "random");
    CHECK_THROWS_AS(split_strategy_from_string("bogus"), Error);
}
