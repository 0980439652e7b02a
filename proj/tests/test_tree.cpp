#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "co2cast/errors.hpp"
#include "co2cast/tree.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <random>

using namespace co2cast;

namespace {

const Dataset kStep{{1.0, 2.0, 3.0, 4.0}, {0.0, 0.0, 10.0, 10.0}};

} // namespace

TEST_CASE("step data splits at 2.5 with pure leaves") {
    const TreeModel m = fit_tree(kStep);
    REQUIRE(!m.nodes.empty());
    REQUIRE(!m.nodes[0].is_leaf);
    CHECK(m.nodes[0].threshold == doctest::Approx(2.5));
    CHECK(m.leaf_count == 2);
    CHECK(predict_tree(m, 2.0) == doctest::Approx(0.0));
    CHECK(predict_tree(m, 3.0) == doctest::Approx(10.0));
}

TEST_CASE("single sample becomes a leaf") {
    const TreeModel m = fit_tree(Dataset{{5.0}, {7.3}});
    REQUIRE(m.nodes.size() == 1);
    CHECK(m.nodes[0].is_leaf);
    CHECK(m.nodes[0].value == doctest::Approx(7.3));
    CHECK(m.nodes[0].count == 1);
    CHECK(predict_tree(m, -100.0) == doctest::Approx(7.3));
}

TEST_CASE("constant targets collapse to one leaf") {
    const Dataset d{{1.0, 2.0, 3.0, 4.0, 5.0}, {2.5, 2.5, 2.5, 2.5, 2.5}};
    const TreeModel m = fit_tree(d);
    CHECK(m.leaf_count == 1);
    CHECK(predict_tree(m, 3.0) == doctest::Approx(2.5));
}

TEST_CASE("empty training set is rejected") {
    CHECK_THROWS_AS(fit_tree(Dataset{}), EmptyTrainingSet);
}

TEST_CASE("root split matches exhaustive enumeration") {
    std::mt19937_64 gen(41);
    std::uniform_real_distribution<double> value(-10.0, 10.0);
    int checked = 0;
    for (int round = 0; round < 200; ++round) {
        Dataset d;
        const std::size_t n = 2 + gen() % 9; // n <= 10
        for (std::size_t i = 0; i < n; ++i) {
            d.xs.push_back(value(gen));
            d.ys.push_back(value(gen));
        }
        const auto expected = oracle::best_root_split(d.xs, d.ys);
        if (!expected) continue; // all x equal

        const TreeModel m = fit_tree(d);
        if (m.nodes[0].is_leaf) {
            // legitimate only when the node was already pure
            CHECK(expected->score == doctest::Approx(0.0).epsilon(1e-12));
            continue;
        }
        CHECK(m.nodes[0].threshold == doctest::Approx(expected->threshold).epsilon(1e-12));
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("extrapolation is flat on both sides") {
    std::mt19937_64 gen(42);
    std::uniform_real_distribution<double> value(0.0, 20.0);
    for (int round = 0; round < 50; ++round) {
        Dataset d;
        const std::size_t n = 1 + gen() % 12;
        for (std::size_t i = 0; i < n; ++i) {
            d.xs.push_back(value(gen));
            d.ys.push_back(value(gen));
        }
        const TreeModel m = fit_tree(d);
        const double hi = *std::max_element(d.xs.begin(), d.xs.end());
        const double lo = *std::min_element(d.xs.begin(), d.xs.end());
        CHECK(predict_tree(m, hi + 1.0) == predict_tree(m, hi + 1000.0));
        CHECK(predict_tree(m, lo - 1.0) == predict_tree(m, lo - 1000.0));

        // every prediction within the training target range
        const double y_lo = *std::min_element(d.ys.begin(), d.ys.end());
        const double y_hi = *std::max_element(d.ys.begin(), d.ys.end());
        for (double x = lo - 2.0; x <= hi + 2.0; x += 0.25) {
            const double p = predict_tree(m, x);
            CHECK(p >= y_lo - 1e-12);
            CHECK(p <= y_hi + 1e-12);
        }
    }
}

TEST_CASE("defaults reproduce distinct-x training targets exactly") {
    std::mt19937_64 gen(43);
    std::uniform_real_distribution<double> value(-5.0, 5.0);
    Dataset d;
    for (int i = 0; i < 40; ++i) {
        d.xs.push_back(static_cast<double>(i));
        d.ys.push_back(value(gen));
    }
    const TreeModel m = fit_tree(d);
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(predict_tree(m, d.xs[i]) == d.ys[i]);
    }
}

TEST_CASE("stopping rules bound the tree") {
    Dataset d;
    for (int i = 0; i < 32; ++i) {
        d.xs.push_back(static_cast<double>(i));
        d.ys.push_back(static_cast<double>(i % 7));
    }
    TreeParams depth_capped;
    depth_capped.max_depth = 2;
    const TreeModel shallow = fit_tree(d, depth_capped);
    CHECK(shallow.leaf_count <= 4);

    TreeParams depth_zero;
    depth_zero.max_depth = 0;
    const TreeModel stump = fit_tree(d, depth_zero);
    CHECK(stump.leaf_count == 1);

    TreeParams big_leaves;
    big_leaves.min_samples_leaf = 10;
    const TreeModel coarse = fit_tree(d, big_leaves);
    for (const TreeNode& node : coarse.nodes) {
        if (node.is_leaf) CHECK(node.count >= 10);
    }

    TreeParams no_split;
    no_split.min_samples_split = 64;
    CHECK(fit_tree(d, no_split).leaf_count == 1);
}

TEST_CASE("serialization is the nested text form") {
    CHECK(serialize_tree(fit_tree(kStep)) == "(2.5 leaf(0,2) leaf(10,2))");
    CHECK(serialize_tree(fit_tree(Dataset{{5.0}, {7.3}})) == "leaf(7.3,1)");
}

TEST_CASE("leaf bookkeeping is consistent") {
    std::mt19937_64 gen(44);
    std::uniform_real_distribution<double> value(-8.0, 8.0);
    for (int round = 0; round < 30; ++round) {
        Dataset d;
        const std::size_t n = 1 + gen() % 20;
        for (std::size_t i = 0; i < n; ++i) {
            d.xs.push_back(value(gen));
            d.ys.push_back(value(gen));
        }
        const TreeModel m = fit_tree(d);
        int leaves = 0;
        int covered = 0;
        for (const TreeNode& node : m.nodes) {
            if (node.is_leaf) {
                ++leaves;
                covered += node.count;
            }
        }
        CHECK(leaves == m.leaf_count);
        CHECK(covered == static_cast<int>(n)); // leaf regions partition the samples
        CHECK(m.nodes.size() == static_cast<std::size_t>(2 * leaves - 1));
    }
}
