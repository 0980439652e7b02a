#include "co2cast/dataset.hpp"

#include "co2cast/errors.hpp"
#include "co2cast/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace co2cast {

std::string to_string(SplitStrategy s) {
    return s == SplitStrategy::SeededRandom ? "random" : "chronological";
}

SplitStrategy split_strategy_from_string(const std::string& name) {
    if (name == "random") return SplitStrategy::SeededRandom;
    if (name == "chronological") return SplitStrategy::ChronologicalTail;
    throw Error("unknown split strategy '" + name + "'");
}

namespace {

std::size_t train_size(double ratio, std::size_t n) {
    // round half away from zero, pinned for cross-language determinism
    return static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n) + 0.5));
}

Dataset gather(const Dataset& data, const std::vector<std::size_t>& idx) {
    Dataset out;
    out.xs.reserve(idx.size());
    out.ys.reserve(idx.size());
    for (std::size_t i : idx) {
        out.xs.push_back(data.xs[i]);
        out.ys.push_back(data.ys[i]);
    }
    return out;
}

} // namespace

Split split_dataset(const Dataset& data, double ratio, SplitStrategy strategy,
                    std::uint64_t seed) {
    const std::size_t n = data.size();
    if (n < 2) throw DegenerateSplit();
    if (!(ratio > 0.0 && ratio < 1.0)) throw DegenerateSplit();

    const std::size_t k = train_size(ratio, n);
    if (k == 0 || k >= n) throw DegenerateSplit();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    auto by_year = [&data](std::size_t a, std::size_t b) {
        return data.xs[a] != data.xs[b] ? data.xs[a] < data.xs[b] : a < b;
    };

    if (strategy == SplitStrategy::SeededRandom) {
        // Fisher-Yates, descending index, j = next() mod (i+1). The exact
        // walk is part of the reproducibility contract.
        SplitMix64 rng(seed);
        for (std::size_t i = n - 1; i > 0; --i) {
            std::size_t j = rng.below(i + 1);
            std::swap(order[i], order[j]);
        }
    } else {
        std::sort(order.begin(), order.end(), by_year);
    }

    std::vector<std::size_t> train_idx(order.begin(), order.begin() + static_cast<long>(k));
    std::vector<std::size_t> test_idx(order.begin() + static_cast<long>(k), order.end());
    // samples keep ascending-year order inside each part
    std::sort(train_idx.begin(), train_idx.end(), by_year);
    std::sort(test_idx.begin(), test_idx.end(), by_year);

    Split split;
    split.train = gather(data, train_idx);
    split.test = gather(data, test_idx);
    split.ratio = ratio;
    split.strategy = strategy;
    split.seed = seed;
    return split;
}

} // namespace co2cast
