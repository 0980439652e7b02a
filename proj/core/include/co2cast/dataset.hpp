#ifndef CO2CAST_DATASET_HPP
#define CO2CAST_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace co2cast {

/// Paired samples: xs holds year values, ys the emission values.
struct Dataset {
    std::vector<double> xs;
    std::vector<double> ys;

    std::size_t size() const { return xs.size(); }
    bool empty() const { return xs.empty(); }
};

enum class SplitStrategy {
    SeededRandom,      // Fisher-Yates shuffle driven by SplitMix64(seed)
    ChronologicalTail, // first round(ratio*n) samples by year train, rest test
};

std::string to_string(SplitStrategy s);
SplitStrategy split_strategy_from_string(const std::string& name);

struct Split {
    Dataset train;
    Dataset test;
    double ratio = 0.9;
    SplitStrategy strategy = SplitStrategy::SeededRandom;
    std::uint64_t seed = 0;
};

/// Partition `data` into train/test. Train size is round-half-away-from-zero
/// of ratio*n; each part keeps ascending-x order. Throws DegenerateSplit if
/// either part would be empty.
Split split_dataset(const Dataset& data, double ratio, SplitStrategy strategy,
                    std::uint64_t seed);

} // namespace co2cast

#endif
