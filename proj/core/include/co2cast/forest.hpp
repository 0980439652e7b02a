#ifndef CO2CAST_FOREST_HPP
#define CO2CAST_FOREST_HPP

#include "co2cast/dataset.hpp"
#include "co2cast/tree.hpp"

#include <cstdint>
#include <vector>

namespace co2cast {

/// Bagged ensemble of regression trees. Tree t is trained on a bootstrap
/// resample drawn from SplitMix64(seed_t), where the per-tree seeds are the
/// first n_trees outputs of SplitMix64(seed) -- derived up front so results
/// cannot depend on construction order.
struct ForestModel {
    std::vector<TreeModel> trees;
    int n_trees = 0;
    bool bootstrap = true;
    std::uint64_t seed = 0;
    TreeParams tree_params;
};

ForestModel fit_forest(const Dataset& train, int n_trees, bool bootstrap,
                       std::uint64_t seed, const TreeParams& tree_params = {});

/// Arithmetic mean of the member trees' predictions at x.
double predict_forest(const ForestModel& model, double x);

} // namespace co2cast

#endif
