#include "co2cast/forest.hpp"

#include "co2cast/errors.hpp"
#include "co2cast/rng.hpp"

namespace co2cast {

ForestModel fit_forest(const Dataset& train, int n_trees, bool bootstrap,
                       std::uint64_t seed, const TreeParams& tree_params) {
    if (train.empty()) throw EmptyTrainingSet();
    if (n_trees < 1) throw Error("n_trees must be >= 1");

    ForestModel model;
    model.n_trees = n_trees;
    model.bootstrap = bootstrap;
    model.seed = seed;
    model.tree_params = tree_params;
    model.trees.reserve(static_cast<std::size_t>(n_trees));

    // One sub-seed per tree, derived up front: tree t depends only on
    // (train, seed, t), never on how many trees ran before it.
    const std::vector<std::uint64_t> tree_seeds =
        rng_stream(seed, static_cast<std::size_t>(n_trees));

    const std::size_t n = train.size();
    for (int t = 0; t < n_trees; ++t) {
        if (!bootstrap) {
            model.trees.push_back(fit_tree(train, tree_params));
            continue;
        }
        SplitMix64 rng(tree_seeds[static_cast<std::size_t>(t)]);
        Dataset sample;
        sample.xs.reserve(n);
        sample.ys.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t idx = rng.below(n);
            sample.xs.push_back(train.xs[idx]);
            sample.ys.push_back(train.ys[idx]);
        }
        model.trees.push_back(fit_tree(sample, tree_params));
    }
    return model;
}

double predict_forest(const ForestModel& model, double x) {
    double sum = 0.0;
    for (const TreeModel& tree : model.trees) sum += predict_tree(tree, x);
    return sum / static_cast<double>(model.trees.size());
}

} // namespace co2cast
