#ifndef CO2CAST_TREE_HPP
#define CO2CAST_TREE_HPP

#include "co2cast/dataset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace co2cast {

struct TreeParams {
    std::optional<int> max_depth;  // unlimited when unset
    int min_samples_split = 2;
    int min_samples_leaf = 1;
};

/// Node arena entry. Internal nodes route x <= threshold left, x > threshold
/// right; leaves store the mean target of their training samples.
struct TreeNode {
    bool is_leaf = true;
    double threshold = 0.0; // internal only
    int left = -1;
    int right = -1;
    double value = 0.0;     // leaf only
    int count = 0;          // training samples in the leaf's region
};

/// Greedy binary regression tree. Splits minimize SSE_left + SSE_right over
/// midpoint thresholds between consecutive distinct x values, ties broken by
/// the smallest threshold.
struct TreeModel {
    std::vector<TreeNode> nodes; // nodes[0] is the root
    TreeParams params;
    int leaf_count = 0;
};

TreeModel fit_tree(const Dataset& train, const TreeParams& params = {});

double predict_tree(const TreeModel& model, double x);

/// Nested text form "(threshold left right)" with leaves "leaf(value,count)".
std::string serialize_tree(const TreeModel& model);

} // namespace co2cast

#endif
