#include "co2cast/tree.hpp"

#include "co2cast/errors.hpp"
#include "co2cast/format.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace co2cast {

namespace {

// Node statistics over a contiguous index range of the x-sorted samples.
struct NodeStats {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t count = 0;

    double mean() const { return sum / static_cast<double>(count); }
    // SSE = sum (y - mean)^2 = sum_sq - sum^2/n, clamped against rounding
    double sse() const {
        const double s = sum_sq - sum * sum / static_cast<double>(count);
        return s > 0.0 ? s : 0.0;
    }
};

struct Builder {
    const std::vector<double>& xs;
    const std::vector<double>& ys;
    const TreeParams& params;
    std::vector<TreeNode>& nodes;
    int leaf_count = 0;

    // Zero-SSE stop uses a relative tolerance: identical targets can still
    // produce SSE ~1e-30 through the running sums.
    bool pure(const NodeStats& st) const {
        const double scale = 1.0 + st.sum_sq / static_cast<double>(st.count);
        return st.sse() <= 1e-12 * scale;
    }

    int build(std::size_t lo, std::size_t hi, int depth) {
        NodeStats st;
        for (std::size_t i = lo; i < hi; ++i) {
            st.sum += ys[i];
            st.sum_sq += ys[i] * ys[i];
        }
        st.count = hi - lo;

        const bool depth_capped = params.max_depth && depth >= *params.max_depth;
        const bool too_small = st.count < static_cast<std::size_t>(params.min_samples_split);
        if (depth_capped || too_small || xs[lo] == xs[hi - 1] || pure(st)) {
            return emit_leaf(st);
        }

        // Candidate thresholds are midpoints between consecutive distinct x
        // values; pick the split minimizing SSE_left + SSE_right, preferring
        // the smallest threshold on ties.
        double best_score = std::numeric_limits<double>::infinity();
        double best_threshold = 0.0;
        std::size_t best_cut = 0;
        NodeStats left;
        for (std::size_t i = lo; i + 1 < hi; ++i) {
            left.sum += ys[i];
            left.sum_sq += ys[i] * ys[i];
            ++left.count;
            if (xs[i] == xs[i + 1]) continue;
            const std::size_t right_count = st.count - left.count;
            if (left.count < static_cast<std::size_t>(params.min_samples_leaf) ||
                right_count < static_cast<std::size_t>(params.min_samples_leaf)) {
                continue;
            }
            NodeStats right{st.sum - left.sum, st.sum_sq - left.sum_sq, right_count};
            const double score = left.sse() + right.sse();
            if (score < best_score) {
                best_score = score;
                best_threshold = xs[i] + (xs[i + 1] - xs[i]) / 2.0;
                best_cut = i + 1;
            }
        }
        if (best_cut == 0) return emit_leaf(st); // min_samples_leaf left nothing

        const int id = static_cast<int>(nodes.size());
        nodes.emplace_back();
        const int left_id = build(lo, best_cut, depth + 1);
        const int right_id = build(best_cut, hi, depth + 1);
        nodes[static_cast<std::size_t>(id)] =
            TreeNode{false, best_threshold, left_id, right_id, 0.0, 0};
        return id;
    }

    int emit_leaf(const NodeStats& st) {
        const int id = static_cast<int>(nodes.size());
        nodes.push_back(TreeNode{true, 0.0, -1, -1, st.mean(), static_cast<int>(st.count)});
        ++leaf_count;
        return id;
    }
};

} // namespace

TreeModel fit_tree(const Dataset& train, const TreeParams& params) {
    if (train.empty()) throw EmptyTrainingSet();

    // sort samples by x once; subtrees work on contiguous ranges
    std::vector<std::size_t> order(train.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return train.xs[a] < train.xs[b]; });
    std::vector<double> xs(train.size()), ys(train.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        xs[i] = train.xs[order[i]];
        ys[i] = train.ys[order[i]];
    }

    TreeModel model;
    model.params = params;
    Builder builder{xs, ys, params, model.nodes};
    builder.build(0, xs.size(), 0);
    model.leaf_count = builder.leaf_count;
    return model;
}

double predict_tree(const TreeModel& model, double x) {
    const TreeNode* node = &model.nodes[0];
    while (!node->is_leaf) {
        node = &model.nodes[static_cast<std::size_t>(x <= node->threshold ? node->left
                                                                          : node->right)];
    }
    return node->value;
}

namespace {

void serialize_node(const TreeModel& model, int id, std::string& out) {
    const TreeNode& node = model.nodes[static_cast<std::size_t>(id)];
    if (node.is_leaf) {
        out += "leaf(";
        out += format_double(node.value);
        out += ',';
        out += std::to_string(node.count);
        out += ')';
        return;
    }
    out += '(';
    out += format_double(node.threshold);
    out += ' ';
    serialize_node(model, node.left, out);
    out += ' ';
    serialize_node(model, node.right, out);
    out += ')';
}

} // namespace

std::string serialize_tree(const TreeModel& model) {
    std::string out;
    serialize_node(model, 0, out);
    return out;
}

} // namespace co2cast
