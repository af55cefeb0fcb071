#ifndef CARE2VEC_TREE_HPP
#define CARE2VEC_TREE_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "care2vec/errors.hpp"
#include "care2vec/matrix.hpp"

namespace care2vec {

enum class SplitCriterion { Gini, CrossEntropy };

inline const char* criterion_name(SplitCriterion c) {
    return c == SplitCriterion::Gini ? "gini" : "cross_entropy";
}

/// Gini index 1 - sum(p_k^2).
inline double gini_impurity(const std::vector<std::size_t>& class_counts) {
    std::size_t total = 0;
    for (std::size_t c : class_counts) total += c;
    if (total == 0) throw EmptyNode("gini: impurity of an empty node is undefined");
    double sum_sq = 0.0;
    for (std::size_t c : class_counts) {
        const double p = static_cast<double>(c) / static_cast<double>(total);
        sum_sq += p * p;
    }
    return 1.0 - sum_sq;
}

/// Cross-entropy impurity -sum(p_k ln p_k), zero-count classes skipped.
inline double entropy_impurity(const std::vector<std::size_t>& class_counts) {
    std::size_t total = 0;
    for (std::size_t c : class_counts) total += c;
    if (total == 0) throw EmptyNode("entropy: impurity of an empty node is undefined");
    double h = 0.0;
    for (std::size_t c : class_counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log(p);
    }
    return h;
}

inline double impurity(SplitCriterion criterion, const std::vector<std::size_t>& class_counts) {
    return criterion == SplitCriterion::Gini ? gini_impurity(class_counts)
                                             : entropy_impurity(class_counts);
}

/// Axis-aligned binary test "feature <= threshold".
struct SplitCandidate {
    std::size_t feature_index = 0;
    double threshold = 0.0;
    double impurity_decrease = 0.0;
};

struct TreeNode {
    std::vector<std::size_t> class_counts;
    int majority_class = 0;
    std::optional<SplitCandidate> split;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;

    bool is_leaf() const { return !split.has_value(); }
};

namespace detail {

inline int majority_of(const std::vector<std::size_t>& counts) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < counts.size(); ++k)
        if (counts[k] > counts[best]) best = k;  // lowest index wins ties
    return static_cast<int>(best);
}

inline std::vector<std::size_t> count_classes(const std::vector<int>& y,
                                              const std::vector<std::size_t>& rows,
                                              std::size_t n_classes) {
    std::vector<std::size_t> counts(n_classes, 0);
    for (std::size_t r : rows) counts[static_cast<std::size_t>(y[r])]++;
    return counts;
}

} // namespace detail

/// Exhaustive search over every feature and every midpoint between
/// consecutive distinct sorted values, maximizing the weighted impurity
/// decrease. Ties break to the lowest feature index, then the lowest
/// threshold (the scan visits candidates in exactly that order and only
/// a strict improvement replaces the incumbent). Returns nothing when
/// no split strictly reduces impurity.
inline std::optional<SplitCandidate> best_split_on_rows(const Matrix& x, const std::vector<int>& y,
                                                        const std::vector<std::size_t>& rows,
                                                        std::size_t n_classes,
                                                        SplitCriterion criterion) {
    const std::size_t n = rows.size();
    if (n < 2) return std::nullopt;

    const std::vector<std::size_t> parent_counts = detail::count_classes(y, rows, n_classes);
    const double parent_impurity = impurity(criterion, parent_counts);

    std::optional<SplitCandidate> best;
    std::vector<std::pair<double, int>> column(n);
    std::vector<std::size_t> left_counts(n_classes), right_counts(n_classes);

    for (std::size_t f = 0; f < x.cols(); ++f) {
        for (std::size_t i = 0; i < n; ++i)
            column[i] = {x(rows[i], f), y[rows[i]]};
        std::sort(column.begin(), column.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        std::fill(left_counts.begin(), left_counts.end(), 0);
        right_counts = parent_counts;

        std::size_t i = 0;
        while (i < n) {
            // move the whole group of equal values to the left side
            const double v = column[i].first;
            while (i < n && column[i].first == v) {
                left_counts[static_cast<std::size_t>(column[i].second)]++;
                right_counts[static_cast<std::size_t>(column[i].second)]--;
                ++i;
            }
            if (i == n) break;
            const std::size_t n_left = i;
            const std::size_t n_right = n - i;
            const double weighted =
                (static_cast<double>(n_left) * impurity(criterion, left_counts) +
                 static_cast<double>(n_right) * impurity(criterion, right_counts)) /
                static_cast<double>(n);
            const double decrease = parent_impurity - weighted;
            if (decrease > 0.0 && (!best || decrease > best->impurity_decrease)) {
                best = SplitCandidate{f, (v + column[i].first) / 2.0, decrease};
            }
        }
    }
    return best;
}

inline std::optional<SplitCandidate> best_split(const Matrix& x, const std::vector<int>& y,
                                                std::size_t n_classes,
                                                SplitCriterion criterion) {
    if (x.rows() != y.size())
        throw DimensionMismatch("best_split: x rows != label count");
    std::vector<std::size_t> rows(x.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return best_split_on_rows(x, y, rows, n_classes, criterion);
}

/// CART classifier grown by recursive binary splitting. No pruning;
/// growth stops on purity, a missing candidate, the depth limit, or a
/// node smaller than min_samples_split. Fully deterministic.
struct DecisionTree {
    std::unique_ptr<TreeNode> root;
    std::size_t n_features = 0;
    std::size_t n_classes = 0;
    SplitCriterion criterion = SplitCriterion::Gini;
};

namespace detail {

inline std::unique_ptr<TreeNode> grow_tree(const Matrix& x, const std::vector<int>& y,
                                           std::vector<std::size_t> rows, std::size_t n_classes,
                                           SplitCriterion criterion,
                                           std::optional<std::size_t> max_depth,
                                           std::size_t min_samples_split, std::size_t depth) {
    auto node = std::make_unique<TreeNode>();
    node->class_counts = count_classes(y, rows, n_classes);
    node->majority_class = majority_of(node->class_counts);

    const bool pure =
        *std::max_element(node->class_counts.begin(), node->class_counts.end()) == rows.size();
    const bool depth_capped = max_depth.has_value() && depth >= *max_depth;
    if (pure || depth_capped || rows.size() < min_samples_split) return node;

    auto split = best_split_on_rows(x, y, rows, n_classes, criterion);
    if (!split) return node;

    std::vector<std::size_t> left_rows, right_rows;
    for (std::size_t r : rows) {
        if (x(r, split->feature_index) <= split->threshold)
            left_rows.push_back(r);
        else
            right_rows.push_back(r);
    }
    node->split = *split;
    node->left = grow_tree(x, y, std::move(left_rows), n_classes, criterion, max_depth,
                           min_samples_split, depth + 1);
    node->right = grow_tree(x, y, std::move(right_rows), n_classes, criterion, max_depth,
                            min_samples_split, depth + 1);
    return node;
}

} // namespace detail

inline DecisionTree fit_tree(const Matrix& x, const std::vector<int>& y, std::size_t n_classes,
                             SplitCriterion criterion = SplitCriterion::Gini,
                             std::optional<std::size_t> max_depth = std::nullopt,
                             std::size_t min_samples_split = 2) {
    if (x.rows() != y.size())
        throw DimensionMismatch("fit_tree: x has " + std::to_string(x.rows()) +
                                " rows, y has " + std::to_string(y.size()));
    if (x.rows() == 0) throw DimensionMismatch("fit_tree: empty training set");

    std::vector<std::size_t> rows(x.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;

    DecisionTree tree;
    tree.n_features = x.cols();
    tree.n_classes = n_classes;
    tree.criterion = criterion;
    tree.root = detail::grow_tree(x, y, std::move(rows), n_classes, criterion, max_depth,
                                  min_samples_split, 0);
    return tree;
}

namespace detail {

inline const TreeNode* descend(const TreeNode* node, const double* row) {
    while (!node->is_leaf()) {
        node = row[node->split->feature_index] <= node->split->threshold ? node->left.get()
                                                                         : node->right.get();
    }
    return node;
}

} // namespace detail

inline std::vector<int> predict_tree(const DecisionTree& tree, const Matrix& x) {
    if (x.cols() != tree.n_features)
        throw DimensionMismatch("predict_tree: feature count mismatch");
    std::vector<int> out(x.rows());
    for (std::size_t r = 0; r < x.rows(); ++r)
        out[r] = detail::descend(tree.root.get(), x.row(r))->majority_class;
    return out;
}

/// Rows are the reached leaf's class proportions.
inline Matrix predict_proba(const DecisionTree& tree, const Matrix& x) {
    if (x.cols() != tree.n_features)
        throw DimensionMismatch("predict_proba: feature count mismatch");
    Matrix out(x.rows(), tree.n_classes);
    for (std::size_t r = 0; r < x.rows(); ++r) {
        const TreeNode* leaf = detail::descend(tree.root.get(), x.row(r));
        std::size_t total = 0;
        for (std::size_t c : leaf->class_counts) total += c;
        for (std::size_t k = 0; k < tree.n_classes; ++k)
            out(r, k) = static_cast<double>(leaf->class_counts[k]) / static_cast<double>(total);
    }
    return out;
}

namespace detail {

inline void dump_node(const TreeNode* node, const std::vector<std::string>& feature_names,
                      std::size_t indent, std::ostringstream& out) {
    const std::string pad(indent * 2, ' ');
    std::string counts = "[";
    for (std::size_t k = 0; k < node->class_counts.size(); ++k) {
        if (k) counts += " ";
        counts += std::to_string(node->class_counts[k]);
    }
    counts += "]";
    if (node->is_leaf()) {
        out << pad << "leaf class=" << node->majority_class << " counts=" << counts << "\n";
        return;
    }
    const std::size_t f = node->split->feature_index;
    const std::string fname =
        f < feature_names.size() ? feature_names[f] : "f" + std::to_string(f);
    char thr[40];
    std::snprintf(thr, sizeof(thr), "%g", node->split->threshold);
    out << pad << fname << " <= " << thr << " counts=" << counts << "\n";
    dump_node(node->left.get(), feature_names, indent + 1, out);
    dump_node(node->right.get(), feature_names, indent + 1, out);
}

} // namespace detail

/// Indented text rendering for inspection.
inline std::string dump_tree(const DecisionTree& tree,
                             const std::vector<std::string>& feature_names = {}) {
    std::ostringstream out;
    detail::dump_node(tree.root.get(), feature_names, 0, out);
    return out.str();
}

} // namespace care2vec

#endif // CARE2VEC_TREE_HPP
