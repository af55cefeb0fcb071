#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "care2vec/dataset.hpp"
#include "care2vec/eval.hpp"
#include "care2vec/rng.hpp"
#include "care2vec/tree.hpp"

using namespace care2vec;

namespace {

// Independent oracle: enumerate every feature and midpoint naively and
// recompute impurities from scratch, with the same tie-break order.
std::optional<SplitCandidate> brute_force_best_split(const Matrix& x, const std::vector<int>& y,
                                                     std::size_t n_classes,
                                                     SplitCriterion criterion) {
    auto impurity_of = [&](const std::vector<std::size_t>& counts) -> double {
        std::size_t total = 0;
        for (std::size_t c : counts) total += c;
        double value = 0.0;
        if (criterion == SplitCriterion::Gini) {
            double ssq = 0.0;
            for (std::size_t c : counts) {
                const double p = double(c) / double(total);
                ssq += p * p;
            }
            value = 1.0 - ssq;
        } else {
            for (std::size_t c : counts) {
                if (!c) continue;
                const double p = double(c) / double(total);
                value -= p * std::log(p);
            }
        }
        return value;
    };

    const std::size_t n = x.rows();
    std::vector<std::size_t> parent(n_classes, 0);
    for (int label : y) parent[std::size_t(label)]++;
    const double parent_imp = impurity_of(parent);

    std::optional<SplitCandidate> best;
    for (std::size_t f = 0; f < x.cols(); ++f) {
        std::vector<double> values;
        for (std::size_t r = 0; r < n; ++r) values.push_back(x(r, f));
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (std::size_t t = 0; t + 1 < values.size(); ++t) {
            const double threshold = (values[t] + values[t + 1]) / 2.0;
            std::vector<std::size_t> left(n_classes, 0), right(n_classes, 0);
            std::size_t n_left = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (x(r, f) <= threshold) {
                    left[std::size_t(y[r])]++;
                    n_left++;
                } else {
                    right[std::size_t(y[r])]++;
                }
            }
            if (n_left == 0 || n_left == n) continue;
            const double weighted = (double(n_left) * impurity_of(left) +
                                     double(n - n_left) * impurity_of(right)) /
                                    double(n);
            const double decrease = parent_imp - weighted;
            if (decrease > 0.0 && (!best || decrease > best->impurity_decrease))
                best = SplitCandidate{f, threshold, decrease};
        }
    }
    return best;
}

void walk(const TreeNode* node, const std::function<void(const TreeNode*)>& fn) {
    fn(node);
    if (!node->is_leaf()) {
        walk(node->left.get(), fn);
        walk(node->right.get(), fn);
    }
}

} // namespace

TEST_CASE("gini of pure and symmetric nodes", "[tree]") {
    CHECK(gini_impurity({5, 0, 0}) == 0.0);
    CHECK(gini_impurity({1, 1}) == 0.5);
}

TEST_CASE("gini of the published class counts", "[tree]") {
    // 1 - (2^2+7^2+1^2+12^2+3^2+29^2+16^2)/70^2 = 1 - 1304/4900
    const double expected = 1.0 - 1304.0 / 4900.0;
    CHECK(gini_impurity({2, 7, 1, 12, 3, 29, 16}) == Catch::Approx(expected).epsilon(1e-15));
    CHECK(expected == Catch::Approx(0.7338775510204082).epsilon(1e-12));
}

TEST_CASE("impurity of an empty node is an error", "[tree]") {
    REQUIRE_THROWS_AS(gini_impurity({0, 0}), EmptyNode);
    REQUIRE_THROWS_AS(entropy_impurity({0}), EmptyNode);
}

TEST_CASE("entropy impurity closed forms", "[tree]") {
    CHECK(entropy_impurity({1, 1}) == Catch::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(entropy_impurity({4, 0}) == 0.0);
}

TEST_CASE("best split on a 1-d staircase", "[tree]") {
    const Matrix x = Matrix::from_rows({{1}, {2}, {3}, {4}});
    const std::vector<int> y = {0, 0, 1, 1};
    const auto split = best_split(x, y, 2, SplitCriterion::Gini);
    REQUIRE(split.has_value());
    CHECK(split->feature_index == 0);
    CHECK(split->threshold == 2.5);
    CHECK(split->impurity_decrease == Catch::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("pure node yields no candidate", "[tree]") {
    const Matrix x = Matrix::from_rows({{1}, {2}, {3}});
    CHECK(!best_split(x, {1, 1, 1}, 2, SplitCriterion::Gini).has_value());
}

TEST_CASE("ties break to the lowest feature index", "[tree]") {
    // feature 1 duplicates feature 0, so both give the same decrease
    const Matrix x = Matrix::from_rows({{1, 1}, {2, 2}, {3, 3}, {4, 4}});
    const std::vector<int> y = {0, 0, 1, 1};
    const auto split = best_split(x, y, 2, SplitCriterion::Gini);
    REQUIRE(split.has_value());
    CHECK(split->feature_index == 0);
}

TEST_CASE("ties break to the lowest threshold within a feature", "[tree]") {
    // thresholds 1.5 and 3.5 both give decrease 1/6
    const Matrix x = Matrix::from_rows({{1}, {2}, {3}, {4}});
    const std::vector<int> y = {0, 1, 1, 0};
    const auto split = best_split(x, y, 2, SplitCriterion::Gini);
    REQUIRE(split.has_value());
    CHECK(split->threshold == 1.5);
}

TEST_CASE("best_split matches brute-force enumeration", "[tree]") {
    Rng rng(404);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 2 + rng.bounded(7);   // 2..8
        const std::size_t cols = 1 + rng.bounded(3);   // 1..3
        const std::size_t n_classes = 2 + rng.bounded(2);
        Matrix x(rows, cols);
        // small integer grid to force plenty of ties
        for (double& v : x.data()) v = double(rng.bounded(4));
        std::vector<int> y(rows);
        for (auto& label : y) label = int(rng.bounded(n_classes));
        const auto criterion =
            rng.bounded(2) ? SplitCriterion::Gini : SplitCriterion::CrossEntropy;

        const auto got = best_split(x, y, n_classes, criterion);
        const auto want = brute_force_best_split(x, y, n_classes, criterion);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(got->feature_index == want->feature_index);
            CHECK(got->threshold == want->threshold);
            CHECK(got->impurity_decrease == Catch::Approx(want->impurity_decrease).margin(1e-12));
        }
    }
}

TEST_CASE("unlimited depth fits distinct rows perfectly", "[tree]") {
    Rng rng(88);
    Matrix x(24, 4);
    for (std::size_t r = 0; r < 24; ++r)
        for (std::size_t c = 0; c < 4; ++c) x(r, c) = double(r * 4 + c) / 7.0;  // all distinct
    std::vector<int> y(24);
    for (auto& label : y) label = int(rng.bounded(5));
    const DecisionTree tree = fit_tree(x, y, 5);
    CHECK(predict_tree(tree, x) == y);
    CHECK(accuracy(predict_tree(tree, x), y) == 1.0);
}

TEST_CASE("every internal node strictly decreases impurity", "[tree]") {
    Rng rng(99);
    Matrix x(30, 3);
    for (double& v : x.data()) v = double(rng.bounded(5));
    std::vector<int> y(30);
    for (auto& label : y) label = int(rng.bounded(3));
    const DecisionTree tree = fit_tree(x, y, 3);
    walk(tree.root.get(), [](const TreeNode* node) {
        if (!node->is_leaf()) CHECK(node->split->impurity_decrease > 0.0);
    });
}

TEST_CASE("depth-0 tree predicts the global majority", "[tree]") {
    const Dataset data = load_scadi("data/scadi_synthetic.csv");
    const DecisionTree stump =
        fit_tree(data.features, data.labels, 7, SplitCriterion::Gini, 0);
    REQUIRE(stump.root->is_leaf());
    CHECK(stump.root->majority_class == 5);  // Class6, the modal class
    for (int label : predict_tree(stump, data.features)) CHECK(label == 5);
}

TEST_CASE("single-row dataset gives a leaf with that class", "[tree]") {
    const Matrix x = Matrix::from_rows({{3.0, 1.0}});
    const DecisionTree tree = fit_tree(x, {4}, 7);
    REQUIRE(tree.root->is_leaf());
    CHECK(tree.root->majority_class == 4);
}

TEST_CASE("probability rows sum to one", "[tree]") {
    Rng rng(12);
    Matrix x(20, 2);
    for (double& v : x.data()) v = rng.uniform();
    std::vector<int> y(20);
    for (auto& label : y) label = int(rng.bounded(3));
    const DecisionTree tree = fit_tree(x, y, 3);
    const Matrix proba = predict_proba(tree, x);
    for (std::size_t r = 0; r < proba.rows(); ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < 3; ++c) sum += proba(r, c);
        REQUIRE(std::abs(sum - 1.0) < 1e-12);
    }
}

TEST_CASE("fitting is deterministic", "[tree]") {
    Rng rng(55);
    Matrix x(25, 3);
    for (double& v : x.data()) v = double(rng.bounded(3));
    std::vector<int> y(25);
    for (auto& label : y) label = int(rng.bounded(4));
    const DecisionTree a = fit_tree(x, y, 4);
    const DecisionTree b = fit_tree(x, y, 4);
    CHECK(dump_tree(a) == dump_tree(b));
}

TEST_CASE("dump shows feature names, thresholds and counts", "[tree]") {
    const Matrix x = Matrix::from_rows({{1}, {2}, {3}, {4}});
    const DecisionTree tree = fit_tree(x, {0, 0, 1, 1}, 2);
    const std::string dump = dump_tree(tree, {"age"});
    CHECK(dump.find("age <= 2.5") != std::string::npos);
    CHECK(dump.find("counts=[2 2]") != std::string::npos);
    CHECK(dump.find("leaf") != std::string::npos);
}

TEST_CASE("prediction rejects mismatched feature counts", "[tree]") {
    const Matrix x = Matrix::from_rows({{1, 2}, {3, 4}});
    const DecisionTree tree = fit_tree(x, {0, 1}, 2);
    REQUIRE_THROWS_AS(predict_tree(tree, Matrix(1, 3)), DimensionMismatch);
    REQUIRE_THROWS_AS(fit_tree(Matrix(2, 2), {0, 1, 1}, 2), DimensionMismatch);
}
