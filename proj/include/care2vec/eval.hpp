#ifndef CARE2VEC_EVAL_HPP
#define CARE2VEC_EVAL_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "care2vec/dataset.hpp"
#include "care2vec/errors.hpp"
#include "care2vec/rng.hpp"

namespace care2vec {

/// Partition of row indices into k folds: seeded shuffle, then
/// contiguous chunks. Sizes differ by at most one.
struct FoldAssignment {
    std::size_t k = 0;
    std::vector<std::size_t> fold_of;  // row index -> fold id
    std::uint64_t seed = 0;

    std::vector<std::vector<std::size_t>> fold_indices() const {
        std::vector<std::vector<std::size_t>> folds(k);
        for (std::size_t i = 0; i < fold_of.size(); ++i) folds[fold_of[i]].push_back(i);
        return folds;  // ascending row order within each fold
    }
};

inline FoldAssignment kfold_split(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k < 2 || k > n)
        throw InvalidK("kfold_split: k=" + std::to_string(k) + " outside [2, " +
                       std::to_string(n) + "]");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);

    FoldAssignment fa;
    fa.k = k;
    fa.seed = seed;
    fa.fold_of.resize(n);
    const std::size_t base = n / k;
    const std::size_t extra = n % k;  // first `extra` folds get one more row
    std::size_t pos = 0;
    for (std::size_t f = 0; f < k; ++f) {
        const std::size_t size = base + (f < extra ? 1 : 0);
        for (std::size_t i = 0; i < size; ++i) fa.fold_of[order[pos++]] = f;
    }
    return fa;
}

inline double accuracy(const std::vector<int>& predicted, const std::vector<int>& actual) {
    if (predicted.size() != actual.size() || predicted.empty())
        throw LengthMismatch("accuracy: vectors must be equal-length and non-empty");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i)
        if (predicted[i] == actual[i]) ++hits;
    return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

struct RocCurve {
    std::vector<std::pair<double, double>> points;  // (fpr, tpr), (0,0) .. (1,1)
    double auc = 0.0;
};

/// ROC by descending-score sweep with tied scores advanced as one
/// group, AUC by the trapezoidal rule. With ties grouped this equals
/// the pair-ranking statistic (concordant + tied/2) / (P*N).
inline RocCurve roc_auc(const std::vector<double>& scores, const std::vector<int>& labels) {
    if (scores.size() != labels.size() || scores.empty())
        throw LengthMismatch("roc_auc: scores and labels must be equal-length and non-empty");
    std::size_t n_pos = 0, n_neg = 0;
    for (int y : labels) (y ? n_pos : n_neg)++;
    if (n_pos == 0 || n_neg == 0)
        throw DegenerateLabels("roc_auc: need at least one positive and one negative label");

    std::vector<std::size_t> idx(scores.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    RocCurve curve;
    curve.points.emplace_back(0.0, 0.0);
    double auc = 0.0;
    std::size_t tp = 0, fp = 0;
    std::size_t i = 0;
    while (i < idx.size()) {
        const double s = scores[idx[i]];
        std::size_t group_pos = 0, group_neg = 0;
        while (i < idx.size() && scores[idx[i]] == s) {
            (labels[idx[i]] ? group_pos : group_neg)++;
            ++i;
        }
        const double fpr0 = static_cast<double>(fp) / static_cast<double>(n_neg);
        const double tpr0 = static_cast<double>(tp) / static_cast<double>(n_pos);
        tp += group_pos;
        fp += group_neg;
        const double fpr1 = static_cast<double>(fp) / static_cast<double>(n_neg);
        const double tpr1 = static_cast<double>(tp) / static_cast<double>(n_pos);
        auc += (fpr1 - fpr0) * (tpr0 + tpr1) / 2.0;
        curve.points.emplace_back(fpr1, tpr1);
    }
    curve.auc = auc;
    return curve;
}

/// A model fitted inside one CV fold. predict/score take raw
/// (unpreprocessed) rows; whatever preprocessing the recipe fitted is
/// applied internally.
struct FittedModel {
    virtual ~FittedModel() = default;
    virtual std::vector<int> predict(const Dataset& data) const = 0;
    /// Ranking score for the positive class (binary task only).
    virtual std::vector<double> score(const Dataset& data) const {
        throw Error("this model does not produce ranking scores");
    }
};

/// Self-contained fit-then-predict procedure. cross_validate calls
/// fit() once per fold with only that fold's training rows; recipes
/// must do all preprocessing and encoder fitting in here.
struct ModelRecipe {
    virtual ~ModelRecipe() = default;
    virtual std::unique_ptr<FittedModel> fit(const Dataset& train, std::uint64_t seed) const = 0;
    virtual std::string name() const = 0;
    /// key=value descriptor pairs echoed into reports
    virtual std::vector<std::pair<std::string, std::string>> config() const { return {}; }
};

struct EvaluationReport {
    std::string method;
    std::vector<std::pair<std::string, std::string>> config;  // ordered key=value pairs
    std::size_t k = 0;
    std::uint64_t fold_seed = 0;
    std::uint64_t model_seed = 0;
    std::string rng_algorithm;
    std::string leakage = "n/a";

    std::vector<double> fold_accuracy;
    double mean_cv_score = 0.0;
    std::vector<std::optional<double>> fold_auc;  // binary runs; nullopt = undefined fold
    std::optional<double> mean_auc;
    std::vector<RocCurve> fold_roc;  // binary runs; empty curve where AUC is undefined
    std::vector<std::string> annotations;
};

namespace detail {

/// Run fn(0..n-1) on up to `jobs` threads. Results must be written to
/// index-addressed slots by the caller; exceptions are rethrown in
/// index order after all workers finish.
template <typename Fn>
inline void parallel_for(std::size_t n, std::size_t jobs, Fn&& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    const std::size_t workers = std::min(jobs, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace detail

/// k-fold cross-validation: per fold, fit a fresh model on the other
/// k-1 folds and score the held-out fold. Per-fold model seeds derive
/// from model_seed and the fold id, so results do not depend on `jobs`.
/// Binary-scheme datasets also get per-fold ROC/AUC from the model's
/// score output; a held-out fold with a single class reports its AUC as
/// undefined and is excluded from the mean with an annotation.
inline EvaluationReport cross_validate(const ModelRecipe& recipe, const Dataset& data,
                                       const FoldAssignment& folds, std::uint64_t model_seed,
                                       std::size_t jobs = 1) {
    if (folds.fold_of.size() != data.n_rows())
        throw DimensionMismatch("cross_validate: fold assignment does not match dataset");

    const auto fold_rows = folds.fold_indices();
    const bool binary = data.scheme == LabelScheme::Binary;
    const Rng seed_root(model_seed);

    EvaluationReport report;
    report.method = recipe.name();
    report.config = recipe.config();
    report.k = folds.k;
    report.fold_seed = folds.seed;
    report.model_seed = model_seed;
    report.rng_algorithm = Rng::algorithm_id();
    report.fold_accuracy.resize(folds.k);
    if (binary) {
        report.fold_auc.resize(folds.k);
        report.fold_roc.resize(folds.k);
    }
    std::vector<std::string> fold_notes(folds.k);

    detail::parallel_for(folds.k, jobs, [&](std::size_t f) {
        try {
            std::vector<std::size_t> train_rows;
            train_rows.reserve(data.n_rows() - fold_rows[f].size());
            for (std::size_t i = 0; i < data.n_rows(); ++i)
                if (folds.fold_of[i] != f) train_rows.push_back(i);

            const Dataset train = select_rows(data, train_rows);
            const Dataset test = select_rows(data, fold_rows[f]);

            const std::unique_ptr<FittedModel> model =
                recipe.fit(train, seed_root.child(f).seed());
            report.fold_accuracy[f] = accuracy(model->predict(test), test.labels);

            if (binary) {
                const bool has_pos = std::find(test.labels.begin(), test.labels.end(), 1) !=
                                     test.labels.end();
                const bool has_neg = std::find(test.labels.begin(), test.labels.end(), 0) !=
                                     test.labels.end();
                if (has_pos && has_neg) {
                    RocCurve curve = roc_auc(model->score(test), test.labels);
                    report.fold_auc[f] = curve.auc;
                    report.fold_roc[f] = std::move(curve);
                } else {
                    fold_notes[f] = "fold " + std::to_string(f + 1) +
                                    ": AUC undefined (single class in held-out fold)";
                }
            }
        } catch (const Error& e) {
            throw Error("fold " + std::to_string(f + 1) + ": " + e.what());
        }
    });

    report.mean_cv_score =
        std::accumulate(report.fold_accuracy.begin(), report.fold_accuracy.end(), 0.0) /
        static_cast<double>(folds.k);
    if (binary) {
        double sum = 0.0;
        std::size_t defined = 0;
        for (const auto& a : report.fold_auc)
            if (a) {
                sum += *a;
                ++defined;
            }
        if (defined > 0) report.mean_auc = sum / static_cast<double>(defined);
    }
    for (const std::string& note : fold_notes)
        if (!note.empty()) report.annotations.push_back(note);
    return report;
}

} // namespace care2vec

#endif // CARE2VEC_EVAL_HPP
