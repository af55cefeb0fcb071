#ifndef CARE2VEC_PIPELINE_HPP
#define CARE2VEC_PIPELINE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "care2vec/autoencoder.hpp"
#include "care2vec/dataset.hpp"
#include "care2vec/errors.hpp"
#include "care2vec/eval.hpp"
#include "care2vec/neural.hpp"
#include "care2vec/tree.hpp"

namespace care2vec {

// Training defaults used throughout the experiments: Adam, learning
// rate 1e-3, batch size 8, 500 epochs for autoencoders and 300 for
// classifiers. All of it sits in TrainConfig, nothing is hard-coded
// into the models.

inline TrainConfig default_ae_train() {
    TrainConfig c;
    c.loss = Loss::MeanSquaredError;
    c.optimizer = OptimizerKind::Adam;
    c.learning_rate = 1e-3;
    c.epochs = 500;
    c.batch_size = 8;
    return c;
}

inline TrainConfig default_classifier_train(LabelScheme task) {
    TrainConfig c;
    c.loss = task == LabelScheme::Binary ? Loss::BinaryCrossEntropy
                                         : Loss::CategoricalCrossEntropy;
    c.optimizer = OptimizerKind::Adam;
    c.learning_rate = 1e-3;
    c.epochs = 300;
    c.batch_size = 8;
    return c;
}

/// Feed-forward classifier head: ReLU hidden layers, then softmax over
/// the classes (multi-class) or a single sigmoid unit whose output
/// doubles as the ROC score (binary).
inline NetworkSpec build_classifier(std::size_t input_dim, std::size_t hidden_nodes,
                                    std::size_t hidden_layers, LabelScheme task,
                                    std::size_t n_classes = 7) {
    NetworkSpec spec;
    std::size_t prev = input_dim;
    for (std::size_t l = 0; l < hidden_layers; ++l) {
        spec.layers.push_back({prev, hidden_nodes, Activation::ReLU});
        prev = hidden_nodes;
    }
    if (task == LabelScheme::Binary)
        spec.layers.push_back({prev, 1, Activation::Sigmoid});
    else
        spec.layers.push_back({prev, n_classes, Activation::Softmax});
    spec.validate();
    return spec;
}

struct Care2VecConfig {
    std::size_t encoding_dim = 32;
    std::size_t dnn_hidden_nodes = 300;
    std::size_t dnn_hidden_layers = 2;
    LabelScheme task = LabelScheme::MultiClass7;
    TrainConfig ae_train = default_ae_train();
    TrainConfig dnn_train = default_classifier_train(LabelScheme::MultiClass7);
    std::uint64_t seed = 0;
    bool extended = false;  // permit values outside the experiment grid

    void validate() const {
        if (!extended) {
            const bool dim_ok = encoding_dim == 4 || encoding_dim == 8 || encoding_dim == 16 ||
                                encoding_dim == 32;
            const bool nodes_ok = dnn_hidden_nodes == 40 || dnn_hidden_nodes == 100 ||
                                  dnn_hidden_nodes == 300;
            const bool layers_ok = dnn_hidden_layers == 1 || dnn_hidden_layers == 2;
            if (!dim_ok || !nodes_ok || !layers_ok)
                throw Error("Care2VecConfig: values outside the experiment grid need the "
                            "extended flag");
        }
        if (ae_train.loss != Loss::MeanSquaredError)
            throw Error("Care2VecConfig: autoencoder stage must train with MSE");
        const Loss want = task == LabelScheme::Binary ? Loss::BinaryCrossEntropy
                                                      : Loss::CategoricalCrossEntropy;
        if (dnn_train.loss != want)
            throw Error("Care2VecConfig: classifier loss does not match the task");
    }
};

inline Care2VecConfig make_care2vec_config(std::size_t dim, std::size_t nodes,
                                           std::size_t layers, LabelScheme task,
                                           std::uint64_t seed) {
    Care2VecConfig cfg;
    cfg.encoding_dim = dim;
    cfg.dnn_hidden_nodes = nodes;
    cfg.dnn_hidden_layers = layers;
    cfg.task = task;
    cfg.dnn_train = default_classifier_train(task);
    cfg.seed = seed;
    return cfg;
}

/// A fitted two-stage model: encoder half of the autoencoder plus the
/// classifier trained on the d-dimensional embeddings. The classifier
/// never sees the raw feature space.
struct TrainedPipeline {
    FittedEncoder encoder;
    NetworkSpec classifier_spec;
    NetworkParams classifier_params;
    PreprocessState preprocess;
    Care2VecConfig config;
};

/// Target matrix for a classifier: one-hot rows for the multi-class
/// task, a single 0/1 column for the binary task.
inline Matrix classifier_targets(const Dataset& data) {
    if (data.scheme == LabelScheme::Binary) {
        Matrix t(data.n_rows(), 1);
        for (std::size_t i = 0; i < data.n_rows(); ++i)
            t(i, 0) = static_cast<double>(data.labels[i]);
        return t;
    }
    return one_hot(data.labels, data.n_classes());
}

/// Stage 1: fit the autoencoder on the training features. The AE seed
/// derives from cfg.seed; the result depends only on (encoding_dim,
/// training rows, ae_train, cfg.seed), never on the classifier head.
inline FittedEncoder care2vec_stage1(const Care2VecConfig& cfg, const Dataset& train_data,
                                     const PreprocessState& preprocess = {}) {
    AutoencoderSpec ae;
    ae.input_dim = train_data.n_features();
    ae.encoding_dim = cfg.encoding_dim;
    try {
        TrainConfig ae_cfg = cfg.ae_train;
        ae_cfg.seed = Rng(cfg.seed).child(0).seed();
        return fit_encoder(ae, train_data.features, ae_cfg, preprocess);
    } catch (const NonFiniteLoss& e) {
        throw NonFiniteLoss(std::string("autoencoder stage: ") + e.what());
    } catch (const Error& e) {
        throw Error(std::string("autoencoder stage: ") + e.what());
    }
}

/// Stage 2: train the classifier head on the encoder's embeddings.
inline TrainedPipeline care2vec_stage2(const Care2VecConfig& cfg, FittedEncoder encoder,
                                       const Dataset& train_data) {
    TrainedPipeline p;
    p.config = cfg;
    p.preprocess = encoder.preprocess;
    p.encoder = std::move(encoder);
    try {
        const Matrix embedded = encode(p.encoder, train_data.features);
        p.classifier_spec =
            build_classifier(cfg.encoding_dim, cfg.dnn_hidden_nodes, cfg.dnn_hidden_layers,
                             cfg.task, train_data.n_classes());
        TrainConfig dnn_cfg = cfg.dnn_train;
        dnn_cfg.seed = Rng(cfg.seed).child(1).seed();
        TrainResult trained =
            train(p.classifier_spec, dnn_cfg, embedded, classifier_targets(train_data));
        p.classifier_params = std::move(trained.params);
    } catch (const NonFiniteLoss& e) {
        throw NonFiniteLoss(std::string("classifier stage: ") + e.what());
    } catch (const Error& e) {
        throw Error(std::string("classifier stage: ") + e.what());
    }
    return p;
}

/// The full two-stage fit. `train_data` must already be preprocessed by
/// the caller (inside the caller's CV fold); both stage seeds derive
/// from cfg.seed.
inline TrainedPipeline fit_care2vec(const Care2VecConfig& cfg, const Dataset& train_data,
                                    const PreprocessState& preprocess = {}) {
    cfg.validate();
    return care2vec_stage2(cfg, care2vec_stage1(cfg, train_data, preprocess), train_data);
}

/// Binary ranking score: the sigmoid output per row.
inline std::vector<double> score(const TrainedPipeline& p, const Matrix& x) {
    if (p.config.task != LabelScheme::Binary)
        throw Error("score: only the binary task produces ranking scores");
    const Matrix emb = encode(p.encoder, x);
    const Matrix out = forward(p.classifier_spec, p.classifier_params, emb).output();
    std::vector<double> s(out.rows());
    for (std::size_t r = 0; r < out.rows(); ++r) s[r] = out(r, 0);
    return s;
}

/// Multi-class: argmax of the softmax row (lowest index on exact
/// ties). Binary: score >= 0.5.
inline std::vector<int> predict(const TrainedPipeline& p, const Matrix& x) {
    if (p.config.task == LabelScheme::Binary) {
        const std::vector<double> s = score(p, x);
        std::vector<int> labels(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) labels[i] = s[i] >= 0.5 ? 1 : 0;
        return labels;
    }
    const Matrix emb = encode(p.encoder, x);
    const Matrix out = forward(p.classifier_spec, p.classifier_params, emb).output();
    return argmax_rows(out);
}

// --- CV recipes ----------------------------------------------------------
//
// Each recipe fits its preprocessing (age scaling) on the fold's
// training rows and applies the same state to anything it later
// predicts on; cross_validate itself never preprocesses.

namespace detail {

inline std::pair<PreprocessState, Dataset> scale_if_possible(const Dataset& train_data) {
    if (!train_data.has_age_column()) return {PreprocessState{}, train_data};
    PreprocessState st = fit_age_scaling(train_data);
    return {st, apply_age_scaling(st, train_data)};
}

} // namespace detail

class TreeRecipe : public ModelRecipe {
public:
    explicit TreeRecipe(SplitCriterion criterion = SplitCriterion::Gini,
                        std::optional<std::size_t> max_depth = std::nullopt,
                        std::size_t min_samples_split = 2)
        : criterion_(criterion), max_depth_(max_depth), min_samples_split_(min_samples_split) {}

    std::unique_ptr<FittedModel> fit(const Dataset& train_data,
                                     std::uint64_t /*seed: growth is deterministic*/) const override {
        auto [st, scaled] = detail::scale_if_possible(train_data);
        auto model = std::make_unique<Model>();
        model->preprocess = st;
        model->tree = fit_tree(scaled.features, scaled.labels, scaled.n_classes(), criterion_,
                               max_depth_, min_samples_split_);
        return model;
    }

    std::string name() const override { return "decision_tree"; }

    std::vector<std::pair<std::string, std::string>> config() const override {
        return {{"criterion", criterion_name(criterion_)},
                {"max_depth", max_depth_ ? std::to_string(*max_depth_) : "unlimited"},
                {"min_samples_split", std::to_string(min_samples_split_)}};
    }

private:
    struct Model : FittedModel {
        PreprocessState preprocess;
        DecisionTree tree;

        std::vector<int> predict(const Dataset& data) const override {
            return predict_tree(tree, apply_age_scaling(preprocess, data).features);
        }

        // positive-class leaf proportion
        std::vector<double> score(const Dataset& data) const override {
            if (tree.n_classes != 2) throw Error("tree score: binary task only");
            const Matrix proba = predict_proba(tree, apply_age_scaling(preprocess, data).features);
            std::vector<double> s(proba.rows());
            for (std::size_t r = 0; r < proba.rows(); ++r) s[r] = proba(r, 1);
            return s;
        }
    };

    SplitCriterion criterion_;
    std::optional<std::size_t> max_depth_;
    std::size_t min_samples_split_;
};

/// Plain feed-forward baseline on the raw (preprocessed) feature space.
class AnnRecipe : public ModelRecipe {
public:
    AnnRecipe(std::size_t hidden_nodes, std::size_t hidden_layers,
              std::optional<TrainConfig> train_override = std::nullopt)
        : hidden_nodes_(hidden_nodes), hidden_layers_(hidden_layers),
          train_override_(train_override) {}

    std::unique_ptr<FittedModel> fit(const Dataset& train_data, std::uint64_t seed) const override {
        auto [st, scaled] = detail::scale_if_possible(train_data);
        TrainConfig cfg =
            train_override_ ? *train_override_ : default_classifier_train(scaled.scheme);
        cfg.loss = scaled.scheme == LabelScheme::Binary ? Loss::BinaryCrossEntropy
                                                        : Loss::CategoricalCrossEntropy;
        cfg.seed = seed;

        auto model = std::make_unique<Model>();
        model->preprocess = st;
        model->task = scaled.scheme;
        model->spec = build_classifier(scaled.n_features(), hidden_nodes_, hidden_layers_,
                                       scaled.scheme, scaled.n_classes());
        model->params =
            train(model->spec, cfg, scaled.features, classifier_targets(scaled)).params;
        return model;
    }

    std::string name() const override { return "ann"; }

    std::vector<std::pair<std::string, std::string>> config() const override {
        return {{"hidden_nodes", std::to_string(hidden_nodes_)},
                {"hidden_layers", std::to_string(hidden_layers_)}};
    }

private:
    struct Model : FittedModel {
        PreprocessState preprocess;
        LabelScheme task = LabelScheme::MultiClass7;
        NetworkSpec spec;
        NetworkParams params;

        std::vector<int> predict(const Dataset& data) const override {
            const Matrix out = outputs(data);
            if (task == LabelScheme::Binary) {
                std::vector<int> labels(out.rows());
                for (std::size_t r = 0; r < out.rows(); ++r) labels[r] = out(r, 0) >= 0.5 ? 1 : 0;
                return labels;
            }
            return argmax_rows(out);
        }

        std::vector<double> score(const Dataset& data) const override {
            if (task != LabelScheme::Binary) throw Error("ann score: binary task only");
            const Matrix out = outputs(data);
            std::vector<double> s(out.rows());
            for (std::size_t r = 0; r < out.rows(); ++r) s[r] = out(r, 0);
            return s;
        }

        Matrix outputs(const Dataset& data) const {
            return forward(spec, params, apply_age_scaling(preprocess, data).features).output();
        }
    };

    std::size_t hidden_nodes_;
    std::size_t hidden_layers_;
    std::optional<TrainConfig> train_override_;
};

/// Per-(encoding_dim, fold seed) store of fitted encoders, shared by
/// grid cells that train the identical stage-1 model: within one grid
/// run every cell sees the same fold assignment, the same per-fold
/// seeds and the same training features (the binary task changes labels
/// only), so the cached encoder is bit-identical to a fresh fit. Purely
/// an optimization; results never depend on whether a cache is used.
class EncoderCache {
public:
    template <typename FitFn>
    FittedEncoder get_or_fit(std::size_t dim, std::uint64_t seed, FitFn&& fit_fn) {
        const std::pair<std::size_t, std::uint64_t> key{dim, seed};
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = store_.find(key);
            if (it != store_.end()) return it->second;
        }
        FittedEncoder enc = fit_fn();
        std::lock_guard<std::mutex> lock(mu_);
        return store_.emplace(key, std::move(enc)).first->second;
    }

private:
    std::mutex mu_;
    std::map<std::pair<std::size_t, std::uint64_t>, FittedEncoder> store_;
};

/// The two-stage method under CV. By default the autoencoder is fitted
/// inside each fold on training rows only; a pre-fitted shared encoder
/// (the deliberately leaky fit-on-all-rows alternative) can be injected
/// for comparison and is flagged in reports.
class Care2VecRecipe : public ModelRecipe {
public:
    explicit Care2VecRecipe(Care2VecConfig base) : base_(std::move(base)) {}

    Care2VecRecipe(Care2VecConfig base, FittedEncoder shared_encoder)
        : base_(std::move(base)), shared_encoder_(std::move(shared_encoder)) {}

    /// Share per-fold encoders with other recipes of the same dim (see
    /// EncoderCache). The cache must outlive the recipe.
    void use_encoder_cache(EncoderCache* cache) { cache_ = cache; }

    std::unique_ptr<FittedModel> fit(const Dataset& train_data, std::uint64_t seed) const override {
        Care2VecConfig cfg = base_;
        cfg.seed = seed;
        cfg.validate();
        auto model = std::make_unique<Model>();
        if (shared_encoder_) {
            // encoder (and its scaling state) fitted elsewhere on all rows
            const Dataset scaled = apply_age_scaling(shared_encoder_->preprocess, train_data);
            model->pipeline = care2vec_stage2(cfg, *shared_encoder_, scaled);
        } else {
            auto [st, scaled] = detail::scale_if_possible(train_data);
            const FittedEncoder encoder =
                cache_ ? cache_->get_or_fit(
                             cfg.encoding_dim, seed,
                             [&] { return care2vec_stage1(cfg, scaled, st); })
                       : care2vec_stage1(cfg, scaled, st);
            model->pipeline = care2vec_stage2(cfg, encoder, scaled);
        }
        return model;
    }

    std::string name() const override { return "care2vec"; }

    std::vector<std::pair<std::string, std::string>> config() const override {
        return {{"encoding_dim", std::to_string(base_.encoding_dim)},
                {"hidden_nodes", std::to_string(base_.dnn_hidden_nodes)},
                {"hidden_layers", std::to_string(base_.dnn_hidden_layers)},
                {"ae_epochs", std::to_string(base_.ae_train.epochs)},
                {"dnn_epochs", std::to_string(base_.dnn_train.epochs)}};
    }

private:
    struct Model : FittedModel {
        TrainedPipeline pipeline;

        std::vector<int> predict(const Dataset& data) const override {
            return care2vec::predict(pipeline,
                                     apply_age_scaling(pipeline.preprocess, data).features);
        }

        std::vector<double> score(const Dataset& data) const override {
            return care2vec::score(pipeline,
                                   apply_age_scaling(pipeline.preprocess, data).features);
        }
    };

    Care2VecConfig base_;
    std::optional<FittedEncoder> shared_encoder_;
    EncoderCache* cache_ = nullptr;  // non-owning
};

// --- experiment grids ----------------------------------------------------

/// Settings shared by every cell of a grid run. Train configs here are
/// templates: the loss is fixed per task at fit time and seeds are
/// derived per fold.
struct GridProtocol {
    std::size_t k = 10;
    std::uint64_t seed = 0;
    bool full_data_encoder = false;  // leaky alternative, recorded in reports
    std::size_t jobs = 1;
    TrainConfig ann_train = default_classifier_train(LabelScheme::MultiClass7);
    TrainConfig ae_train = default_ae_train();
    TrainConfig dnn_train = default_classifier_train(LabelScheme::MultiClass7);
    std::function<void(const struct GridCell&)> on_cell_done;  // progress hook
};

struct GridCell {
    std::string table;   // table1..table4
    std::string method;  // decision_tree | ann | care2vec
    std::size_t dim = 0, nodes = 0, layers = 0;  // 0 = not applicable
    LabelScheme task = LabelScheme::MultiClass7;
    std::optional<EvaluationReport> report;
    std::string failure;  // non-empty if this cell failed
    double seconds = 0.0;

    std::string id() const {
        std::string s = table + "/" + method;
        if (dim) s += "/dim=" + std::to_string(dim);
        if (nodes) s += "/nodes=" + std::to_string(nodes);
        if (layers) s += "/layers=" + std::to_string(layers);
        return s;
    }
};

struct GridResult {
    std::vector<GridCell> cells;

    std::vector<const GridCell*> table(const std::string& name) const {
        std::vector<const GridCell*> out;
        for (const GridCell& c : cells)
            if (c.table == name) out.push_back(&c);
        return out;
    }
};

/// The declared grid:
///   table1: ANN on raw features, nodes in {30,40,50,100,300}, 1 layer
///   table2: Care2Vec, dims {4,8,16,32} x {(40,1),(100,1),(300,1),(300,2)}
///   table3: decision tree (Gini); its summary rows reuse tables 1-2
///   table4: binary task: tree, ANN {40,100,300} x 1 layer,
///           Care2Vec dims {4,8,16,32} with (300 nodes, 1 layer)
inline std::vector<GridCell> declare_grid_cells() {
    std::vector<GridCell> cells;
    for (std::size_t nodes : {30, 40, 50, 100, 300})
        cells.push_back({"table1", "ann", 0, nodes, 1, LabelScheme::MultiClass7, {}, {}});
    for (std::size_t dim : {4, 8, 16, 32})
        for (auto [nodes, layers] :
             std::vector<std::pair<std::size_t, std::size_t>>{{40, 1}, {100, 1}, {300, 1}, {300, 2}})
            cells.push_back(
                {"table2", "care2vec", dim, nodes, layers, LabelScheme::MultiClass7, {}, {}});
    cells.push_back({"table3", "decision_tree", 0, 0, 0, LabelScheme::MultiClass7, {}, {}});
    cells.push_back({"table4", "decision_tree", 0, 0, 0, LabelScheme::Binary, {}, {}});
    for (std::size_t nodes : {40, 100, 300})
        cells.push_back({"table4", "ann", 0, nodes, 1, LabelScheme::Binary, {}, {}});
    for (std::size_t dim : {4, 8, 16, 32})
        cells.push_back({"table4", "care2vec", dim, 300, 1, LabelScheme::Binary, {}, {}});
    return cells;
}

/// Every (architecture, loss) pair trained anywhere in the experiment
/// grids, for gradient verification: ANN baselines on both tasks, all
/// autoencoder dims, and every DNN classifier head.
struct ArchitectureUnderTest {
    std::string label;
    NetworkSpec spec;
    Loss loss;
};

inline std::vector<ArchitectureUnderTest> repo_architectures(std::size_t input_dim = 205) {
    std::vector<ArchitectureUnderTest> archs;
    for (std::size_t nodes : {30, 40, 50, 100, 300})
        archs.push_back({"ann/multi/nodes=" + std::to_string(nodes),
                         build_classifier(input_dim, nodes, 1, LabelScheme::MultiClass7),
                         Loss::CategoricalCrossEntropy});
    for (std::size_t nodes : {40, 100, 300})
        archs.push_back({"ann/binary/nodes=" + std::to_string(nodes),
                         build_classifier(input_dim, nodes, 1, LabelScheme::Binary),
                         Loss::BinaryCrossEntropy});
    for (std::size_t dim : {4, 8, 16, 32}) {
        AutoencoderSpec ae;
        ae.input_dim = input_dim;
        ae.encoding_dim = dim;
        archs.push_back({"autoencoder/dim=" + std::to_string(dim), build_autoencoder(ae),
                         Loss::MeanSquaredError});
    }
    for (std::size_t dim : {4, 8, 16, 32}) {
        for (auto [nodes, layers] :
             std::vector<std::pair<std::size_t, std::size_t>>{{40, 1}, {100, 1}, {300, 1}, {300, 2}})
            archs.push_back({"dnn/multi/dim=" + std::to_string(dim) +
                                 "/nodes=" + std::to_string(nodes) + "/layers=" +
                                 std::to_string(layers),
                             build_classifier(dim, nodes, layers, LabelScheme::MultiClass7),
                             Loss::CategoricalCrossEntropy});
        archs.push_back({"dnn/binary/dim=" + std::to_string(dim) + "/nodes=300/layers=1",
                         build_classifier(dim, 300, 1, LabelScheme::Binary),
                         Loss::BinaryCrossEntropy});
    }
    return archs;
}

/// Run every declared cell under the shared protocol. Per-cell failures
/// are recorded in the cell and the rest of the grid continues. Every
/// cell reuses the same fold assignment and base model seed, so a grid
/// cell equals the corresponding single `run` with the same seed.
inline GridResult run_experiment_grid(const Dataset& data, const GridProtocol& protocol) {
    if (data.scheme != LabelScheme::MultiClass7)
        throw WrongScheme("run_experiment_grid: expects the multi-class dataset");

    const Rng root(protocol.seed);
    const std::uint64_t fold_seed = root.child(0).seed();
    const std::uint64_t model_seed = root.child(1).seed();
    const FoldAssignment folds = kfold_split(data.n_rows(), protocol.k, fold_seed);
    const Dataset binary = to_binary(data);

    // shared leaky encoders, fitted once on all rows, one per dim
    std::vector<std::pair<std::size_t, FittedEncoder>> shared_encoders;
    auto shared_encoder_for = [&](std::size_t dim) -> FittedEncoder {
        for (auto& [d, enc] : shared_encoders)
            if (d == dim) return enc;
        auto [st, scaled] = detail::scale_if_possible(data);
        AutoencoderSpec ae;
        ae.input_dim = data.n_features();
        ae.encoding_dim = dim;
        TrainConfig cfg = protocol.ae_train;
        cfg.seed = Rng(model_seed).child(1000 + dim).seed();
        FittedEncoder enc = fit_encoder(ae, scaled.features, cfg, st);
        shared_encoders.emplace_back(dim, enc);
        return enc;
    };

    EncoderCache fold_encoders;  // shared by per-fold cells of equal dim

    GridResult result;
    result.cells = declare_grid_cells();
    for (GridCell& cell : result.cells) {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const Dataset& cell_data = cell.task == LabelScheme::Binary ? binary : data;
            std::unique_ptr<ModelRecipe> recipe;
            if (cell.method == "decision_tree") {
                recipe = std::make_unique<TreeRecipe>(SplitCriterion::Gini);
            } else if (cell.method == "ann") {
                TrainConfig t = protocol.ann_train;
                recipe = std::make_unique<AnnRecipe>(cell.nodes, cell.layers, t);
            } else {
                Care2VecConfig cfg =
                    make_care2vec_config(cell.dim, cell.nodes, cell.layers, cell.task, 0);
                cfg.ae_train = protocol.ae_train;
                cfg.ae_train.loss = Loss::MeanSquaredError;
                cfg.dnn_train = protocol.dnn_train;
                cfg.dnn_train.loss = cell.task == LabelScheme::Binary
                                         ? Loss::BinaryCrossEntropy
                                         : Loss::CategoricalCrossEntropy;
                if (protocol.full_data_encoder) {
                    recipe = std::make_unique<Care2VecRecipe>(cfg, shared_encoder_for(cell.dim));
                } else {
                    auto c2v = std::make_unique<Care2VecRecipe>(cfg);
                    c2v->use_encoder_cache(&fold_encoders);
                    recipe = std::move(c2v);
                }
            }
            EvaluationReport rep =
                cross_validate(*recipe, cell_data, folds, model_seed, protocol.jobs);
            rep.leakage = cell.method == "care2vec"
                              ? (protocol.full_data_encoder ? "full-data" : "per-fold")
                              : "n/a";
            cell.report = std::move(rep);
        } catch (const std::exception& e) {
            cell.failure = e.what();
        }
        cell.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (protocol.on_cell_done) protocol.on_cell_done(cell);
    }
    return result;
}

} // namespace care2vec

#endif // CARE2VEC_PIPELINE_HPP
