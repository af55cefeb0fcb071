#ifndef CARE2VEC_NEURAL_HPP
#define CARE2VEC_NEURAL_HPP

#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "care2vec/errors.hpp"
#include "care2vec/matrix.hpp"
#include "care2vec/rng.hpp"

namespace care2vec {

enum class Activation { ReLU, Sigmoid, Softmax, Linear };
enum class Loss { CategoricalCrossEntropy, BinaryCrossEntropy, MeanSquaredError };
enum class OptimizerKind { SGD, Adam };

inline const char* activation_name(Activation a) {
    switch (a) {
        case Activation::ReLU: return "relu";
        case Activation::Sigmoid: return "sigmoid";
        case Activation::Softmax: return "softmax";
        case Activation::Linear: return "linear";
    }
    return "?";
}

inline const char* loss_name(Loss l) {
    switch (l) {
        case Loss::CategoricalCrossEntropy: return "categorical_cross_entropy";
        case Loss::BinaryCrossEntropy: return "binary_cross_entropy";
        case Loss::MeanSquaredError: return "mean_squared_error";
    }
    return "?";
}

struct LayerSpec {
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
    Activation activation = Activation::Linear;
};

struct NetworkSpec {
    std::vector<LayerSpec> layers;

    std::size_t input_dim() const { return layers.front().in_dim; }
    std::size_t output_dim() const { return layers.back().out_dim; }

    void validate() const {
        if (layers.empty()) throw Error("NetworkSpec: no layers");
        for (std::size_t i = 0; i < layers.size(); ++i) {
            if (layers[i].in_dim < 1 || layers[i].out_dim < 1)
                throw Error("NetworkSpec: layer " + std::to_string(i) + " has zero dimension");
            if (i + 1 < layers.size() && layers[i].out_dim != layers[i + 1].in_dim)
                throw Error("NetworkSpec: layer " + std::to_string(i) + " out_dim " +
                            std::to_string(layers[i].out_dim) + " != layer " +
                            std::to_string(i + 1) + " in_dim " +
                            std::to_string(layers[i + 1].in_dim));
            if (layers[i].activation == Activation::Softmax && i + 1 != layers.size())
                throw Error("NetworkSpec: softmax is only allowed on the final layer");
        }
    }

    std::string describe() const {
        std::string s = std::to_string(input_dim());
        for (const LayerSpec& l : layers)
            s += "->" + std::to_string(l.out_dim) + "(" + activation_name(l.activation) + ")";
        return s;
    }
};

/// Per-layer weights W (out_dim x in_dim) and bias b (out_dim).
struct LayerParams {
    Matrix w;
    std::vector<double> b;

    bool operator==(const LayerParams& o) const { return w == o.w && b == o.b; }
};

struct NetworkParams {
    std::vector<LayerParams> layers;

    bool all_finite() const {
        for (const LayerParams& l : layers) {
            if (!l.w.all_finite()) return false;
            for (double v : l.b)
                if (!std::isfinite(v)) return false;
        }
        return true;
    }

    bool operator==(const NetworkParams& o) const { return layers == o.layers; }
};

using Gradients = NetworkParams;

/// Glorot-uniform weights, zero biases; one child RNG stream per layer.
inline NetworkParams init_params(const NetworkSpec& spec, const Rng& rng) {
    spec.validate();
    NetworkParams p;
    p.layers.reserve(spec.layers.size());
    for (std::size_t i = 0; i < spec.layers.size(); ++i) {
        Rng layer_rng = rng.child(i);
        LayerParams lp;
        lp.w = glorot_uniform(layer_rng, spec.layers[i].in_dim, spec.layers[i].out_dim);
        lp.b.assign(spec.layers[i].out_dim, 0.0);
        p.layers.push_back(std::move(lp));
    }
    return p;
}

namespace detail {

inline void apply_activation(Activation act, Matrix& z) {
    switch (act) {
        case Activation::Linear:
            break;
        case Activation::ReLU:
            for (double& v : z.data()) v = v > 0.0 ? v : 0.0;
            break;
        case Activation::Sigmoid:
            for (double& v : z.data()) v = 1.0 / (1.0 + std::exp(-v));
            break;
        case Activation::Softmax:
            for (std::size_t r = 0; r < z.rows(); ++r) {
                double* row = z.row(r);
                double mx = row[0];
                for (std::size_t c = 1; c < z.cols(); ++c) mx = std::max(mx, row[c]);
                double sum = 0.0;
                for (std::size_t c = 0; c < z.cols(); ++c) {
                    row[c] = std::exp(row[c] - mx);
                    sum += row[c];
                }
                for (std::size_t c = 0; c < z.cols(); ++c) row[c] /= sum;
            }
            break;
    }
}

// derivative of the activation expressed through its own output
inline double activation_deriv_from_output(Activation act, double a) {
    switch (act) {
        case Activation::Linear: return 1.0;
        case Activation::ReLU: return a > 0.0 ? 1.0 : 0.0;
        case Activation::Sigmoid: return a * (1.0 - a);
        case Activation::Softmax:
            throw Error("softmax gradient is only defined fused with categorical cross-entropy");
    }
    return 0.0;
}

constexpr double kProbClamp = 1e-7;

inline double clamp_prob(double p) {
    if (p < kProbClamp) return kProbClamp;
    if (p > 1.0 - kProbClamp) return 1.0 - kProbClamp;
    return p;
}

} // namespace detail

/// Activations of every layer; [0] is the input batch, back() the
/// network output. ReLU/sigmoid derivatives are recovered from the
/// stored outputs, so pre-activations are not kept.
struct ForwardCache {
    std::vector<Matrix> activations;

    const Matrix& output() const { return activations.back(); }
};

inline ForwardCache forward(const NetworkSpec& spec, const NetworkParams& params,
                            const Matrix& x) {
    if (x.cols() != spec.input_dim())
        throw DimensionMismatch("forward: input has " + std::to_string(x.cols()) +
                                " columns, network expects " + std::to_string(spec.input_dim()));
    if (params.layers.size() != spec.layers.size())
        throw DimensionMismatch("forward: params/spec layer count mismatch");

    ForwardCache cache;
    cache.activations.reserve(spec.layers.size() + 1);
    cache.activations.push_back(x);
    for (std::size_t l = 0; l < spec.layers.size(); ++l) {
        const LayerParams& lp = params.layers[l];
        Matrix z = matmul_a_bt(cache.activations.back(), lp.w);  // q = W p, batched
        for (std::size_t r = 0; r < z.rows(); ++r) {
            double* row = z.row(r);
            for (std::size_t c = 0; c < z.cols(); ++c) row[c] += lp.b[c];
        }
        detail::apply_activation(spec.layers[l].activation, z);
        cache.activations.push_back(std::move(z));
    }
    return cache;
}

/// Mean loss over the batch. Cross-entropy probabilities are clamped to
/// [1e-7, 1-1e-7]; categorical cross-entropy sums over classes per row,
/// binary cross-entropy and MSE average over output dimensions as well.
inline double loss_value(Loss loss, const Matrix& predictions, const Matrix& targets) {
    if (predictions.rows() != targets.rows() || predictions.cols() != targets.cols())
        throw DimensionMismatch("loss_value: predictions " + detail::shape_str(predictions) +
                                " vs targets " + detail::shape_str(targets));
    const std::size_t n = predictions.rows();
    const std::size_t d = predictions.cols();
    double total = 0.0;
    switch (loss) {
        case Loss::CategoricalCrossEntropy:
            for (std::size_t i = 0; i < predictions.size(); ++i) {
                const double y = targets.data()[i];
                if (y != 0.0)
                    total -= y * std::log(detail::clamp_prob(predictions.data()[i]));
            }
            return total / static_cast<double>(n);
        case Loss::BinaryCrossEntropy:
            for (std::size_t i = 0; i < predictions.size(); ++i) {
                const double p = detail::clamp_prob(predictions.data()[i]);
                const double y = targets.data()[i];
                total -= y * std::log(p) + (1.0 - y) * std::log(1.0 - p);
            }
            return total / static_cast<double>(n * d);
        case Loss::MeanSquaredError:
            for (std::size_t i = 0; i < predictions.size(); ++i) {
                const double e = predictions.data()[i] - targets.data()[i];
                total += e * e;
            }
            return total / static_cast<double>(n * d);
    }
    throw Error("loss_value: unknown loss");
}

/// Analytic gradients of the mean batch loss w.r.t. every weight and
/// bias. Softmax+categorical-cross-entropy and sigmoid+binary-cross-
/// entropy collapse to (p - y) / batch at the output; those pairings
/// are required, the other losses chain through the activation
/// derivative.
inline Gradients backward(const NetworkSpec& spec, const NetworkParams& params,
                          const ForwardCache& cache, const Matrix& targets, Loss loss) {
    const std::size_t n_layers = spec.layers.size();
    if (cache.activations.size() != n_layers + 1)
        throw DimensionMismatch("backward: cache does not match the network");
    const Matrix& out = cache.output();
    if (out.rows() != targets.rows() || out.cols() != targets.cols())
        throw DimensionMismatch("backward: output " + detail::shape_str(out) + " vs targets " +
                                detail::shape_str(targets));

    const double batch = static_cast<double>(out.rows());
    const Activation final_act = spec.layers.back().activation;

    // delta = dL/dq at the output layer
    Matrix delta(out.rows(), out.cols());
    if (loss == Loss::CategoricalCrossEntropy) {
        if (final_act != Activation::Softmax)
            throw Error("categorical cross-entropy requires a softmax output layer");
        for (std::size_t i = 0; i < out.size(); ++i)
            delta.data()[i] = (out.data()[i] - targets.data()[i]) / batch;
    } else if (loss == Loss::BinaryCrossEntropy) {
        if (final_act != Activation::Sigmoid)
            throw Error("binary cross-entropy requires a sigmoid output layer");
        const double scale = batch * static_cast<double>(out.cols());
        for (std::size_t i = 0; i < out.size(); ++i)
            delta.data()[i] = (out.data()[i] - targets.data()[i]) / scale;
    } else {  // MSE through the output activation
        const double scale = batch * static_cast<double>(out.cols());
        for (std::size_t i = 0; i < out.size(); ++i) {
            const double da = 2.0 * (out.data()[i] - targets.data()[i]) / scale;
            delta.data()[i] = da * detail::activation_deriv_from_output(final_act, out.data()[i]);
        }
    }

    Gradients grads;
    grads.layers.resize(n_layers);
    for (std::size_t l = n_layers; l-- > 0;) {
        const Matrix& input = cache.activations[l];
        grads.layers[l].w = matmul_at_b(delta, input);  // (out x in)
        grads.layers[l].b.assign(spec.layers[l].out_dim, 0.0);
        for (std::size_t r = 0; r < delta.rows(); ++r) {
            const double* row = delta.row(r);
            for (std::size_t c = 0; c < delta.cols(); ++c) grads.layers[l].b[c] += row[c];
        }
        if (l > 0) {
            Matrix prev = matmul(delta, params.layers[l].w);  // dL/da for layer l-1
            const Activation act = spec.layers[l - 1].activation;
            for (std::size_t i = 0; i < prev.size(); ++i)
                prev.data()[i] *=
                    detail::activation_deriv_from_output(act, cache.activations[l].data()[i]);
            delta = std::move(prev);
        }
    }
    return grads;
}

struct TrainConfig {
    Loss loss = Loss::MeanSquaredError;
    OptimizerKind optimizer = OptimizerKind::Adam;
    double learning_rate = 1e-3;
    std::size_t epochs = 1;
    std::size_t batch_size = 8;
    std::uint64_t seed = 0;

    void validate(std::size_t n_rows) const {
        if (!(learning_rate > 0.0)) throw Error("TrainConfig: learning_rate must be > 0");
        if (epochs < 1) throw Error("TrainConfig: epochs must be >= 1");
        if (batch_size < 1 || batch_size > n_rows)
            throw Error("TrainConfig: batch_size must be in [1, n_rows]");
    }
};

struct TrainResult {
    NetworkParams params;
    std::vector<double> loss_history;  // one mean epoch loss per epoch
};

namespace detail {

// Adam moment buffers for one parameter tensor
struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
};

inline void adam_step(std::vector<double>& w, const std::vector<double>& g, AdamState& st,
                      double lr, std::size_t t) {
    constexpr double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
    const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(t));
    const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(t));
    for (std::size_t i = 0; i < w.size(); ++i) {
        st.m[i] = beta1 * st.m[i] + (1.0 - beta1) * g[i];
        st.v[i] = beta2 * st.v[i] + (1.0 - beta2) * g[i] * g[i];
        w[i] -= lr * (st.m[i] / bc1) / (std::sqrt(st.v[i] / bc2) + eps);
    }
}

inline void sgd_step(std::vector<double>& w, const std::vector<double>& g, double lr) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= lr * g[i];
}

} // namespace detail

/// Deterministic mini-batch training: initialization, per-epoch sample
/// order and batching are all derived from config.seed. Throws
/// NonFiniteLoss naming the epoch if the loss leaves the finite range.
inline TrainResult train(const NetworkSpec& spec, const TrainConfig& config, const Matrix& x,
                         const Matrix& y) {
    spec.validate();
    config.validate(x.rows());
    if (x.rows() != y.rows())
        throw DimensionMismatch("train: x has " + std::to_string(x.rows()) + " rows, y has " +
                                std::to_string(y.rows()));

    Rng root(config.seed);
    NetworkParams params = init_params(spec, root.child(0));

    const std::size_t n = x.rows();
    std::vector<detail::AdamState> adam_w(spec.layers.size()), adam_b(spec.layers.size());
    if (config.optimizer == OptimizerKind::Adam) {
        for (std::size_t l = 0; l < spec.layers.size(); ++l) {
            adam_w[l].m.assign(params.layers[l].w.size(), 0.0);
            adam_w[l].v.assign(params.layers[l].w.size(), 0.0);
            adam_b[l].m.assign(params.layers[l].b.size(), 0.0);
            adam_b[l].v.assign(params.layers[l].b.size(), 0.0);
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    TrainResult result;
    result.loss_history.reserve(config.epochs);
    std::size_t step = 0;
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        Rng shuffle_rng = root.child(1 + epoch);
        shuffle_rng.shuffle(order);

        double epoch_loss = 0.0;
        for (std::size_t start = 0; start < n; start += config.batch_size) {
            const std::size_t end = std::min(n, start + config.batch_size);
            std::vector<std::size_t> idx(order.begin() + static_cast<std::ptrdiff_t>(start),
                                         order.begin() + static_cast<std::ptrdiff_t>(end));
            const Matrix xb = x.select_rows(idx);
            const Matrix yb = y.select_rows(idx);

            const ForwardCache cache = forward(spec, params, xb);
            const double batch_loss = loss_value(config.loss, cache.output(), yb);
            if (!std::isfinite(batch_loss))
                throw NonFiniteLoss("train: loss became non-finite in epoch " +
                                    std::to_string(epoch + 1));
            epoch_loss += batch_loss * static_cast<double>(idx.size());

            const Gradients grads = backward(spec, params, cache, yb, config.loss);
            ++step;
            for (std::size_t l = 0; l < spec.layers.size(); ++l) {
                if (config.optimizer == OptimizerKind::Adam) {
                    detail::adam_step(params.layers[l].w.data(), grads.layers[l].w.data(),
                                      adam_w[l], config.learning_rate, step);
                    detail::adam_step(params.layers[l].b, grads.layers[l].b, adam_b[l],
                                      config.learning_rate, step);
                } else {
                    detail::sgd_step(params.layers[l].w.data(), grads.layers[l].w.data(),
                                     config.learning_rate);
                    detail::sgd_step(params.layers[l].b, grads.layers[l].b, config.learning_rate);
                }
            }
        }
        result.loss_history.push_back(epoch_loss / static_cast<double>(n));
    }
    result.params = std::move(params);
    return result;
}

struct GradCheckReport {
    double max_rel_error = 0.0;
    std::size_t entries_checked = 0;
    std::size_t entries_skipped_kink = 0;  // ReLU boundary crossed by the probe step
    double tolerance = 0.0;
    bool pass = false;
};

namespace detail {

inline bool relu_masks_equal(const NetworkSpec& spec, const ForwardCache& a,
                             const ForwardCache& b) {
    for (std::size_t l = 0; l < spec.layers.size(); ++l) {
        if (spec.layers[l].activation != Activation::ReLU) continue;
        const Matrix& ma = a.activations[l + 1];
        const Matrix& mb = b.activations[l + 1];
        for (std::size_t i = 0; i < ma.size(); ++i)
            if ((ma.data()[i] > 0.0) != (mb.data()[i] > 0.0)) return false;
    }
    return true;
}

} // namespace detail

/// Compare analytic gradients against central finite differences
/// (eps = 1e-5) at a random seeded point. Entries whose probe step
/// crosses a ReLU kink are skipped (the loss is not differentiable
/// there) and counted in the report. max_entries_per_layer = 0 checks
/// every entry.
inline GradCheckReport gradient_check(const NetworkSpec& spec, Loss loss,
                                      std::size_t n_samples, double tolerance,
                                      std::uint64_t seed = 42,
                                      std::size_t max_entries_per_layer = 0) {
    if (!(tolerance > 0.0)) throw Error("gradient_check: tolerance must be > 0");
    spec.validate();
    constexpr double eps = 1e-5;

    Rng rng(seed);
    NetworkParams params = init_params(spec, rng.child(0));

    Rng data_rng = rng.child(1);
    Matrix x(n_samples, spec.input_dim());
    for (double& v : x.data()) v = data_rng.uniform();
    Matrix y(n_samples, spec.output_dim());
    if (loss == Loss::CategoricalCrossEntropy) {
        for (std::size_t r = 0; r < n_samples; ++r)
            y(r, static_cast<std::size_t>(data_rng.bounded(spec.output_dim()))) = 1.0;
    } else if (loss == Loss::BinaryCrossEntropy) {
        for (double& v : y.data()) v = data_rng.bounded(2) ? 1.0 : 0.0;
    } else {
        for (double& v : y.data()) v = data_rng.uniform();
    }

    const ForwardCache cache = forward(spec, params, x);
    const Gradients analytic = backward(spec, params, cache, y, loss);

    GradCheckReport report;
    report.tolerance = tolerance;

    // Relative error with an absolute floor in the denominator: the
    // central difference carries loss-roundoff noise of order
    // eps_machine/(2*eps) ~ 1e-11, so for entries whose true gradient
    // is that small a bare ratio measures noise, not correctness. The
    // floor turns the comparison into |a-n| <= tol*(max + 1e-4), i.e.
    // an absolute tolerance of tol*1e-4 for near-zero gradients.
    constexpr double denom_floor = 1e-4;

    Rng pick_rng = rng.child(2);
    auto check_entry = [&](double& slot, double analytic_g) {
        const double saved = slot;
        slot = saved + eps;
        const ForwardCache cp = forward(spec, params, x);
        const double lp = loss_value(loss, cp.output(), y);
        slot = saved - eps;
        const ForwardCache cm = forward(spec, params, x);
        const double lm = loss_value(loss, cm.output(), y);
        slot = saved;
        if (!detail::relu_masks_equal(spec, cp, cm)) {
            report.entries_skipped_kink++;
            return;
        }
        const double numeric = (lp - lm) / (2.0 * eps);
        const double denom = std::max(std::abs(analytic_g), std::abs(numeric)) + denom_floor;
        report.max_rel_error =
            std::max(report.max_rel_error, std::abs(analytic_g - numeric) / denom);
        report.entries_checked++;
    };

    for (std::size_t l = 0; l < spec.layers.size(); ++l) {
        std::vector<double>& w = params.layers[l].w.data();
        const std::vector<double>& gw = analytic.layers[l].w.data();
        if (max_entries_per_layer == 0 || w.size() <= max_entries_per_layer) {
            for (std::size_t i = 0; i < w.size(); ++i) check_entry(w[i], gw[i]);
        } else {
            for (std::size_t k = 0; k < max_entries_per_layer; ++k) {
                const std::size_t i = static_cast<std::size_t>(pick_rng.bounded(w.size()));
                check_entry(w[i], gw[i]);
            }
        }
        std::vector<double>& b = params.layers[l].b;
        const std::vector<double>& gb = analytic.layers[l].b;
        for (std::size_t i = 0; i < b.size(); ++i) check_entry(b[i], gb[i]);
    }
    report.pass = report.max_rel_error < tolerance;
    return report;
}

inline Matrix one_hot(const std::vector<int>& labels, std::size_t n_classes) {
    Matrix m(labels.size(), n_classes);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0 || static_cast<std::size_t>(labels[i]) >= n_classes)
            throw Error("one_hot: label " + std::to_string(labels[i]) + " out of range");
        m(i, static_cast<std::size_t>(labels[i])) = 1.0;
    }
    return m;
}

/// Row-wise argmax with the lowest index winning exact ties.
inline std::vector<int> argmax_rows(const Matrix& m) {
    std::vector<int> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const double* row = m.row(r);
        std::size_t best = 0;
        for (std::size_t c = 1; c < m.cols(); ++c)
            if (row[c] > row[best]) best = c;
        out[r] = static_cast<int>(best);
    }
    return out;
}

// --- flat text serialization -------------------------------------------
//
//   care2vec-network 1
//   layers <L>
//   layer <idx> <in_dim> <out_dim> <activation>
//   weights  (out_dim rows of in_dim %.17g values, row-major)
//   bias     (out_dim values)
//
// %.17g round-trips doubles exactly.

namespace detail {

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline Activation activation_from_name(const std::string& s) {
    if (s == "relu") return Activation::ReLU;
    if (s == "sigmoid") return Activation::Sigmoid;
    if (s == "softmax") return Activation::Softmax;
    if (s == "linear") return Activation::Linear;
    throw Error("unknown activation '" + s + "'");
}

} // namespace detail

inline void save_params(std::ostream& out, const NetworkSpec& spec,
                        const NetworkParams& params) {
    out << "care2vec-network 1\n";
    out << "layers " << spec.layers.size() << "\n";
    for (std::size_t l = 0; l < spec.layers.size(); ++l) {
        const LayerSpec& ls = spec.layers[l];
        out << "layer " << l << " " << ls.in_dim << " " << ls.out_dim << " "
            << activation_name(ls.activation) << "\n";
        out << "weights\n";
        const Matrix& w = params.layers[l].w;
        for (std::size_t r = 0; r < w.rows(); ++r) {
            for (std::size_t c = 0; c < w.cols(); ++c) {
                if (c) out << " ";
                out << detail::fmt_double(w(r, c));
            }
            out << "\n";
        }
        out << "bias\n";
        for (std::size_t c = 0; c < params.layers[l].b.size(); ++c) {
            if (c) out << " ";
            out << detail::fmt_double(params.layers[l].b[c]);
        }
        out << "\n";
    }
}

inline std::pair<NetworkSpec, NetworkParams> load_params(std::istream& in) {
    std::string word;
    int version = 0;
    in >> word >> version;
    if (word != "care2vec-network" || version != 1)
        throw Error("load_params: not a care2vec-network v1 stream");
    std::size_t n_layers = 0;
    in >> word >> n_layers;
    if (word != "layers") throw Error("load_params: expected 'layers'");

    NetworkSpec spec;
    NetworkParams params;
    for (std::size_t l = 0; l < n_layers; ++l) {
        std::size_t idx = 0, in_dim = 0, out_dim = 0;
        std::string act;
        in >> word >> idx >> in_dim >> out_dim >> act;
        if (word != "layer" || idx != l) throw Error("load_params: malformed layer header");
        spec.layers.push_back({in_dim, out_dim, detail::activation_from_name(act)});

        LayerParams lp;
        in >> word;
        if (word != "weights") throw Error("load_params: expected 'weights'");
        lp.w = Matrix(out_dim, in_dim);
        for (double& v : lp.w.data())
            if (!(in >> v)) throw Error("load_params: truncated weights");
        in >> word;
        if (word != "bias") throw Error("load_params: expected 'bias'");
        lp.b.resize(out_dim);
        for (double& v : lp.b)
            if (!(in >> v)) throw Error("load_params: truncated bias");
        params.layers.push_back(std::move(lp));
    }
    spec.validate();
    return {std::move(spec), std::move(params)};
}

} // namespace care2vec

#endif // CARE2VEC_NEURAL_HPP
