#ifndef CARE2VEC_AUTOENCODER_HPP
#define CARE2VEC_AUTOENCODER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "care2vec/dataset.hpp"
#include "care2vec/errors.hpp"
#include "care2vec/neural.hpp"

namespace care2vec {

/// Symmetric autoencoder around a d-dimensional bottleneck:
/// 205 -> 200 -> 100 -> 50 -> d -> 50 -> 100 -> 200 -> 205.
/// Hidden layers are ReLU, the bottleneck is linear (unconstrained code
/// space) and the reconstruction layer is sigmoid since every
/// preprocessed input lies in [0, 1].
struct AutoencoderSpec {
    std::size_t input_dim = 205;
    std::vector<std::size_t> hidden_dims = {200, 100, 50};
    std::size_t encoding_dim = 32;

    bool standard_grid_dim() const {
        return encoding_dim == 4 || encoding_dim == 8 || encoding_dim == 16 ||
               encoding_dim == 32;
    }

    std::size_t encoder_layer_count() const { return hidden_dims.size() + 1; }
};

inline NetworkSpec build_autoencoder(const AutoencoderSpec& ae) {
    if (ae.encoding_dim < 1 || ae.encoding_dim >= ae.hidden_dims.back())
        throw InvalidDim("build_autoencoder: encoding_dim " + std::to_string(ae.encoding_dim) +
                         " must be in [1, " + std::to_string(ae.hidden_dims.back()) + ")");
    NetworkSpec spec;
    std::size_t prev = ae.input_dim;
    for (std::size_t h : ae.hidden_dims) {
        spec.layers.push_back({prev, h, Activation::ReLU});
        prev = h;
    }
    spec.layers.push_back({prev, ae.encoding_dim, Activation::Linear});
    prev = ae.encoding_dim;
    for (std::size_t i = ae.hidden_dims.size(); i-- > 0;) {
        spec.layers.push_back({prev, ae.hidden_dims[i], Activation::ReLU});
        prev = ae.hidden_dims[i];
    }
    spec.layers.push_back({prev, ae.input_dim, Activation::Sigmoid});
    spec.validate();
    return spec;
}

inline NetworkSpec build_autoencoder(std::size_t encoding_dim) {
    AutoencoderSpec ae;
    ae.encoding_dim = encoding_dim;
    return build_autoencoder(ae);
}

/// Encoder half of a trained autoencoder, usable as an embedding
/// function. Carries the reconstruction-loss history for diagnostics
/// and the preprocessing state that was active when it was fitted.
struct FittedEncoder {
    NetworkSpec spec;          // encoder layers only
    NetworkParams params;
    std::size_t encoding_dim = 0;
    PreprocessState preprocess;
    std::vector<double> reconstruction_loss_history;
};

/// Train the full autoencoder on train_x against itself (MSE) and keep
/// the encoder half. config.loss must be MeanSquaredError.
inline FittedEncoder fit_encoder(const AutoencoderSpec& ae, const Matrix& train_x,
                                 const TrainConfig& config,
                                 const PreprocessState& preprocess = {}) {
    if (train_x.cols() != ae.input_dim)
        throw DimensionMismatch("fit_encoder: train_x has " + std::to_string(train_x.cols()) +
                                " columns, autoencoder expects " + std::to_string(ae.input_dim));
    if (config.loss != Loss::MeanSquaredError)
        throw Error("fit_encoder: autoencoders train with MeanSquaredError");

    const NetworkSpec full = build_autoencoder(ae);
    TrainResult trained = train(full, config, train_x, train_x);

    FittedEncoder enc;
    const std::size_t n_enc = ae.encoder_layer_count();
    enc.spec.layers.assign(full.layers.begin(), full.layers.begin() + static_cast<std::ptrdiff_t>(n_enc));
    enc.params.layers.assign(trained.params.layers.begin(),
                             trained.params.layers.begin() + static_cast<std::ptrdiff_t>(n_enc));
    enc.encoding_dim = ae.encoding_dim;
    enc.preprocess = preprocess;
    enc.reconstruction_loss_history = std::move(trained.loss_history);
    return enc;
}

/// Embed rows of x; output is [x.rows() x encoding_dim] and equals the
/// bottleneck activations of the full autoencoder forward pass.
inline Matrix encode(const FittedEncoder& enc, const Matrix& x) {
    return forward(enc.spec, enc.params, x).output();
}

/// Encoder archive: encoding-dim and preprocessing metadata followed by
/// the network parameter format.
inline void save_encoder(std::ostream& out, const FittedEncoder& enc) {
    out << "care2vec-encoder 1\n";
    out << "encoding_dim " << enc.encoding_dim << "\n";
    out << "age_scaling " << (enc.preprocess.applied ? 1 : 0) << " "
        << detail::fmt_double(enc.preprocess.age_min) << " "
        << detail::fmt_double(enc.preprocess.age_max) << "\n";
    save_params(out, enc.spec, enc.params);
}

inline FittedEncoder load_encoder(std::istream& in) {
    std::string word;
    int version = 0;
    in >> word >> version;
    if (word != "care2vec-encoder" || version != 1)
        throw Error("load_encoder: not a care2vec-encoder v1 stream");
    FittedEncoder enc;
    in >> word >> enc.encoding_dim;
    if (word != "encoding_dim") throw Error("load_encoder: expected 'encoding_dim'");
    int applied = 0;
    in >> word >> applied >> enc.preprocess.age_min >> enc.preprocess.age_max;
    if (word != "age_scaling") throw Error("load_encoder: expected 'age_scaling'");
    enc.preprocess.applied = applied != 0;
    auto [spec, params] = load_params(in);
    enc.spec = std::move(spec);
    enc.params = std::move(params);
    if (enc.spec.layers.back().out_dim != enc.encoding_dim)
        throw Error("load_encoder: encoding_dim does not match the network");
    return enc;
}

} // namespace care2vec

#endif // CARE2VEC_AUTOENCODER_HPP
