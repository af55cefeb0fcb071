// Minimal walkthrough of the two-stage model on the bundled data:
// scale, fit the autoencoder, embed, train the classifier head, and
// score a held-out slice. Epochs are trimmed so this runs in seconds;
// see the `care2vec run` subcommand for the full configuration.

#include <cstdio>
#include <string>

#include "care2vec/care2vec.hpp"

using namespace care2vec;

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : "data/scadi_synthetic.csv";
    const Dataset full = load_scadi(path);
    std::printf("loaded %zu rows x %zu features\n", full.n_rows(), full.n_features());

    // hold out every 5th row
    std::vector<std::size_t> train_idx, test_idx;
    for (std::size_t i = 0; i < full.n_rows(); ++i)
        (i % 5 == 0 ? test_idx : train_idx).push_back(i);
    const Dataset train_raw = select_rows(full, train_idx);
    const Dataset test_raw = select_rows(full, test_idx);

    auto [state, scaled] = fit_apply_age_scaling(train_raw, {test_raw});
    const Dataset& train = scaled[0];
    const Dataset& test = scaled[1];

    Care2VecConfig cfg = make_care2vec_config(32, 300, 2, LabelScheme::MultiClass7, 7);
    cfg.ae_train.epochs = 60;
    cfg.dnn_train.epochs = 60;

    const TrainedPipeline model = fit_care2vec(cfg, train, state);
    std::printf("autoencoder reconstruction MSE: %.4f (epoch 1) -> %.4f (epoch %zu)\n",
                model.encoder.reconstruction_loss_history.front(),
                model.encoder.reconstruction_loss_history.back(),
                model.encoder.reconstruction_loss_history.size());

    const std::vector<int> predicted = predict(model, test.features);
    std::printf("held-out accuracy: %.1f%%\n",
                accuracy(predicted, test.labels) * 100.0);
    return 0;
}
