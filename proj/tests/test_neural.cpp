#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <sstream>

#include "care2vec/neural.hpp"

using namespace care2vec;

namespace {

NetworkParams zero_params(const NetworkSpec& spec) {
    NetworkParams p;
    for (const LayerSpec& l : spec.layers) {
        LayerParams lp;
        lp.w = Matrix(l.out_dim, l.in_dim);
        lp.b.assign(l.out_dim, 0.0);
        p.layers.push_back(std::move(lp));
    }
    return p;
}

} // namespace

TEST_CASE("spec validation", "[neural]") {
    NetworkSpec broken_chain{{{4, 3, Activation::ReLU}, {2, 1, Activation::Linear}}};
    REQUIRE_THROWS_AS(broken_chain.validate(), Error);
    NetworkSpec mid_softmax{{{4, 3, Activation::Softmax}, {3, 1, Activation::Linear}}};
    REQUIRE_THROWS_AS(mid_softmax.validate(), Error);
    NetworkSpec zero_dim{{{0, 3, Activation::ReLU}}};
    REQUIRE_THROWS_AS(zero_dim.validate(), Error);
}

TEST_CASE("identity linear layer reproduces its input", "[neural]") {
    NetworkSpec spec{{{3, 3, Activation::Linear}}};
    NetworkParams p = zero_params(spec);
    p.layers[0].w = Matrix::identity(3);
    const Matrix x = Matrix::from_rows({{1, -2, 3}, {0.5, 0, -0.25}});
    CHECK(forward(spec, p, x).output() == x);
}

TEST_CASE("softmax of zero logits is uniform", "[neural]") {
    NetworkSpec spec{{{7, 7, Activation::Softmax}}};
    const NetworkParams p = zero_params(spec);
    const Matrix out = forward(spec, p, Matrix(1, 7)).output();
    for (std::size_t c = 0; c < 7; ++c)
        REQUIRE(out(0, c) == Catch::Approx(1.0 / 7.0).margin(1e-15));
}

TEST_CASE("two-layer forward matches hand arithmetic", "[neural]") {
    // layer 1: ReLU(W1 x + b1), layer 2: linear
    NetworkSpec spec{{{2, 2, Activation::ReLU}, {2, 1, Activation::Linear}}};
    NetworkParams p = zero_params(spec);
    p.layers[0].w = Matrix::from_rows({{1.0, -1.0}, {0.5, 2.0}});
    p.layers[0].b = {0.25, -0.5};
    p.layers[1].w = Matrix::from_rows({{2.0, 3.0}});
    p.layers[1].b = {0.1};

    const Matrix x = Matrix::from_rows({{1.0, 2.0}});
    // q1 = (1*1 + (-1)*2 + 0.25, 0.5*1 + 2*2 - 0.5) = (-0.75, 4.0)
    // a1 = (0, 4.0);  out = 2*0 + 3*4 + 0.1 = 12.1
    const ForwardCache cache = forward(spec, p, x);
    CHECK(cache.activations[1](0, 0) == 0.0);
    CHECK(cache.activations[1](0, 1) == 4.0);
    CHECK(cache.output()(0, 0) == Catch::Approx(12.1).margin(1e-15));
}

TEST_CASE("forward rejects wrong input width", "[neural]") {
    NetworkSpec spec{{{3, 2, Activation::Linear}}};
    REQUIRE_THROWS_AS(forward(spec, zero_params(spec), Matrix(1, 4)), DimensionMismatch);
}

TEST_CASE("forward on a batch equals row-wise forwards", "[neural]") {
    NetworkSpec spec{{{5, 4, Activation::ReLU}, {4, 3, Activation::Softmax}}};
    const NetworkParams p = init_params(spec, Rng(8));
    Rng rng(9);
    Matrix x(6, 5);
    for (double& v : x.data()) v = rng.uniform(-2.0, 2.0);
    const Matrix batch_out = forward(spec, p, x).output();
    for (std::size_t r = 0; r < x.rows(); ++r) {
        const Matrix row_out = forward(spec, p, x.select_rows({r})).output();
        for (std::size_t c = 0; c < 3; ++c)
            REQUIRE(std::abs(batch_out(r, c) - row_out(0, c)) < 1e-12);
    }
}

TEST_CASE("softmax rows are probability vectors", "[neural]") {
    NetworkSpec spec{{{10, 7, Activation::Softmax}}};
    const NetworkParams p = init_params(spec, Rng(4));
    Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix x(8, 10);
        for (double& v : x.data()) v = rng.uniform(-5.0, 5.0);
        const Matrix out = forward(spec, p, x).output();
        for (std::size_t r = 0; r < out.rows(); ++r) {
            double sum = 0.0;
            for (std::size_t c = 0; c < out.cols(); ++c) {
                REQUIRE(out(r, c) > 0.0);
                REQUIRE(out(r, c) < 1.0);
                sum += out(r, c);
            }
            REQUIRE(std::abs(sum - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("loss values match closed forms", "[neural]") {
    SECTION("perfect one-hot prediction is at the clamp floor") {
        Matrix pred = Matrix::from_rows({{1, 0, 0}});
        Matrix target = Matrix::from_rows({{1, 0, 0}});
        const double l = loss_value(Loss::CategoricalCrossEntropy, pred, target);
        CHECK(l >= 0.0);
        CHECK(l <= -std::log(1.0 - 1e-7) + 1e-15);
    }
    SECTION("binary 0.5 vs 1 is ln 2") {
        Matrix pred = Matrix::from_rows({{0.5}});
        Matrix target = Matrix::from_rows({{1.0}});
        CHECK(loss_value(Loss::BinaryCrossEntropy, pred, target) ==
              Catch::Approx(std::log(2.0)).epsilon(1e-12));
    }
    SECTION("MSE of identical matrices is 0") {
        const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
        CHECK(loss_value(Loss::MeanSquaredError, m, m) == 0.0);
    }
    SECTION("shape mismatch") {
        REQUIRE_THROWS_AS(loss_value(Loss::MeanSquaredError, Matrix(2, 2), Matrix(2, 3)),
                          DimensionMismatch);
    }
}

TEST_CASE("zero-error MSE gives zero gradients", "[neural]") {
    NetworkSpec spec{{{2, 2, Activation::Linear}}};
    NetworkParams p = zero_params(spec);
    p.layers[0].w = Matrix::identity(2);
    const Matrix x = Matrix::from_rows({{1, 2}, {3, 4}});
    const ForwardCache cache = forward(spec, p, x);
    const Gradients g = backward(spec, p, cache, x, Loss::MeanSquaredError);
    for (double v : g.layers[0].w.data()) CHECK(v == 0.0);
    for (double v : g.layers[0].b) CHECK(v == 0.0);
}

TEST_CASE("linear 1x1 gradient matches the closed form", "[neural]") {
    // L = (wx + b - y)^2, dL/dw = 2(wx+b-y)x, dL/db = 2(wx+b-y)
    NetworkSpec spec{{{1, 1, Activation::Linear}}};
    NetworkParams p = zero_params(spec);
    p.layers[0].w(0, 0) = 0.7;
    p.layers[0].b = {0.3};
    const Matrix x = Matrix::from_rows({{2.0}});
    const Matrix y = Matrix::from_rows({{1.0}});
    const ForwardCache cache = forward(spec, p, x);
    const Gradients g = backward(spec, p, cache, y, Loss::MeanSquaredError);
    const double residual = 0.7 * 2.0 + 0.3 - 1.0;  // 0.7
    CHECK(g.layers[0].w(0, 0) == Catch::Approx(2.0 * residual * 2.0).epsilon(1e-10));
    CHECK(g.layers[0].b[0] == Catch::Approx(2.0 * residual).epsilon(1e-10));

    const GradCheckReport r = gradient_check(spec, Loss::MeanSquaredError, 4, 1e-6);
    CHECK(r.pass);
}

TEST_CASE("dead ReLU units get zero incoming weight gradients", "[neural]") {
    NetworkSpec spec{{{1, 2, Activation::ReLU}, {2, 1, Activation::Linear}}};
    NetworkParams p = zero_params(spec);
    p.layers[0].w = Matrix::from_rows({{1.0}, {-1.0}});  // unit 1 dead for x > 0
    p.layers[1].w = Matrix::from_rows({{1.0, 1.0}});
    const Matrix x = Matrix::from_rows({{2.0}});
    const Matrix y = Matrix::from_rows({{5.0}});
    const ForwardCache cache = forward(spec, p, x);
    const Gradients g = backward(spec, p, cache, y, Loss::MeanSquaredError);
    CHECK(g.layers[0].w(1, 0) == 0.0);
    CHECK(g.layers[0].b[1] == 0.0);
    CHECK(g.layers[0].w(0, 0) != 0.0);
}

TEST_CASE("every gradient entry of a 205-8-7 net matches finite differences", "[neural]") {
    NetworkSpec spec{{{205, 8, Activation::ReLU}, {8, 7, Activation::Softmax}}};
    const GradCheckReport r =
        gradient_check(spec, Loss::CategoricalCrossEntropy, 5, 1e-4, 7, 0);
    INFO("max relative error " << r.max_rel_error);
    CHECK(r.pass);
    CHECK(r.entries_checked > 1600);  // all weights and biases bar kink skips
}

TEST_CASE("loss pairings are enforced", "[neural]") {
    NetworkSpec sigmoid_out{{{3, 2, Activation::Sigmoid}}};
    const NetworkParams p = init_params(sigmoid_out, Rng(1));
    const ForwardCache cache = forward(sigmoid_out, p, Matrix(2, 3));
    REQUIRE_THROWS_AS(backward(sigmoid_out, p, cache, Matrix(2, 2), Loss::CategoricalCrossEntropy),
                      Error);
}

TEST_CASE("gradient check with infinite tolerance always passes", "[neural]") {
    NetworkSpec spec{{{4, 3, Activation::ReLU}, {3, 2, Activation::Softmax}}};
    const GradCheckReport r = gradient_check(spec, Loss::CategoricalCrossEntropy, 3,
                                             std::numeric_limits<double>::infinity());
    CHECK(r.pass);
}

TEST_CASE("training solves a linearly separable toy problem", "[neural]") {
    // 20 points in 2D, classes split by x0 + x1 vs 0
    Matrix x(20, 2);
    std::vector<int> labels(20);
    Rng rng(31);
    for (std::size_t i = 0; i < 20; ++i) {
        const double a = rng.uniform(-1.0, 1.0);
        const double b = rng.uniform(-1.0, 1.0);
        const int cls = (a + b > 0.0) ? 1 : 0;
        const double shift = cls ? 0.35 : -0.35;  // margin
        x(i, 0) = a + shift;
        x(i, 1) = b + shift;
        labels[i] = cls;
    }
    NetworkSpec spec{{{2, 8, Activation::ReLU}, {8, 2, Activation::Softmax}}};
    TrainConfig cfg;
    cfg.loss = Loss::CategoricalCrossEntropy;
    cfg.optimizer = OptimizerKind::Adam;
    cfg.learning_rate = 0.01;
    cfg.epochs = 200;
    cfg.batch_size = 4;
    cfg.seed = 5;
    const TrainResult r = train(spec, cfg, x, one_hot(labels, 2));
    CHECK(argmax_rows(forward(spec, r.params, x).output()) == labels);
    CHECK(r.loss_history.size() == 200);
    CHECK(r.loss_history.back() < r.loss_history.front());
}

TEST_CASE("train config contracts", "[neural]") {
    NetworkSpec spec{{{2, 1, Activation::Linear}}};
    const Matrix x(4, 2);
    const Matrix y(4, 1);
    TrainConfig cfg;
    cfg.loss = Loss::MeanSquaredError;

    SECTION("epochs = 0 is forbidden") {
        cfg.epochs = 0;
        REQUIRE_THROWS_AS(train(spec, cfg, x, y), Error);
    }
    SECTION("epochs = 1 gives exactly one history entry") {
        cfg.epochs = 1;
        cfg.batch_size = 2;
        CHECK(train(spec, cfg, x, y).loss_history.size() == 1);
    }
    SECTION("batch size larger than the data is forbidden") {
        cfg.batch_size = 5;
        REQUIRE_THROWS_AS(train(spec, cfg, x, y), Error);
    }
    SECTION("row mismatch") {
        cfg.batch_size = 2;
        REQUIRE_THROWS_AS(train(spec, cfg, x, Matrix(3, 1)), DimensionMismatch);
    }
}

TEST_CASE("training is bit-deterministic for a fixed config", "[neural]") {
    NetworkSpec spec{{{3, 5, Activation::ReLU}, {5, 2, Activation::Softmax}}};
    Rng rng(77);
    Matrix x(12, 3);
    for (double& v : x.data()) v = rng.uniform();
    std::vector<int> labels(12);
    for (std::size_t i = 0; i < 12; ++i) labels[i] = static_cast<int>(rng.bounded(2));
    TrainConfig cfg;
    cfg.loss = Loss::CategoricalCrossEntropy;
    cfg.epochs = 20;
    cfg.batch_size = 4;
    cfg.seed = 123;
    const Matrix y = one_hot(labels, 2);
    CHECK(train(spec, cfg, x, y).params == train(spec, cfg, x, y).params);
}

TEST_CASE("diverging training reports the epoch", "[neural]") {
    NetworkSpec spec{{{1, 1, Activation::Linear}}};
    Matrix x = Matrix::from_rows({{1000.0}, {2000.0}});
    Matrix y = Matrix::from_rows({{0.0}, {0.0}});
    TrainConfig cfg;
    cfg.loss = Loss::MeanSquaredError;
    cfg.optimizer = OptimizerKind::SGD;
    cfg.learning_rate = 1e12;
    cfg.epochs = 10;
    cfg.batch_size = 2;
    REQUIRE_THROWS_WITH(train(spec, cfg, x, y), Catch::Matchers::ContainsSubstring("epoch"));
}

TEST_CASE("SGD differs from Adam but is also deterministic", "[neural]") {
    NetworkSpec spec{{{2, 2, Activation::Linear}}};
    Matrix x = Matrix::from_rows({{1, 0}, {0, 1}, {1, 1}, {0, 0}});
    Matrix y = x;
    TrainConfig adam;
    adam.loss = Loss::MeanSquaredError;
    adam.epochs = 5;
    adam.batch_size = 2;
    TrainConfig sgd = adam;
    sgd.optimizer = OptimizerKind::SGD;
    CHECK(train(spec, sgd, x, y).params == train(spec, sgd, x, y).params);
    CHECK(!(train(spec, sgd, x, y).params == train(spec, adam, x, y).params));
}

TEST_CASE("params serialize and parse back bit-identically", "[neural]") {
    NetworkSpec spec{{{4, 3, Activation::ReLU}, {3, 2, Activation::Sigmoid}}};
    const NetworkParams p = init_params(spec, Rng(2718));
    std::stringstream buf;
    save_params(buf, spec, p);
    auto [spec2, p2] = load_params(buf);
    REQUIRE(spec2.layers.size() == spec.layers.size());
    for (std::size_t l = 0; l < spec.layers.size(); ++l) {
        CHECK(spec2.layers[l].in_dim == spec.layers[l].in_dim);
        CHECK(spec2.layers[l].out_dim == spec.layers[l].out_dim);
        CHECK(spec2.layers[l].activation == spec.layers[l].activation);
    }
    CHECK(p2 == p);
}

TEST_CASE("argmax breaks ties toward the lowest index", "[neural]") {
    const Matrix m = Matrix::from_rows({{0.4, 0.4, 0.2}, {0.1, 0.5, 0.5}});
    CHECK(argmax_rows(m) == std::vector<int>{0, 1});
}
