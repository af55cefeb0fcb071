// Command-line front end: dataset validation, single CV runs, full
// experiment-grid reproduction and gradient checking. All randomness
// flows from --seed; outputs are byte-deterministic for a given seed.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "care2vec/care2vec.hpp"

namespace {

using namespace care2vec;

std::string join_counts(const std::vector<std::size_t>& counts) {
    std::string s;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) s += "/";
        s += std::to_string(counts[i]);
    }
    return s;
}

int cmd_validate(const std::string& data_path) {
    const Dataset d = load_scadi(data_path, ScadiSchema::any_width());
    std::printf("%zu rows, %zu features, classes: %s\n", d.n_rows(), d.n_features(),
                join_counts(class_histogram(d)).c_str());
    const ScadiSchema expected = ScadiSchema::scadi();
    if (d.n_features() != expected.n_feature_columns)
        std::printf("note: feature count differs from the standard SCADI layout (%zu)\n",
                    expected.n_feature_columns);
    if (d.n_rows() != expected.expected_rows)
        std::printf("note: row count differs from the standard SCADI file (%zu)\n",
                    expected.expected_rows);
    return 0;
}

struct RunOptions {
    std::string data_path = "data/scadi_synthetic.csv";
    std::string method = "care2vec";
    std::string task = "multi";
    std::size_t dim = 32;
    std::size_t nodes = 300;
    std::size_t layers = 2;
    std::string criterion = "gini";
    std::size_t k = 10;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    bool full_data_encoder = false;
    std::size_t ae_epochs = 500;
    std::size_t epochs = 300;  // classifier epochs (ann and care2vec stage 2)
    std::string out_dir = "care2vec_out";
};

std::unique_ptr<ModelRecipe> make_recipe(const RunOptions& opt, const Dataset& data) {
    if (opt.method == "tree") {
        const SplitCriterion crit =
            opt.criterion == "entropy" ? SplitCriterion::CrossEntropy : SplitCriterion::Gini;
        return std::make_unique<TreeRecipe>(crit);
    }
    if (opt.method == "ann") {
        TrainConfig t = default_classifier_train(data.scheme);
        t.epochs = opt.epochs;
        return std::make_unique<AnnRecipe>(opt.nodes, opt.layers, t);
    }
    if (opt.method == "care2vec") {
        Care2VecConfig cfg = make_care2vec_config(opt.dim, opt.nodes, opt.layers, data.scheme, 0);
        cfg.ae_train.epochs = opt.ae_epochs;
        cfg.dnn_train.epochs = opt.epochs;
        AutoencoderSpec probe;
        probe.encoding_dim = opt.dim;
        if (!probe.standard_grid_dim()) {
            std::fprintf(stderr, "warning: encoding dim %zu is outside the published grid\n",
                         opt.dim);
            cfg.extended = true;
        }
        return std::make_unique<Care2VecRecipe>(cfg);
    }
    throw Error("unknown method '" + opt.method + "'");
}

int cmd_run(const RunOptions& opt) {
    Dataset data = load_scadi(opt.data_path);
    if (opt.task == "binary") data = to_binary(data);

    const Rng root(opt.seed);
    const FoldAssignment folds = kfold_split(data.n_rows(), opt.k, root.child(0).seed());
    const std::uint64_t model_seed = root.child(1).seed();

    std::unique_ptr<ModelRecipe> recipe;
    if (opt.method == "care2vec" && opt.full_data_encoder) {
        // deliberately leaky alternative: encoder fitted once on all rows
        Care2VecConfig cfg = make_care2vec_config(opt.dim, opt.nodes, opt.layers, data.scheme, 0);
        cfg.ae_train.epochs = opt.ae_epochs;
        cfg.dnn_train.epochs = opt.epochs;
        auto [st, scaled] = fit_apply_age_scaling(data);
        AutoencoderSpec ae;
        ae.input_dim = data.n_features();
        ae.encoding_dim = opt.dim;
        TrainConfig ae_cfg = cfg.ae_train;
        ae_cfg.seed = Rng(model_seed).child(1000 + opt.dim).seed();
        recipe = std::make_unique<Care2VecRecipe>(
            cfg, fit_encoder(ae, scaled[0].features, ae_cfg, st));
    } else {
        recipe = make_recipe(opt, data);
    }

    EvaluationReport report = cross_validate(*recipe, data, folds, model_seed, opt.jobs);
    if (opt.method == "care2vec")
        report.leakage = opt.full_data_encoder ? "full-data" : "per-fold";
    report.config.insert(report.config.begin(),
                         {{"task", opt.task}, {"seed", std::to_string(opt.seed)}});

    std::filesystem::create_directories(opt.out_dir);
    write_file(opt.out_dir + "/report.csv", report_to_csv(report));
    write_file(opt.out_dir + "/report.txt", report_to_text(report));
    for (std::size_t f = 0; f < report.fold_roc.size(); ++f)
        if (report.fold_auc[f])
            write_file(opt.out_dir + "/roc_fold" + std::to_string(f + 1) + ".csv",
                       roc_to_csv(report.fold_roc[f]));

    std::printf("mean CV score: %.2f%%\n", report.mean_cv_score * 100.0);
    if (report.mean_auc) std::printf("mean AUC: %.2f%%\n", *report.mean_auc * 100.0);
    for (const std::string& a : report.annotations) std::printf("note: %s\n", a.c_str());
    std::printf("reports written to %s\n", opt.out_dir.c_str());
    return 0;
}

struct ReproduceOptions {
    std::string data_path = "data/scadi_synthetic.csv";
    std::vector<std::uint64_t> seeds = {1};
    std::size_t k = 10;
    std::size_t jobs = 1;
    bool full_data_encoder = false;
    std::size_t ae_epochs = 500;
    std::size_t epochs = 300;
    std::string out_dir = "care2vec_out";
};

int cmd_reproduce(const ReproduceOptions& opt) {
    const Dataset data = load_scadi(opt.data_path);
    std::filesystem::create_directories(opt.out_dir);

    std::vector<std::pair<std::uint64_t, GridResult>> runs;
    std::size_t total_cells = 0, failed_cells = 0;
    for (const std::uint64_t seed : opt.seeds) {
        GridProtocol protocol;
        protocol.k = opt.k;
        protocol.seed = seed;
        protocol.jobs = opt.jobs;
        protocol.full_data_encoder = opt.full_data_encoder;
        protocol.ae_train.epochs = opt.ae_epochs;
        protocol.ann_train.epochs = opt.epochs;
        protocol.dnn_train.epochs = opt.epochs;
        protocol.on_cell_done = [](const GridCell& cell) {
            std::fprintf(stderr, "  %-45s %6.1fs %s\n", cell.id().c_str(), cell.seconds,
                         cell.failure.empty() ? "" : "FAILED");
        };

        std::fprintf(stderr, "running grid, seed %llu...\n",
                     static_cast<unsigned long long>(seed));
        GridResult grid = run_experiment_grid(data, protocol);

        const std::string suffix =
            opt.seeds.size() == 1 ? "" : "_seed" + std::to_string(seed);
        for (const char* table : {"table1", "table2", "table4"}) {
            write_file(opt.out_dir + "/" + table + suffix + ".csv",
                       grid_cells_to_csv(grid, table));
            write_file(opt.out_dir + "/" + table + suffix + ".txt",
                       grid_table_to_text(grid, table));
        }
        write_file(opt.out_dir + "/table3" + suffix + ".csv", grid_table3_to_csv(grid));

        for (const GridCell& c : grid.cells) {
            ++total_cells;
            if (!c.failure.empty()) {
                ++failed_cells;
                std::fprintf(stderr, "cell %s failed: %s\n", c.id().c_str(), c.failure.c_str());
            }
        }
        runs.emplace_back(seed, std::move(grid));
    }

    if (opt.seeds.size() == 1)
        write_file(opt.out_dir + "/comparison.csv", grid_comparison_to_csv(runs[0].second));
    else
        write_file(opt.out_dir + "/comparison.csv", grid_seed_sweep_comparison_csv(runs));

    std::printf("grids complete: %zu cells, %zu failed; outputs in %s\n", total_cells,
                failed_cells, opt.out_dir.c_str());
    return failed_cells == total_cells ? 1 : 0;
}

int cmd_gradcheck(double tolerance, std::uint64_t seed, std::size_t samples,
                  std::size_t max_entries) {
    bool all_pass = true;
    for (const ArchitectureUnderTest& arch : repo_architectures()) {
        const std::size_t cap = arch.spec.layers.front().in_dim *
                                            arch.spec.layers.front().out_dim <=
                                        4096
                                    ? 0
                                    : max_entries;
        const GradCheckReport r =
            gradient_check(arch.spec, arch.loss, samples, tolerance, seed, cap);
        all_pass = all_pass && r.pass;
        std::printf("[%s] %-40s max_rel_err=%.3e checked=%zu skipped_kink=%zu\n",
                    r.pass ? "PASS" : "FAIL", arch.label.c_str(), r.max_rel_error,
                    r.entries_checked, r.entries_skipped_kink);
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Care2Vec self-care classification laboratory"};
    app.require_subcommand(1);

    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "check a SCADI-style CSV and print its schema summary");
    validate->add_option("data", validate_path, "path to the CSV file")->required();

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "one method configuration under k-fold CV");
    run->add_option("--data", run_opt.data_path, "dataset CSV");
    run->add_option("--method", run_opt.method, "tree | ann | care2vec")
        ->check(CLI::IsMember({"tree", "ann", "care2vec"}));
    run->add_option("--task", run_opt.task, "multi | binary")
        ->check(CLI::IsMember({"multi", "binary"}));
    run->add_option("--dim", run_opt.dim, "encoding dimension (care2vec)");
    run->add_option("--nodes", run_opt.nodes, "hidden nodes per hidden layer");
    run->add_option("--layers", run_opt.layers, "hidden layers");
    run->add_option("--criterion", run_opt.criterion, "tree split criterion: gini | entropy")
        ->check(CLI::IsMember({"gini", "entropy"}));
    run->add_option("--k", run_opt.k, "number of CV folds");
    run->add_option("--seed", run_opt.seed, "master seed");
    run->add_option("--jobs", run_opt.jobs, "parallel fold workers (results are independent of this)");
    run->add_flag("--full-data-encoder", run_opt.full_data_encoder,
                  "fit the autoencoder on all rows instead of per fold (leaky variant)");
    run->add_option("--ae-epochs", run_opt.ae_epochs, "autoencoder training epochs");
    run->add_option("--epochs", run_opt.epochs, "classifier training epochs");
    run->add_option("--out", run_opt.out_dir, "output directory")->envname("CARE2VEC_OUT");

    ReproduceOptions rep_opt;
    CLI::App* reproduce = app.add_subcommand("reproduce", "run all four experiment-table grids");
    reproduce->add_option("--data", rep_opt.data_path, "dataset CSV");
    reproduce->add_option("--seeds", rep_opt.seeds, "seed sweep")->delimiter(',');
    reproduce->add_option("--k", rep_opt.k, "number of CV folds");
    reproduce->add_option("--jobs", rep_opt.jobs, "parallel fold workers");
    reproduce->add_flag("--full-data-encoder", rep_opt.full_data_encoder,
                        "fit autoencoders on all rows instead of per fold");
    reproduce->add_option("--ae-epochs", rep_opt.ae_epochs, "autoencoder training epochs");
    reproduce->add_option("--epochs", rep_opt.epochs, "classifier training epochs");
    reproduce->add_option("--out", rep_opt.out_dir, "output directory")->envname("CARE2VEC_OUT");

    double gc_tolerance = 1e-4;
    std::uint64_t gc_seed = 42;
    std::size_t gc_samples = 5;
    std::size_t gc_entries = 40;
    CLI::App* gradcheck = app.add_subcommand(
        "gradcheck", "verify analytic gradients against finite differences for every architecture");
    gradcheck->add_option("--tolerance", gc_tolerance, "max allowed relative error");
    gradcheck->add_option("--seed", gc_seed, "probe-point seed");
    gradcheck->add_option("--samples", gc_samples, "batch rows at the probe point");
    gradcheck->add_option("--max-entries", gc_entries,
                          "sampled weight entries per layer for large nets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(validate_path);
        if (run->parsed()) return cmd_run(run_opt);
        if (reproduce->parsed()) return cmd_reproduce(rep_opt);
        if (gradcheck->parsed())
            return cmd_gradcheck(gc_tolerance, gc_seed, gc_samples, gc_entries);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
