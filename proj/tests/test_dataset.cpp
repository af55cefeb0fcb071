#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "care2vec/dataset.hpp"

using namespace care2vec;

namespace {

const char* kToyPath = "data/toy_selfcare.csv";
const char* kScadiPath = "data/scadi_synthetic.csv";

// the bundled 6-row fixture, written out by hand
const std::vector<std::vector<double>> kToyMatrix = {
    {1, 5, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 7, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {1, 9, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 11, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {1, 6, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 14, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1},
};
const std::vector<int> kToyLabels = {0, 1, 3, 5, 5, 6};

std::string write_temp_csv(const std::string& name, const std::string& content) {
    const std::string path = "build/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

Dataset load_toy() { return load_scadi(kToyPath, ScadiSchema::any_width()); }

} // namespace

TEST_CASE("toy fixture loads cell-for-cell as written", "[dataset]") {
    const Dataset d = load_toy();
    REQUIRE(d.n_rows() == 6);
    REQUIRE(d.n_features() == 16);
    REQUIRE(d.labels == kToyLabels);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 16; ++c) REQUIRE(d.features(r, c) == kToyMatrix[r][c]);
    CHECK(d.feature_names[0] == "Gender");
    CHECK(d.feature_names[1] == "Age");
    CHECK(d.scheme == LabelScheme::MultiClass7);
    CHECK(class_histogram(d) == std::vector<std::size_t>{1, 1, 0, 1, 0, 2, 1});
}

TEST_CASE("loading the fixture twice is bit-identical", "[dataset]") {
    CHECK(load_toy() == load_toy());
}

TEST_CASE("the bundled SCADI-shaped file matches the published schema", "[dataset]") {
    const Dataset d = load_scadi(kScadiPath);
    CHECK(d.n_rows() == 70);
    CHECK(d.n_features() == 205);
    CHECK(class_histogram(d) == std::vector<std::size_t>{2, 7, 1, 12, 3, 29, 16});
}

TEST_CASE("missing file", "[dataset]") {
    REQUIRE_THROWS_AS(load_scadi("data/definitely_missing.csv"), MissingFile);
}

TEST_CASE("schema violations are rejected and name the location", "[dataset]") {
    const std::string header = "Gender,Age,a01_0,Classes\n";

    SECTION("no data rows") {
        const auto path = write_temp_csv("empty.csv", header);
        REQUIRE_THROWS_AS(load_scadi(path, ScadiSchema::any_width()), SchemaMismatch);
    }
    SECTION("inconsistent column count names the line") {
        const auto path = write_temp_csv("short_row.csv", header + "1,5,0,Class1\n0,7,1\n");
        REQUIRE_THROWS_WITH(load_scadi(path, ScadiSchema::any_width()),
                            Catch::Matchers::ContainsSubstring("line 3"));
    }
    SECTION("unknown class label") {
        const auto path = write_temp_csv("bad_class.csv", header + "1,5,0,Class9\n");
        REQUIRE_THROWS_WITH(load_scadi(path, ScadiSchema::any_width()),
                            Catch::Matchers::ContainsSubstring("Class9"));
    }
    SECTION("non-binary activity value names the column") {
        const auto path = write_temp_csv("bad_activity.csv", header + "1,5,2,Class1\n");
        REQUIRE_THROWS_WITH(load_scadi(path, ScadiSchema::any_width()),
                            Catch::Matchers::ContainsSubstring("a01_0"));
    }
    SECTION("non-binary gender") {
        const auto path = write_temp_csv("bad_gender.csv", header + "3,5,0,Class1\n");
        REQUIRE_THROWS_AS(load_scadi(path, ScadiSchema::any_width()), SchemaMismatch);
    }
    SECTION("non-numeric age") {
        const auto path = write_temp_csv("bad_age.csv", header + "1,old,0,Class1\n");
        REQUIRE_THROWS_WITH(load_scadi(path, ScadiSchema::any_width()),
                            Catch::Matchers::ContainsSubstring("Age"));
    }
    SECTION("empty cell counts as missing value") {
        const auto path = write_temp_csv("missing_value.csv", header + "1,,0,Class1\n");
        REQUIRE_THROWS_AS(load_scadi(path, ScadiSchema::any_width()), SchemaMismatch);
    }
    SECTION("wrong total feature-column count under the strict schema") {
        const auto path = write_temp_csv("narrow.csv", header + "1,5,0,Class1\n");
        REQUIRE_THROWS_AS(load_scadi(path, ScadiSchema::scadi()), SchemaMismatch);
    }
}

TEST_CASE("integer class codes are accepted", "[dataset]") {
    const auto path = write_temp_csv(
        "int_classes.csv", "Gender,Age,a01_0,Classes\n1,5,0,7\n0,6,1,1\n");
    const Dataset d = load_scadi(path, ScadiSchema::any_width());
    CHECK(d.labels == std::vector<int>{6, 0});
}

TEST_CASE("to_binary maps the no-issue class to 1", "[dataset]") {
    const Dataset toy = load_toy();
    const Dataset b = to_binary(toy);
    CHECK(b.scheme == LabelScheme::Binary);
    CHECK(b.labels == std::vector<int>{0, 0, 0, 0, 0, 1});
    CHECK(b.features == toy.features);
    CHECK(b.n_classes() == 2);
    REQUIRE_THROWS_AS(to_binary(b), WrongScheme);
}

TEST_CASE("to_binary on the full file gives 16 positives, 54 negatives", "[dataset]") {
    const Dataset b = to_binary(load_scadi(kScadiPath));
    CHECK(class_histogram(b) == std::vector<std::size_t>{54, 16});
}

TEST_CASE("binary mapping is idempotent on label semantics", "[dataset]") {
    // the map sends the last class to 1; on an already-binary scheme
    // the last class is 1 itself, so a second application changes
    // nothing
    const Dataset toy = load_toy();
    auto to_bin = [](int label, int last) { return label == last ? 1 : 0; };
    for (int label : toy.labels) {
        const int once = to_bin(label, 6);
        CHECK(to_bin(once, 1) == once);
    }
}

TEST_CASE("classes (1,7,3,7) map to labels (0,1,0,1)", "[dataset]") {
    Dataset d;
    d.features = Matrix(4, 1);
    d.labels = {0, 6, 2, 6};
    d.scheme = LabelScheme::MultiClass7;
    d.feature_names = {"x"};
    d.class_names = {"Class1", "Class2", "Class3", "Class4", "Class5", "Class6", "Class7"};
    CHECK(to_binary(d).labels == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("all-Class7 dataset maps to all ones", "[dataset]") {
    Dataset d = load_toy();
    std::fill(d.labels.begin(), d.labels.end(), 6);
    const Dataset b = to_binary(d);
    for (int label : b.labels) CHECK(label == 1);
}

TEST_CASE("age scaling endpoints and interpolation", "[dataset]") {
    Dataset train;
    train.features = Matrix::from_rows({{2}, {12}});
    train.labels = {0, 0};
    train.feature_names = {"Age"};
    train.class_names = {"a", "b"};

    auto [st, scaled] = fit_apply_age_scaling(train);
    CHECK(st.age_min == 2.0);
    CHECK(st.age_max == 12.0);
    CHECK(scaled[0].features(0, 0) == 0.0);
    CHECK(scaled[0].features(1, 0) == 1.0);
}

TEST_CASE("age scaling applies train statistics to other datasets", "[dataset]") {
    Dataset train;
    train.features = Matrix::from_rows({{4}, {8}, {12}});
    train.labels = {0, 0, 0};
    train.feature_names = {"Age"};
    train.class_names = {"a"};
    Dataset test = train;
    test.features = Matrix::from_rows({{10}});
    test.labels = {0};

    auto [st, scaled] = fit_apply_age_scaling(train, {test});
    REQUIRE(scaled.size() == 2);
    CHECK(scaled[1].features(0, 0) == 0.75);  // (10-4)/(12-4)
}

TEST_CASE("degenerate age range scales to 0", "[dataset]") {
    Dataset train;
    train.features = Matrix::from_rows({{9}, {9}, {9}});
    train.labels = {0, 0, 0};
    train.feature_names = {"Age"};
    train.class_names = {"a"};
    auto [st, scaled] = fit_apply_age_scaling(train);
    for (std::size_t r = 0; r < 3; ++r) CHECK(scaled[0].features(r, 0) == 0.0);
}

TEST_CASE("scaling state depends only on training rows", "[dataset]") {
    const Dataset full = load_toy();
    const Dataset train = select_rows(full, {0, 1, 2, 3});

    Dataset perturbed_full = full;
    perturbed_full.features(5, 1) = 99.0;  // a non-training row's age
    const Dataset train_after = select_rows(perturbed_full, {0, 1, 2, 3});

    const PreprocessState a = fit_age_scaling(train);
    const PreprocessState b = fit_age_scaling(train_after);
    CHECK(a.age_min == b.age_min);
    CHECK(a.age_max == b.age_max);
}

TEST_CASE("binary indicator columns are untouched by scaling", "[dataset]") {
    const Dataset toy = load_toy();
    auto [st, scaled] = fit_apply_age_scaling(toy);
    for (std::size_t r = 0; r < toy.n_rows(); ++r)
        for (std::size_t c = 0; c < toy.n_features(); ++c)
            if (c != 1) CHECK(scaled[0].features(r, c) == toy.features(r, c));
}

TEST_CASE("select_rows keeps labels aligned", "[dataset]") {
    const Dataset toy = load_toy();
    const Dataset s = select_rows(toy, {5, 0});
    CHECK(s.labels == std::vector<int>{6, 0});
    CHECK(s.features(0, 1) == 14.0);
}
