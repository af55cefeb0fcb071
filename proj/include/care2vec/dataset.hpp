#ifndef CARE2VEC_DATASET_HPP
#define CARE2VEC_DATASET_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "care2vec/errors.hpp"
#include "care2vec/matrix.hpp"

namespace care2vec {

enum class LabelScheme { MultiClass7, Binary };

/// Expected layout of a SCADI-style CSV export. Column roles are
/// resolved by name so exports with a different column order map
/// without code changes; every column that is not gender, age or the
/// class is treated as a binary activity indicator.
struct ScadiSchema {
    std::size_t expected_rows = 70;       // informational, not enforced
    std::size_t n_feature_columns = 205;  // gender + age + activity indicators; 0 = accept any
    std::string gender_column = "Gender";
    std::string age_column = "Age";
    std::string class_column = "Classes";
    std::vector<std::string> class_labels = {
        "Class1", "Class2", "Class3", "Class4", "Class5", "Class6", "Class7"};

    static ScadiSchema scadi() { return ScadiSchema{}; }

    /// Same column roles but any feature-column count; used by
    /// `validate` and by the small test fixtures.
    static ScadiSchema any_width() {
        ScadiSchema s;
        s.n_feature_columns = 0;
        return s;
    }
};

struct Dataset {
    Matrix features;                       // n_rows x n_features
    std::vector<int> labels;               // 0-indexed class ids
    LabelScheme scheme = LabelScheme::MultiClass7;
    std::vector<std::string> feature_names;
    std::vector<std::string> class_names;  // label id -> display name
    std::string age_feature_name = "Age";

    std::size_t n_rows() const { return features.rows(); }
    std::size_t n_features() const { return features.cols(); }
    std::size_t n_classes() const { return class_names.size(); }

    bool has_age_column() const {
        return std::find(feature_names.begin(), feature_names.end(),
                         age_feature_name) != feature_names.end();
    }

    std::size_t age_column_index() const {
        auto it = std::find(feature_names.begin(), feature_names.end(), age_feature_name);
        if (it == feature_names.end())
            throw Error("dataset has no age column named '" + age_feature_name + "'");
        return static_cast<std::size_t>(it - feature_names.begin());
    }

    bool operator==(const Dataset& o) const {
        return features == o.features && labels == o.labels && scheme == o.scheme &&
               feature_names == o.feature_names && class_names == o.class_names;
    }
};

/// Scaling statistics for the age column, fitted on training rows only.
struct PreprocessState {
    double age_min = 0.0;
    double age_max = 0.0;
    bool applied = false;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline bool parse_double(const std::string& s, double& out) {
    const char* b = s.data();
    const char* e = s.data() + s.size();
    while (b != e && (*b == ' ' || *b == '\t')) ++b;
    if (b == e) return false;
    auto [p, ec] = std::from_chars(b, e, out);
    while (p != e && (*p == ' ' || *p == '\t')) ++p;
    return ec == std::errc() && p == e;
}

} // namespace detail

inline std::vector<std::size_t> class_histogram(const Dataset& d) {
    std::vector<std::size_t> counts(d.n_classes(), 0);
    for (int y : d.labels) counts[static_cast<std::size_t>(y)]++;
    return counts;
}

/// Load a SCADI-style CSV. Gender must be 0/1, activity indicators must
/// be 0/1, age must be numeric, and the class column must hold either a
/// known class label or its 1-based integer code. Any violation throws
/// SchemaMismatch naming the file line and column.
inline Dataset load_scadi(const std::string& path, const ScadiSchema& schema = ScadiSchema::scadi()) {
    std::ifstream in(path);
    if (!in) throw MissingFile("cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw SchemaMismatch(path + ": empty file, no header row");
    const std::vector<std::string> header = detail::split_csv_line(line);

    auto col_of = [&](const std::string& name) -> std::size_t {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw SchemaMismatch(path + ": header has no column '" + name + "'");
        return static_cast<std::size_t>(it - header.begin());
    };
    col_of(schema.gender_column);  // role must exist; validated as binary below
    const std::size_t age_col = col_of(schema.age_column);
    const std::size_t class_col = col_of(schema.class_column);

    const std::size_t n_feat = header.size() - 1;
    if (schema.n_feature_columns != 0 && n_feat != schema.n_feature_columns)
        throw SchemaMismatch(path + ": expected " + std::to_string(schema.n_feature_columns) +
                             " feature columns, found " + std::to_string(n_feat));

    // label id from either "Class3" or "3"
    auto class_id = [&](const std::string& s, std::size_t file_line) -> int {
        auto it = std::find(schema.class_labels.begin(), schema.class_labels.end(), s);
        if (it != schema.class_labels.end())
            return static_cast<int>(it - schema.class_labels.begin());
        int code = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), code);
        if (ec == std::errc() && p == s.data() + s.size() && code >= 1 &&
            code <= static_cast<int>(schema.class_labels.size()))
            return code - 1;
        throw SchemaMismatch(path + ": line " + std::to_string(file_line) +
                             ", unknown class label '" + s + "'");
    };

    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    std::size_t file_line = 1;
    while (std::getline(in, line)) {
        ++file_line;
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> cells = detail::split_csv_line(line);
        if (cells.size() != header.size())
            throw SchemaMismatch(path + ": line " + std::to_string(file_line) + " has " +
                                 std::to_string(cells.size()) + " columns, header has " +
                                 std::to_string(header.size()));
        std::vector<double> feat;
        feat.reserve(n_feat);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c == class_col) continue;
            const std::string& cell = cells[c];
            double v = 0.0;
            if (cell.empty() || !detail::parse_double(cell, v))
                throw SchemaMismatch(path + ": line " + std::to_string(file_line) +
                                     ", column '" + header[c] + "' has non-numeric value '" +
                                     cell + "'");
            const bool must_be_binary = (c != age_col);  // gender and activity indicators
            if (must_be_binary && v != 0.0 && v != 1.0)
                throw SchemaMismatch(path + ": line " + std::to_string(file_line) +
                                     ", column '" + header[c] + "' has non-binary value '" +
                                     cell + "'");
            feat.push_back(v);
        }
        labels.push_back(class_id(cells[class_col], file_line));
        rows.push_back(std::move(feat));
    }
    if (rows.empty()) throw SchemaMismatch(path + ": no data rows");

    Dataset d;
    d.features = Matrix(rows.size(), n_feat);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n_feat; ++c) d.features(r, c) = rows[r][c];
    d.labels = std::move(labels);
    d.scheme = LabelScheme::MultiClass7;
    for (std::size_t c = 0; c < header.size(); ++c)
        if (c != class_col) d.feature_names.push_back(header[c]);
    d.class_names = schema.class_labels;
    d.age_feature_name = schema.age_column;
    return d;
}

/// Collapse the 7-class labels to the no-issue-vs-rest task: the last
/// class (Class7, "no self-care issues") becomes 1, everything else 0.
/// Features are untouched.
inline Dataset to_binary(const Dataset& d) {
    if (d.scheme != LabelScheme::MultiClass7)
        throw WrongScheme("to_binary: dataset is already binary");
    Dataset out = d;
    out.scheme = LabelScheme::Binary;
    const int positive_class = static_cast<int>(d.n_classes()) - 1;
    for (std::size_t i = 0; i < out.labels.size(); ++i)
        out.labels[i] = (d.labels[i] == positive_class) ? 1 : 0;
    out.class_names = {"0", "1"};
    return out;
}

inline Dataset select_rows(const Dataset& d, const std::vector<std::size_t>& idx) {
    Dataset out = d;
    out.features = d.features.select_rows(idx);
    out.labels.clear();
    out.labels.reserve(idx.size());
    for (std::size_t i : idx) out.labels.push_back(d.labels[i]);
    return out;
}

inline PreprocessState fit_age_scaling(const Dataset& train) {
    if (train.n_rows() == 0) throw Error("fit_age_scaling: empty training set");
    const std::size_t age = train.age_column_index();
    PreprocessState st;
    st.age_min = train.features(0, age);
    st.age_max = train.features(0, age);
    for (std::size_t r = 1; r < train.n_rows(); ++r) {
        st.age_min = std::min(st.age_min, train.features(r, age));
        st.age_max = std::max(st.age_max, train.features(r, age));
    }
    st.applied = true;
    return st;
}

/// Min-max scale the age column with train statistics. A degenerate
/// range (min == max) maps every value to 0.
inline Dataset apply_age_scaling(const PreprocessState& st, const Dataset& d) {
    if (!st.applied) return d;
    Dataset out = d;
    const std::size_t age = d.age_column_index();
    const double range = st.age_max - st.age_min;
    for (std::size_t r = 0; r < out.n_rows(); ++r)
        out.features(r, age) =
            (range == 0.0) ? 0.0 : (d.features(r, age) - st.age_min) / range;
    return out;
}

/// Fit on `train` only, then apply the same transform everywhere.
/// Result datasets come back as {scaled train, scaled others...}.
inline std::pair<PreprocessState, std::vector<Dataset>>
fit_apply_age_scaling(const Dataset& train, const std::vector<Dataset>& others = {}) {
    const PreprocessState st = fit_age_scaling(train);
    std::vector<Dataset> scaled;
    scaled.reserve(others.size() + 1);
    scaled.push_back(apply_age_scaling(st, train));
    for (const Dataset& d : others) scaled.push_back(apply_age_scaling(st, d));
    return {st, scaled};
}

} // namespace care2vec

#endif // CARE2VEC_DATASET_HPP
