#ifndef CARE2VEC_REFERENCE_RESULTS_HPP
#define CARE2VEC_REFERENCE_RESULTS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace care2vec {

/// One published number from the original Care2Vec study, keyed by the
/// grid cell it belongs to. The comparison report is generated from
/// this table, never hand-edited.
struct ReferenceValue {
    std::string table;    // table1..table4
    std::string method;   // decision_tree | ann | care2vec
    std::size_t dim;      // 0 = not applicable
    std::size_t nodes;
    std::size_t layers;
    std::string metric;   // mean_cv_score | mean_auc (percent)
    double value;
    std::string citation;
};

inline const std::vector<ReferenceValue>& reference_values() {
    static const std::vector<ReferenceValue> values = {
        // Mean CV score, ANN with one hidden layer (Table 1)
        {"table1", "ann", 0, 30, 1, "mean_cv_score", 78.57, "Table 1, 30 nodes"},
        {"table1", "ann", 0, 40, 1, "mean_cv_score", 81.43, "Table 1, 40 nodes"},
        {"table1", "ann", 0, 50, 1, "mean_cv_score", 80.00, "Table 1, 50 nodes"},
        {"table1", "ann", 0, 100, 1, "mean_cv_score", 80.00, "Table 1, 100 nodes"},
        {"table1", "ann", 0, 300, 1, "mean_cv_score", 80.00, "Table 1, 300 nodes"},
        // Mean CV score, Care2Vec grid (Table 2)
        {"table2", "care2vec", 4, 40, 1, "mean_cv_score", 72.86, "Table 2, dim 4"},
        {"table2", "care2vec", 4, 100, 1, "mean_cv_score", 72.86, "Table 2, dim 4"},
        {"table2", "care2vec", 4, 300, 1, "mean_cv_score", 81.43, "Table 2, dim 4"},
        {"table2", "care2vec", 4, 300, 2, "mean_cv_score", 81.43, "Table 2, dim 4"},
        {"table2", "care2vec", 8, 40, 1, "mean_cv_score", 82.86, "Table 2, dim 8"},
        {"table2", "care2vec", 8, 100, 1, "mean_cv_score", 81.43, "Table 2, dim 8"},
        {"table2", "care2vec", 8, 300, 1, "mean_cv_score", 80.00, "Table 2, dim 8"},
        {"table2", "care2vec", 8, 300, 2, "mean_cv_score", 80.00, "Table 2, dim 8"},
        {"table2", "care2vec", 16, 40, 1, "mean_cv_score", 80.00, "Table 2, dim 16"},
        {"table2", "care2vec", 16, 100, 1, "mean_cv_score", 81.43, "Table 2, dim 16"},
        {"table2", "care2vec", 16, 300, 1, "mean_cv_score", 82.86, "Table 2, dim 16"},
        {"table2", "care2vec", 16, 300, 2, "mean_cv_score", 82.86, "Table 2, dim 16"},
        {"table2", "care2vec", 32, 40, 1, "mean_cv_score", 82.86, "Table 2, dim 32"},
        {"table2", "care2vec", 32, 100, 1, "mean_cv_score", 82.86, "Table 2, dim 32"},
        {"table2", "care2vec", 32, 300, 1, "mean_cv_score", 80.00, "Table 2, dim 32"},
        {"table2", "care2vec", 32, 300, 2, "mean_cv_score", 84.29, "Table 2, dim 32"},
        // Best-parameter summary (Table 3)
        {"table3", "decision_tree", 0, 0, 0, "mean_cv_score", 76.99, "Table 3, decision tree"},
        {"table3", "ann", 0, 40, 1, "mean_cv_score", 81.43, "Table 3, ANN"},
        {"table3", "care2vec", 32, 300, 2, "mean_cv_score", 84.29, "Table 3, Care2Vec"},
        // Binary task (Table 4): mean AUC and mean CV score
        {"table4", "decision_tree", 0, 0, 0, "mean_auc", 73.59, "Table 4, decision tree"},
        {"table4", "decision_tree", 0, 0, 0, "mean_cv_score", 86.79, "Table 4, decision tree"},
        {"table4", "ann", 0, 40, 1, "mean_auc", 94.61, "Table 4, ANN 40 nodes"},
        {"table4", "ann", 0, 40, 1, "mean_cv_score", 91.43, "Table 4, ANN 40 nodes"},
        {"table4", "ann", 0, 100, 1, "mean_auc", 93.83, "Table 4, ANN 100 nodes"},
        {"table4", "ann", 0, 100, 1, "mean_cv_score", 91.43, "Table 4, ANN 100 nodes"},
        {"table4", "ann", 0, 300, 1, "mean_auc", 94.13, "Table 4, ANN 300 nodes"},
        {"table4", "ann", 0, 300, 1, "mean_cv_score", 91.43, "Table 4, ANN 300 nodes"},
        {"table4", "care2vec", 4, 300, 1, "mean_auc", 90.85, "Table 4, Care2Vec dim 4"},
        {"table4", "care2vec", 4, 300, 1, "mean_cv_score", 81.43, "Table 4, Care2Vec dim 4"},
        {"table4", "care2vec", 8, 300, 1, "mean_auc", 92.51, "Table 4, Care2Vec dim 8"},
        {"table4", "care2vec", 8, 300, 1, "mean_cv_score", 92.86, "Table 4, Care2Vec dim 8"},
        {"table4", "care2vec", 16, 300, 1, "mean_auc", 93.93, "Table 4, Care2Vec dim 16"},
        {"table4", "care2vec", 16, 300, 1, "mean_cv_score", 90.00, "Table 4, Care2Vec dim 16"},
        {"table4", "care2vec", 32, 300, 1, "mean_auc", 96.35, "Table 4, Care2Vec dim 32"},
        {"table4", "care2vec", 32, 300, 1, "mean_cv_score", 88.57, "Table 4, Care2Vec dim 32"},
    };
    return values;
}

/// Published value for one (table, method, dim, nodes, layers, metric)
/// cell, or a negative sentinel when the study did not report it.
inline double reference_value(const std::string& table, const std::string& method,
                              std::size_t dim, std::size_t nodes, std::size_t layers,
                              const std::string& metric) {
    for (const ReferenceValue& v : reference_values())
        if (v.table == table && v.method == method && v.dim == dim && v.nodes == nodes &&
            v.layers == layers && v.metric == metric)
            return v.value;
    return -1.0;
}

} // namespace care2vec

#endif // CARE2VEC_REFERENCE_RESULTS_HPP
