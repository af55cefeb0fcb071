#ifndef CARE2VEC_REPORT_IO_HPP
#define CARE2VEC_REPORT_IO_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "care2vec/errors.hpp"
#include "care2vec/eval.hpp"
#include "care2vec/pipeline.hpp"
#include "care2vec/reference_results.hpp"

namespace care2vec {

namespace detail {

inline std::string pct(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", fraction * 100.0);
    return buf;
}

inline std::string num(double v, const char* fmt = "%.6f") {
    char buf[40];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

inline std::string pad_right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

inline std::string config_line(const EvaluationReport& r) {
    std::string s = "method=" + r.method;
    for (const auto& [k, v] : r.config) s += "," + k + "=" + v;
    s += ",k=" + std::to_string(r.k);
    s += ",fold_seed=" + std::to_string(r.fold_seed);
    s += ",model_seed=" + std::to_string(r.model_seed);
    s += ",rng=" + r.rng_algorithm;
    s += ",leakage=" + r.leakage;
    return s;
}

} // namespace detail

/// Machine-readable report: self-describing header comments, then one
/// row per fold and a mean row. Byte-deterministic for a given run.
inline std::string report_to_csv(const EvaluationReport& r) {
    std::ostringstream out;
    out << "# care2vec evaluation report\n";
    out << "# " << detail::config_line(r) << "\n";
    for (const std::string& a : r.annotations) out << "# note: " << a << "\n";
    const bool binary = !r.fold_auc.empty();
    out << "fold,accuracy" << (binary ? ",auc" : "") << "\n";
    for (std::size_t f = 0; f < r.fold_accuracy.size(); ++f) {
        out << (f + 1) << "," << detail::num(r.fold_accuracy[f]);
        if (binary) out << "," << (r.fold_auc[f] ? detail::num(*r.fold_auc[f]) : "undefined");
        out << "\n";
    }
    out << "mean," << detail::num(r.mean_cv_score);
    if (binary) out << "," << (r.mean_auc ? detail::num(*r.mean_auc) : "undefined");
    out << "\n";
    return out.str();
}

/// Human-readable aligned table mirroring the published layout:
/// per-fold columns, then the means, values in percent.
inline std::string report_to_text(const EvaluationReport& r) {
    std::ostringstream out;
    out << "care2vec evaluation report\n";
    out << detail::config_line(r) << "\n\n";
    const bool binary = !r.fold_auc.empty();

    out << detail::pad_right("metric", 14);
    for (std::size_t f = 0; f < r.fold_accuracy.size(); ++f)
        out << detail::pad_right("fold" + std::to_string(f + 1), 9);
    out << "mean\n";

    out << detail::pad_right("accuracy(%)", 14);
    for (double a : r.fold_accuracy) out << detail::pad_right(detail::pct(a), 9);
    out << detail::pct(r.mean_cv_score) << "\n";

    if (binary) {
        out << detail::pad_right("auc(%)", 14);
        for (const auto& a : r.fold_auc)
            out << detail::pad_right(a ? detail::pct(*a) : "undef", 9);
        out << (r.mean_auc ? detail::pct(*r.mean_auc) : "undef") << "\n";
    }
    for (const std::string& a : r.annotations) out << "note: " << a << "\n";
    return out.str();
}

/// ROC points as CSV for external plotting.
inline std::string roc_to_csv(const RocCurve& curve) {
    std::ostringstream out;
    out << "fpr,tpr\n";
    for (const auto& [fpr, tpr] : curve.points)
        out << detail::num(fpr) << "," << detail::num(tpr) << "\n";
    out << "# auc," << detail::num(curve.auc) << "\n";
    return out.str();
}

// --- grid serialization ---------------------------------------------------

inline std::string grid_cells_to_csv(const GridResult& grid, const std::string& table) {
    std::ostringstream out;
    out << "method,dim,nodes,layers,task,mean_cv_score,mean_auc,status\n";
    for (const GridCell* c : grid.table(table)) {
        out << c->method << "," << c->dim << "," << c->nodes << "," << c->layers << ","
            << (c->task == LabelScheme::Binary ? "binary" : "multi") << ",";
        if (c->report) {
            out << detail::pct(c->report->mean_cv_score) << ",";
            out << (c->report->mean_auc ? detail::pct(*c->report->mean_auc) : "") << ",ok";
        } else {
            out << ",,failed: " << c->failure;
        }
        out << "\n";
    }
    return out.str();
}

namespace detail {

inline const GridCell* best_by_cv(const std::vector<const GridCell*>& cells) {
    const GridCell* best = nullptr;
    for (const GridCell* c : cells)
        if (c->report && (!best || c->report->mean_cv_score > best->report->mean_cv_score))
            best = c;
    return best;
}

} // namespace detail

/// Best-parameter summary in the shape of the published Table 3:
/// decision tree, best ANN of table1, best Care2Vec of table2.
inline std::string grid_table3_to_csv(const GridResult& grid) {
    std::ostringstream out;
    out << "method,mean_cv_score,configuration\n";
    for (const GridCell* c : grid.table("table3"))
        if (c->report)
            out << "decision_tree," << detail::pct(c->report->mean_cv_score) << ",gini\n";
        else
            out << "decision_tree,,failed: " << c->failure << "\n";
    if (const GridCell* ann = detail::best_by_cv(grid.table("table1")))
        out << "ann," << detail::pct(ann->report->mean_cv_score) << ",nodes="
            << ann->nodes << " layers=" << ann->layers << "\n";
    if (const GridCell* c2v = detail::best_by_cv(grid.table("table2")))
        out << "care2vec," << detail::pct(c2v->report->mean_cv_score) << ",dim=" << c2v->dim
            << " nodes=" << c2v->nodes << " layers=" << c2v->layers << "\n";
    return out.str();
}

/// Juxtaposes every obtained grid value against the published one and
/// reports the delta, one row per (cell, metric).
inline std::string grid_comparison_to_csv(const GridResult& grid) {
    std::ostringstream out;
    out << "table,method,dim,nodes,layers,metric,published,obtained,delta,citation\n";
    for (const ReferenceValue& ref : reference_values()) {
        const GridCell* match = nullptr;
        for (const GridCell& c : grid.cells) {
            if (ref.table == "table3") {
                // summary rows point at the underlying runs
                if (ref.method == "decision_tree" && c.table == "table3") match = &c;
                if (ref.method == "ann" && c.table == "table1" && c.nodes == ref.nodes) match = &c;
                if (ref.method == "care2vec" && c.table == "table2" && c.dim == ref.dim &&
                    c.nodes == ref.nodes && c.layers == ref.layers)
                    match = &c;
            } else if (c.table == ref.table && c.method == ref.method && c.dim == ref.dim &&
                       c.nodes == ref.nodes && c.layers == ref.layers) {
                match = &c;
            }
            if (match) break;
        }
        out << ref.table << "," << ref.method << "," << ref.dim << "," << ref.nodes << ","
            << ref.layers << "," << ref.metric << "," << detail::num(ref.value, "%.2f") << ",";
        if (match && match->report) {
            double obtained = -1.0;
            if (ref.metric == "mean_cv_score")
                obtained = match->report->mean_cv_score * 100.0;
            else if (match->report->mean_auc)
                obtained = *match->report->mean_auc * 100.0;
            if (obtained >= 0.0)
                out << detail::num(obtained, "%.2f") << ","
                    << detail::num(obtained - ref.value, "%.2f");
            else
                out << "undefined,";
        } else {
            out << "missing,";
        }
        out << ",\"" << ref.citation << "\"\n";
    }
    return out.str();
}

/// Aligned text rendering of one grid table, rows in published order.
inline std::string grid_table_to_text(const GridResult& grid, const std::string& table) {
    std::ostringstream out;
    out << table << "\n";
    out << detail::pad_right("method", 15) << detail::pad_right("dim", 5)
        << detail::pad_right("nodes", 7) << detail::pad_right("layers", 8)
        << detail::pad_right("mean CV (%)", 13) << "mean AUC (%)\n";
    for (const GridCell* c : grid.table(table)) {
        out << detail::pad_right(c->method, 15)
            << detail::pad_right(c->dim ? std::to_string(c->dim) : "-", 5)
            << detail::pad_right(c->nodes ? std::to_string(c->nodes) : "-", 7)
            << detail::pad_right(c->layers ? std::to_string(c->layers) : "-", 8);
        if (c->report) {
            out << detail::pad_right(detail::pct(c->report->mean_cv_score), 13)
                << (c->report->mean_auc ? detail::pct(*c->report->mean_auc) : "-");
        } else {
            out << "failed: " << c->failure;
        }
        out << "\n";
    }
    return out.str();
}

namespace detail {

inline double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

inline std::optional<double> obtained_metric(const GridResult& grid, const ReferenceValue& ref) {
    for (const GridCell& c : grid.cells) {
        bool match = false;
        if (ref.table == "table3") {
            match = (ref.method == "decision_tree" && c.table == "table3") ||
                    (ref.method == "ann" && c.table == "table1" && c.nodes == ref.nodes) ||
                    (ref.method == "care2vec" && c.table == "table2" && c.dim == ref.dim &&
                     c.nodes == ref.nodes && c.layers == ref.layers);
        } else {
            match = c.table == ref.table && c.method == ref.method && c.dim == ref.dim &&
                    c.nodes == ref.nodes && c.layers == ref.layers;
        }
        if (!match || !c.report) continue;
        if (ref.metric == "mean_cv_score") return c.report->mean_cv_score * 100.0;
        if (c.report->mean_auc) return *c.report->mean_auc * 100.0;
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace detail

/// Comparison across a seed sweep: per reference value, the median of
/// the obtained values plus their spread, and the delta of the median
/// from the published number.
inline std::string grid_seed_sweep_comparison_csv(
    const std::vector<std::pair<std::uint64_t, GridResult>>& runs) {
    std::ostringstream out;
    out << "table,method,dim,nodes,layers,metric,published,median,min,max,delta,seeds,citation\n";
    for (const ReferenceValue& ref : reference_values()) {
        std::vector<double> obtained;
        for (const auto& [seed, grid] : runs)
            if (auto v = detail::obtained_metric(grid, ref)) obtained.push_back(*v);
        out << ref.table << "," << ref.method << "," << ref.dim << "," << ref.nodes << ","
            << ref.layers << "," << ref.metric << "," << detail::num(ref.value, "%.2f") << ",";
        if (!obtained.empty()) {
            const double med = detail::median_of(obtained);
            const double lo = *std::min_element(obtained.begin(), obtained.end());
            const double hi = *std::max_element(obtained.begin(), obtained.end());
            out << detail::num(med, "%.2f") << "," << detail::num(lo, "%.2f") << ","
                << detail::num(hi, "%.2f") << "," << detail::num(med - ref.value, "%.2f");
        } else {
            out << "missing,,,";
        }
        out << "," << obtained.size() << ",\"" << ref.citation << "\"\n";
    }
    return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

} // namespace care2vec

#endif // CARE2VEC_REPORT_IO_HPP
