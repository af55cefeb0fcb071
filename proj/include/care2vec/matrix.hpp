#ifndef CARE2VEC_MATRIX_HPP
#define CARE2VEC_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "care2vec/errors.hpp"

namespace care2vec {

/// Dense row-major matrix of doubles. Immutable by convention once a
/// public operation has produced it; every model in the library stores
/// its state in these.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != m.cols_)
                throw DimensionMismatch("from_rows: ragged initializer");
            std::size_t c = 0;
            for (double v : row) m(r, c++) = v;
            ++r;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* row(std::size_t r) { return data_.data() + r * cols_; }
    const double* row(std::size_t r) const { return data_.data() + r * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    Matrix select_rows(const std::vector<std::size_t>& idx) const {
        Matrix out(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            const double* src = row(idx[i]);
            double* dst = out.row(i);
            for (std::size_t c = 0; c < cols_; ++c) dst[c] = src[c];
        }
        return out;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

namespace detail {
inline std::string shape_str(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}
} // namespace detail

/// C = A * B. The k-broadcast loop order keeps both inner operands
/// contiguous; the accumulation order per entry is fixed, so results
/// are bit-reproducible for a given build.
inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matmul: " + detail::shape_str(a) + " * " + detail::shape_str(b));
    Matrix c(a.rows(), b.cols());
    const std::size_t n = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* crow = c.row(i);
        const double* arow = a.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = arow[k];
            const double* brow = b.row(k);
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

/// C = A^T * B with A (k x m), B (k x n). This is the weight-gradient
/// shape of backprop (delta^T * inputs) and avoids materializing A^T.
inline Matrix matmul_at_b(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw DimensionMismatch("matmul_at_b: " + detail::shape_str(a) + "^T * " + detail::shape_str(b));
    Matrix c(a.cols(), b.cols());
    const std::size_t n = b.cols();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const double* arow = a.row(r);
        const double* brow = b.row(r);
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const double ari = arow[i];
            double* crow = c.row(i);
            for (std::size_t j = 0; j < n; ++j) crow[j] += ari * brow[j];
        }
    }
    return c;
}

/// C = A * B^T with A (m x k), B (n x k): rows of both operands are
/// contiguous, each entry is a dot product with four fixed-order
/// partial sums.
inline Matrix matmul_a_bt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw DimensionMismatch("matmul_a_bt: " + detail::shape_str(a) + " * " + detail::shape_str(b) + "^T");
    Matrix c(a.rows(), b.rows());
    const std::size_t k = a.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* arow = a.row(i);
        double* crow = c.row(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            const double* brow = b.row(j);
            double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
            std::size_t t = 0;
            for (; t + 4 <= k; t += 4) {
                s0 += arow[t] * brow[t];
                s1 += arow[t + 1] * brow[t + 1];
                s2 += arow[t + 2] * brow[t + 2];
                s3 += arow[t + 3] * brow[t + 3];
            }
            for (; t < k; ++t) s0 += arow[t] * brow[t];
            crow[j] = ((s0 + s1) + (s2 + s3));
        }
    }
    return c;
}

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

} // namespace care2vec

#endif // CARE2VEC_MATRIX_HPP
