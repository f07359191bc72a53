#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace efimov {

// Row-major dense matrix; just enough linear algebra for the operator work.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return a_.empty(); }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(double c) {
        for (double& v : a_) v *= c;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, double c) { return a *= c; }
    friend Matrix operator*(double c, Matrix a) { return a *= c; }

    std::vector<double> apply(const std::vector<double>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
        std::vector<double> y(rows_, 0.0);
        for (int i = 0; i < rows_; ++i) {
            double s = 0.0;
            const double* row = &a_[static_cast<std::size_t>(i) * cols_];
            for (int j = 0; j < cols_; ++j) s += row[j] * x[j];
            y[i] = s;
        }
        return y;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double v : a_) s += v * v;
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::fabs(v));
        return m;
    }

    double symmetry_defect() const {
        if (rows_ != cols_) return std::numeric_limits<double>::infinity();
        double d = 0.0;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j) d = std::max(d, std::fabs((*this)(i, j) - (*this)(j, i)));
        return d;
    }

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

/// 2x2 block composition [[A11, A12], [A21, A22]]; empty blocks read as zero.
inline Matrix block_2x2(const Matrix& a11, const Matrix& a12, const Matrix& a21, const Matrix& a22, int n) {
    Matrix full(2 * n, 2 * n);
    auto put = [&](const Matrix& b, int ro, int co) {
        if (b.empty()) return;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) full(ro + i, co + j) = b(i, j);
    };
    put(a11, 0, 0);
    put(a12, 0, n);
    put(a21, n, 0);
    put(a22, n, n);
    return full;
}

}  // namespace efimov
