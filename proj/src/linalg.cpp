#include "dbk/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace dbk {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_)
        m = std::max(m, std::abs(v));
    return m;
}

double Matrix::norm_one() const {
    double m = 0.0;
    for (int j = 0; j < cols_; ++j) {
        double s = 0.0;
        for (int i = 0; i < rows_; ++i)
            s += std::abs((*this)(i, j));
        m = std::max(m, s);
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("Matrix multiply: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            double aik = a(i, k);
            if (aik == 0.0)
                continue;
            for (int j = 0; j < b.cols_; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j)
            c(i, j) = a(i, j) + b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j)
            c(i, j) = a(i, j) - b(i, j);
    return c;
}

LuFactors::LuFactors(Matrix a) : lu_(std::move(a)) {
    const int n = lu_.rows();
    if (n != lu_.cols())
        throw std::invalid_argument("LuFactors: matrix must be square");
    pivots_.resize(n);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(lu_(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = std::abs(lu_(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0)
            throw std::runtime_error("LuFactors: singular matrix");
        pivots_[k] = piv;
        if (piv != k)
            for (int j = 0; j < n; ++j)
                std::swap(lu_(k, j), lu_(piv, j));
        for (int i = k + 1; i < n; ++i) {
            double f = lu_(i, k) / lu_(k, k);
            lu_(i, k) = f;
            for (int j = k + 1; j < n; ++j)
                lu_(i, j) -= f * lu_(k, j);
        }
    }
}

std::vector<double> LuFactors::solve(std::vector<double> rhs) const {
    const int n = lu_.rows();
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("LuFactors::solve: size mismatch");
    // Apply all row interchanges first: the stored multipliers live in their
    // final (fully pivoted) row positions.
    for (int k = 0; k < n; ++k)
        std::swap(rhs[k], rhs[pivots_[k]]);
    for (int k = 0; k < n; ++k)
        for (int i = k + 1; i < n; ++i)
            rhs[i] -= lu_(i, k) * rhs[k];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j)
            rhs[i] -= lu_(i, j) * rhs[j];
        rhs[i] /= lu_(i, i);
    }
    return rhs;
}

Matrix LuFactors::solve(const Matrix& rhs) const {
    const int n = lu_.rows();
    Matrix x(n, rhs.cols());
    std::vector<double> col(n);
    for (int j = 0; j < rhs.cols(); ++j) {
        for (int i = 0; i < n; ++i)
            col[i] = rhs(i, j);
        col = solve(std::move(col));
        for (int i = 0; i < n; ++i)
            x(i, j) = col[i];
    }
    return x;
}

Matrix LuFactors::inverse() const {
    return solve(Matrix::identity(lu_.rows()));
}

double condition_one(const Matrix& a) {
    LuFactors lu(a);
    return a.norm_one() * lu.inverse().norm_one();
}

Matrix solve_right(const Matrix& b, const Matrix& a) {
    // X A = B  <=>  A^t X^t = B^t
    LuFactors lu(a.transposed());
    return lu.solve(b.transposed()).transposed();
}

} // namespace dbk
