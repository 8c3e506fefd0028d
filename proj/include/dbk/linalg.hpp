#pragma once

#include <vector>

namespace dbk {

// Row-major dense real matrix, sized for windows of a couple hundred rows.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transposed() const;
    double max_abs() const;
    double norm_one() const; // max column sum

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// LU factorization with partial pivoting; throws std::runtime_error on a
// singular pivot.
class LuFactors {
public:
    explicit LuFactors(Matrix a);

    std::vector<double> solve(std::vector<double> rhs) const;
    Matrix solve(const Matrix& rhs) const; // column-wise
    Matrix inverse() const;

private:
    Matrix lu_;
    std::vector<int> pivots_;
};

// One-norm condition estimate kappa_1(A) = |A|_1 |A^-1|_1 (explicit inverse;
// the matrices here are small).
double condition_one(const Matrix& a);

// Solve X A = B, i.e. X = B A^{-1}.
Matrix solve_right(const Matrix& b, const Matrix& a);

} // namespace dbk
