#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "dbk/half_integer.hpp"

namespace dbk {

using Complex = std::complex<double>;

// 2x2 complex matrix, the value type of DRHP solutions.
struct Mat2 {
    Complex a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex det() const { return a11 * a22 - a12 * a21; }
    Mat2 transposed() const { return {a11, a21, a12, a22}; }

    // (m^t)^{-1} for det m = 1.
    Mat2 inverse_transpose_unimodular() const { return {a22, -a21, -a12, a11}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
                x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
    }
    friend Mat2 operator*(Complex s, const Mat2& x) {
        return {s * x.a11, s * x.a12, s * x.a21, s * x.a22};
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
    }

    double max_abs() const;
};

double max_abs_diff(const Mat2& x, const Mat2& y);

// A DRHP solution as a numerical object: evaluable anywhere off its pole set,
// with expanding contours kept at distance >= 1/2 from Z'.
struct MatrixSolution {
    std::function<Mat2(Complex)> evaluate;
    // d m / d zeta when available in closed form (linear-system solutions);
    // otherwise empty and the caller differentiates numerically.
    std::function<Mat2(Complex)> derivative;
    std::vector<HalfInteger> pole_set;
    std::vector<double> contour_radii; // integers: distance 1/2 from Z'

    Mat2 operator()(Complex zeta) const { return evaluate(zeta); }
};

// Complex-step derivative, valid when the entries are real-analytic at x
// (all closed-form solutions here are, away from their poles).
Mat2 derivative_at(const MatrixSolution& m, double x, double step = 1e-20);

} // namespace dbk
