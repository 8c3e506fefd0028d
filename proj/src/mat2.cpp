#include "dbk/mat2.hpp"

#include <cmath>

namespace dbk {

double Mat2::max_abs() const {
    return std::max(std::max(std::abs(a11), std::abs(a12)),
                    std::max(std::abs(a21), std::abs(a22)));
}

double max_abs_diff(const Mat2& x, const Mat2& y) {
    return (x - y).max_abs();
}

Mat2 derivative_at(const MatrixSolution& m, double x, double step) {
    if (m.derivative) {
        Mat2 d = m.derivative(Complex(x));
        return d;
    }
    Mat2 v = m.evaluate(Complex(x, step));
    auto im = [step](Complex c) { return Complex(c.imag() / step, 0.0); };
    return {im(v.a11), im(v.a12), im(v.a21), im(v.a22)};
}

} // namespace dbk
