#include "dbk/hyp2f1.hpp"

#include <cmath>
#include <stdexcept>

namespace dbk {

namespace {

bool near_nonpositive_integer(Complex c) {
    return c.imag() == 0.0 && c.real() <= 1e-9 &&
           std::abs(c.real() - std::round(c.real())) < 1e-9;
}

Complex series_2f1(Complex a, Complex b, Complex c, double w, const PrecisionPolicy& policy) {
    Complex term = 1.0;
    Complex sum = 1.0;
    double prev_mag = 1.0;
    int calm = 0;
    for (int k = 0; k < policy.max_terms; ++k) {
        double dk = static_cast<double>(k);
        term *= (a + dk) * (b + dk) / ((c + dk) * (dk + 1.0)) * w;
        sum += term;
        double mag = std::abs(term);
        double ratio = prev_mag > 0.0 ? mag / prev_mag : 0.0;
        prev_mag = mag;
        // Terms decay geometrically with ratio -> |w|; bound the tail by the
        // geometric remainder rather than the last term alone.
        if (ratio < 0.9999) {
            double tail = mag * ratio / (1.0 - ratio);
            if (tail <= policy.target_rel_error * std::abs(sum)) {
                if (++calm >= 2)
                    return sum;
                continue;
            }
        }
        calm = 0;
    }
    throw std::runtime_error("gauss_2f1: series did not converge within max_terms");
}

// Lexicographic order on (Re, Im), so the Pfaff branch treats (a,b) and (b,a)
// identically to the bit.
bool param_less(Complex a, Complex b) {
    if (a.real() != b.real())
        return a.real() < b.real();
    return a.imag() < b.imag();
}

} // namespace

Complex gauss_2f1(Complex a, Complex b, Complex c, double v, const PrecisionPolicy& policy) {
    if (!(v < 1.0))
        throw std::domain_error("gauss_2f1: argument must satisfy v < 1");
    if (near_nonpositive_integer(c))
        throw std::domain_error("gauss_2f1: c is a nonpositive integer");
    if (v == 0.0)
        return 1.0;
    if (v <= -0.5) {
        Complex lo = a, hi = b;
        if (param_less(hi, lo))
            std::swap(lo, hi);
        Complex prefactor = std::exp(-lo * std::log(1.0 - v));
        return prefactor * series_2f1(lo, c - hi, c, v / (v - 1.0), policy);
    }
    return series_2f1(a, b, c, v, policy);
}

namespace {

// Series value and d/dc, with an optional extra c-dependence through the
// second parameter (db_dc = 1 on the Pfaff branch where b = c - hi).
Hyp2f1WithCDeriv series_2f1_c_deriv(Complex a, Complex b, Complex c, double w, double db_dc,
                                    const PrecisionPolicy& policy) {
    Complex term = 1.0;
    Complex sum = 1.0;
    Complex dterm = 0.0; // d term_k / dc
    Complex dsum = 0.0;
    double prev_mag = 1.0;
    int calm = 0;
    for (int k = 0; k < policy.max_terms; ++k) {
        double dk = static_cast<double>(k);
        Complex base = w / ((c + dk) * (dk + 1.0));
        Complex factor = (a + dk) * (b + dk) * base;
        // d/dc term_{k+1} = dterm_k factor + term_k d(factor)/dc, written so a
        // vanishing (b+k) (terminating series) stays finite.
        dterm = dterm * factor + term * base * (a + dk) * (db_dc - (b + dk) / (c + dk));
        term *= factor;
        sum += term;
        dsum += dterm;
        double mag = std::abs(term);
        double ratio = prev_mag > 0.0 ? mag / prev_mag : 0.0;
        prev_mag = mag;
        if (ratio < 0.9999) {
            double tail = mag * ratio / (1.0 - ratio);
            if (tail <= policy.target_rel_error * std::abs(sum)) {
                if (++calm >= 2)
                    return {sum, dsum};
                continue;
            }
        }
        calm = 0;
    }
    throw std::runtime_error("gauss_2f1_c_derivative: series did not converge");
}

} // namespace

Hyp2f1WithCDeriv gauss_2f1_c_derivative(Complex a, Complex b, Complex c, double v,
                                        const PrecisionPolicy& policy) {
    if (!(v < 1.0))
        throw std::domain_error("gauss_2f1_c_derivative: argument must satisfy v < 1");
    if (near_nonpositive_integer(c))
        throw std::domain_error("gauss_2f1_c_derivative: c is a nonpositive integer");
    if (v == 0.0)
        return {1.0, 0.0};
    if (v <= -0.5) {
        Complex lo = a, hi = b;
        if (param_less(hi, lo))
            std::swap(lo, hi);
        Complex prefactor = std::exp(-lo * std::log(1.0 - v));
        Hyp2f1WithCDeriv s = series_2f1_c_deriv(lo, c - hi, c, v / (v - 1.0), 1.0, policy);
        return {prefactor * s.value, prefactor * s.d_c};
    }
    return series_2f1_c_deriv(a, b, c, v, 0.0, policy);
}

double gauss_2f1(double a, double b, double c, double v, const PrecisionPolicy& policy) {
    Complex r = gauss_2f1(Complex(a), Complex(b), Complex(c), v, policy);
    return r.real();
}

} // namespace dbk
