#pragma once

#include <complex>

#include "dbk/gamma.hpp"
#include "dbk/precision.hpp"

namespace dbk {

// Gauss hypergeometric F(a,b;c;v) for real v < 1: raw series for |v| small,
// Pfaff transformation F = (1-v)^{-a} F(a,c-b;c;v/(v-1)) once v <= -1/2 (maps
// the argument into (0,1)). Symmetric in (a,b) bit-for-bit. No continuation
// past v = 1 is provided.
Complex gauss_2f1(Complex a, Complex b, Complex c, double v, const PrecisionPolicy& policy = {});

double gauss_2f1(double a, double b, double c, double v, const PrecisionPolicy& policy = {});

// F together with dF/dc, the exact term-by-term series derivative (the Pfaff
// branch differentiates both c slots). Needed where a complex step in c is
// numerically invalid: for conjugate complex (a,b) the individual terms are
// complex even at real c, and their rounding noise buries a 1e-20 step.
struct Hyp2f1WithCDeriv {
    Complex value;
    Complex d_c;
};

Hyp2f1WithCDeriv gauss_2f1_c_derivative(Complex a, Complex b, Complex c, double v,
                                        const PrecisionPolicy& policy = {});

} // namespace dbk
