#pragma once

#include <complex>

namespace dbk {

using Complex = std::complex<double>;

// ln|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
    double log_abs = 0.0;
    int sign = 1;
    bool pole = false; // x in {0,-1,-2,...}
};

// No-throw variant; .pole set at nonpositive integers.
SignedLogGamma signed_log_gamma(double x);

// Throws std::domain_error at nonpositive integers.
SignedLogGamma log_gamma(double x);

// Entire function 1/Gamma; exactly 0 at nonpositive integers.
double reciprocal_gamma(double x);

double digamma(double x);

// psi(x)/Gamma(x), regularized: entire, equals (-1)^{m+1} m! at x = -m.
double psi_over_gamma(double x);

// Rising factorial (a)_k.
double pochhammer(double a, int k);
Complex pochhammer(Complex a, int k);

// Complex log-Gamma via Stirling with recurrence shift (reflection for
// Re z < 1/2). Intended for |z| <~ 60; branch chosen so that exp() of the
// result is Gamma(z) on each half-plane sweep we use.
Complex log_gamma(Complex z);

// Entire 1/Gamma on C (reflection form near the poles of Gamma).
Complex reciprocal_gamma(Complex z);

// sin(pi z) with argument reduction on Re z (accurate near the zeros).
Complex sin_pi(Complex z);

} // namespace dbk
