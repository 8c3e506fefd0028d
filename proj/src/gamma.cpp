#include "dbk/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace dbk {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;
constexpr double LOG_PI = 1.144729885849400174143427351353058712;
constexpr double HALF_LOG_TWO_PI = 0.918938533204672741780329736405617639;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(pi x) and cos(pi x) through the fractional part, so the sign pattern at
// integers stays exact.
double sin_pi_real(double x) {
    double fl = std::floor(x);
    double r = x - fl;
    double s = std::sin(PI * r);
    return (static_cast<long long>(fl) % 2 == 0) ? s : -s;
}

double cos_pi_real(double x) {
    double fl = std::floor(x);
    double r = x - fl;
    double c = std::cos(PI * r);
    return (static_cast<long long>(fl) % 2 == 0) ? c : -c;
}

// Stirling series, valid for Re w >= 12.
Complex stirling_log_gamma(Complex w) {
    static const double c[7] = {
        1.0 / 12.0,     -1.0 / 360.0,     1.0 / 1260.0, -1.0 / 1680.0,
        1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0,
    };
    Complex iw2 = 1.0 / (w * w);
    Complex series = 0.0;
    Complex p = 1.0 / w;
    for (double k : c) {
        series += k * p;
        p *= iw2;
    }
    return (w - 0.5) * std::log(w) - w + HALF_LOG_TWO_PI + series;
}

Complex log_sin_pi(Complex z) {
    if (z.imag() == 0.0) {
        double s = sin_pi_real(z.real());
        return {std::log(std::abs(s)), s < 0.0 ? PI : 0.0};
    }
    if (z.imag() > 0.0) {
        // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}), |e^{2 i pi z}| < 1
        Complex i(0.0, 1.0);
        return -i * PI * z + std::log(1.0 - std::exp(2.0 * i * PI * z)) -
               std::log(2.0) + i * PI / 2.0;
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

} // namespace

SignedLogGamma signed_log_gamma(double x) {
    SignedLogGamma r;
    if (is_nonpositive_integer(x)) {
        r.pole = true;
        r.log_abs = std::numeric_limits<double>::infinity();
        return r;
    }
    if (x > 0.0) {
        r.log_abs = std::lgamma(x);
        r.sign = 1;
        return r;
    }
    // Reflection: |Gamma(x)| = pi / (|sin(pi x)| Gamma(1-x)), x < 0.
    double fl = std::floor(x);
    double frac = x - fl;
    r.log_abs = LOG_PI - std::log(std::sin(PI * frac)) - std::lgamma(1.0 - x);
    r.sign = (static_cast<long long>(fl) % 2 == 0) ? 1 : -1;
    return r;
}

SignedLogGamma log_gamma(double x) {
    SignedLogGamma r = signed_log_gamma(x);
    if (r.pole)
        throw std::domain_error("log_gamma: pole at nonpositive integer");
    return r;
}

double reciprocal_gamma(double x) {
    SignedLogGamma r = signed_log_gamma(x);
    if (r.pole)
        return 0.0;
    return r.sign * std::exp(-r.log_abs);
}

double digamma(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("digamma: pole at nonpositive integer");
    if (x < 0.0) {
        // psi(x) = psi(1-x) - pi cot(pi x)
        double fl = std::floor(x);
        double frac = x - fl;
        return digamma(1.0 - x) - PI * std::cos(PI * frac) / std::sin(PI * frac);
    }
    double acc = 0.0;
    while (x < 8.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // Asymptotic series, |error| < B16/(16 x^16) terms at x >= 8.
    double ix2 = 1.0 / (x * x);
    static const double c[7] = {
        -1.0 / 12.0,  1.0 / 120.0,  -1.0 / 252.0,      1.0 / 240.0,
        -1.0 / 132.0, 691.0 / 32760.0, -1.0 / 12.0,
    };
    double series = 0.0;
    double p = ix2;
    for (double k : c) {
        series += k * p;
        p *= ix2;
    }
    return acc + std::log(x) - 0.5 / x + series;
}

double psi_over_gamma(double x) {
    if (x >= 0.5)
        return digamma(x) * reciprocal_gamma(x);
    // Entire continuation: Gamma(1-x) [ psi(1-x) sin(pi x)/pi - cos(pi x) ].
    double g = std::exp(std::lgamma(1.0 - x));
    return g * (digamma(1.0 - x) * sin_pi_real(x) / PI - cos_pi_real(x));
}

double pochhammer(double a, int k) {
    double r = 1.0;
    for (int j = 0; j < k; ++j)
        r *= a + j;
    return r;
}

Complex pochhammer(Complex a, int k) {
    Complex r = 1.0;
    for (int j = 0; j < k; ++j)
        r *= a + static_cast<double>(j);
    return r;
}

Complex sin_pi(Complex z) {
    double n = std::round(z.real());
    Complex r = z - n;
    Complex s = std::sin(PI * r);
    return (static_cast<long long>(n) % 2 == 0) ? s : -s;
}

Complex log_gamma(Complex z) {
    if (z.imag() == 0.0 && is_nonpositive_integer(z.real()))
        throw std::domain_error("log_gamma: pole at nonpositive integer");
    if (z.real() < 0.5)
        return LOG_PI - log_sin_pi(z) - log_gamma(1.0 - z);
    Complex shift = 0.0;
    while (z.real() < 12.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling_log_gamma(z) - shift;
}

Complex reciprocal_gamma(Complex z) {
    if (z.real() < 0.5)
        return sin_pi(z) / PI * std::exp(log_gamma(1.0 - z));
    return std::exp(-log_gamma(z));
}

} // namespace dbk
