#include "dbk/params.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dbk/gamma.hpp"

namespace dbk {

ThetaParams::ThetaParams(double t) : theta(t), eta(std::sqrt(t)) {
    if (!(t > 0.0))
        throw std::invalid_argument("ThetaParams: theta must be > 0");
}

namespace {

void check_xi(double xi) {
    if (!(xi > 0.0 && xi < 1.0))
        throw std::invalid_argument("ZParams: xi must lie in (0,1)");
}

} // namespace

ZParams ZParams::principal(Complex z, double xi) {
    check_xi(xi);
    if (z.imag() == 0.0)
        throw std::invalid_argument("ZParams::principal: z must be off the real axis");
    return {Family::principal, z, std::conj(z), xi};
}

ZParams ZParams::complementary(double z, double z_prime, double xi) {
    check_xi(xi);
    bool equal_positive = (z == z_prime && z > 0.0);
    bool same_unit_interval = std::floor(z) == std::floor(z_prime) &&
                              z != std::floor(z) && z_prime != std::floor(z_prime);
    if (!equal_positive && !same_unit_interval)
        throw std::invalid_argument(
            "ZParams::complementary: need non-integers with a common floor, or z = z' > 0");
    return {Family::complementary, Complex(z), Complex(z_prime), xi};
}

double ZParams::zz_prime() const {
    Complex p = z * z_prime;
    return p.real();
}

double ZParams::z_sum() const { return (z + z_prime).real(); }

HFunctions h_bessel(const ThetaParams& p) {
    const double log_eta = std::log(p.eta);
    HFunctions h;
    h.h_I = [log_eta](HalfInteger x) {
        return std::exp(x.value() * log_eta - std::lgamma(x.value() + 0.5));
    };
    h.h_II = [log_eta](HalfInteger x) {
        return std::exp(-x.value() * log_eta - std::lgamma(-x.value() + 0.5));
    };
    return h;
}

namespace {

// log|(a)_k| with sign for real a; the nonpositive-integer case is a finite
// product of integers even though the Gamma-ratio form sits on poles.
struct SignedLogPoch {
    double log_abs;
    int sign;
};

SignedLogPoch signed_log_poch(double a, int k) {
    if (k == 0)
        return {0.0, 1};
    if (a <= 0.0 && a == std::floor(a)) {
        int m = static_cast<int>(-a);
        if (k > m)
            return {-std::numeric_limits<double>::infinity(), 1}; // a factor is 0
        return {std::lgamma(m + 1.0) - std::lgamma(m - k + 1.0), k % 2 == 0 ? 1 : -1};
    }
    SignedLogGamma num = signed_log_gamma(a + k);
    SignedLogGamma den = signed_log_gamma(a);
    return {num.log_abs - den.log_abs, num.sign * den.sign};
}

// log of the positive product (a)_k (a')_k; signs of the real factors must
// cancel (they do for both ZParams families, by construction).
double log_poch_product(Complex a, Complex a_prime, int k) {
    if (k == 0)
        return 0.0;
    if (a.imag() == 0.0 && a_prime.imag() == 0.0) {
        SignedLogPoch pa = signed_log_poch(a.real(), k);
        SignedLogPoch pb = signed_log_poch(a_prime.real(), k);
        if (pa.sign * pb.sign < 0)
            throw std::domain_error("h_zmeasure: Pochhammer product negative");
        return pa.log_abs + pb.log_abs;
    }
    // principal family: the product is |(a)_k|^2
    Complex diff = log_gamma(a + static_cast<double>(k)) - log_gamma(a);
    Complex diff2 = log_gamma(a_prime + static_cast<double>(k)) - log_gamma(a_prime);
    return (diff + diff2).real();
}

} // namespace

HFunctions h_zmeasure(const ZParams& zp) {
    const double zz = zp.zz_prime();
    const double zs = zp.z_sum();
    const double xi = zp.xi;
    if (!(zz > 0.0))
        throw std::domain_error("h_zmeasure: z z' must be positive");
    const double log_root4 = 0.25 * std::log(zz);
    const double log_xi = std::log(xi);
    const double log_one_minus = std::log1p(-xi);
    const Complex z = zp.z;
    const Complex zpri = zp.z_prime;

    HFunctions h;
    h.h_I = [=](HalfInteger x) {
        const int k = static_cast<int>((x.twice - 1) / 2); // x - 1/2
        return std::exp(log_root4 + 0.5 * x.value() * log_xi + 0.5 * zs * log_one_minus +
                        0.5 * log_poch_product(z + 1.0, zpri + 1.0, k) -
                        std::lgamma(x.value() + 0.5));
    };
    h.h_II = [=](HalfInteger x) {
        const int k = static_cast<int>((-x.twice - 1) / 2); // -x - 1/2
        return std::exp(log_root4 - 0.5 * x.value() * log_xi - 0.5 * zs * log_one_minus +
                        0.5 * log_poch_product(1.0 - z, 1.0 - zpri, k) -
                        std::lgamma(-x.value() + 0.5));
    };
    return h;
}

ContinuousHFunctions h_whittaker_continuous(const ZParams& zp) {
    const double zz = zp.zz_prime();
    const double zs = zp.z_sum();
    const double root4 = std::pow(zz, 0.25);
    const Complex z = zp.z;
    const Complex zpri = zp.z_prime;

    // Gamma(z+1)Gamma(z'+1) and Gamma(1-z)Gamma(1-z') are real and positive
    // for both families.
    Complex gp = std::exp(log_gamma(z + 1.0) + log_gamma(zpri + 1.0));
    Complex gm = std::exp(log_gamma(1.0 - z) + log_gamma(1.0 - zpri));
    if (gp.real() <= 0.0 || gm.real() <= 0.0)
        throw std::domain_error("h_whittaker_continuous: Gamma product not positive");
    const double cp = root4 / std::sqrt(gp.real());
    const double cm = root4 / std::sqrt(gm.real());

    ContinuousHFunctions h;
    h.h_I = [=](double x) {
        if (!(x > 0.0))
            throw std::domain_error("h_whittaker_continuous: h_I needs x > 0");
        return cp * std::exp(0.5 * zs * std::log(x) - 0.5 * x);
    };
    h.h_II = [=](double x) {
        if (!(x < 0.0))
            throw std::domain_error("h_whittaker_continuous: h_II needs x < 0");
        return cm * std::exp(-0.5 * zs * std::log(-x) + 0.5 * x);
    };
    return h;
}

double l_kernel_from_h(const HFunctions& h, HalfInteger x, HalfInteger y) {
    if (x == y || x.positive() == y.positive())
        return 0.0;
    if (x.positive())
        return h.h_I(x) * h.h_II(y) / (x - y);
    return h.h_I(y) * h.h_II(x) / (x - y);
}

double l_kernel(HalfInteger x, HalfInteger y, const ThetaParams& p) {
    return l_kernel_from_h(h_bessel(p), x, y);
}

} // namespace dbk
