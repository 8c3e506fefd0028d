#include "dbk/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace dbk {

namespace {

void check_argument(double x) {
    if (!(x >= 0.0))
        throw std::domain_error("bessel_j: argument must be >= 0");
}

[[noreturn]] void no_convergence() {
    throw std::runtime_error("bessel_j: series did not converge within max_terms");
}

} // namespace

double bessel_j(double nu, double x, const PrecisionPolicy& policy) {
    check_argument(x);
    if (x == 0.0) {
        if (nu == 0.0)
            return 1.0;
        if (nu > 0.0 || nu == std::floor(nu))
            return 0.0;
        throw std::domain_error("bessel_j: unbounded at x=0 for negative non-integer order");
    }
    const double lxh = std::log(0.5 * x);
    double sum = 0.0;
    double max_mag = 0.0;
    int calm = 0;
    for (int k = 0; k < policy.max_terms; ++k) {
        SignedLogGamma slg = signed_log_gamma(nu + k + 1.0);
        double term = 0.0;
        if (!slg.pole) {
            double lt = (nu + 2.0 * k) * lxh - std::lgamma(k + 1.0) - slg.log_abs;
            term = slg.sign * std::exp(lt);
            if (k % 2 == 1)
                term = -term;
        }
        sum += term;
        max_mag = std::max(max_mag, std::abs(term));
        if (max_mag > 0.0 && std::abs(term) <= policy.target_rel_error * std::abs(sum)) {
            if (++calm >= 2)
                return sum;
        } else {
            calm = 0;
        }
    }
    no_convergence();
}

Complex bessel_j(Complex nu, double x, const PrecisionPolicy& policy) {
    if (nu.imag() == 0.0)
        return bessel_j(nu.real(), x, policy);
    check_argument(x);
    if (x == 0.0)
        return nu.real() > 0.0 ? 0.0 : throw std::domain_error("bessel_j: x=0 at complex order");
    const double lxh = std::log(0.5 * x);
    Complex sum = 0.0;
    double max_mag = 0.0;
    int calm = 0;
    for (int k = 0; k < policy.max_terms; ++k) {
        Complex lt = (nu + 2.0 * k) * lxh - std::lgamma(k + 1.0) - log_gamma(nu + (k + 1.0));
        Complex term = std::exp(lt);
        if (k % 2 == 1)
            term = -term;
        sum += term;
        max_mag = std::max(max_mag, std::abs(term));
        if (max_mag > 0.0 && std::abs(term) <= policy.target_rel_error * std::abs(sum)) {
            if (++calm >= 2)
                return sum;
        } else {
            calm = 0;
        }
    }
    no_convergence();
}

double bessel_j_dnu(double nu, double x, const PrecisionPolicy& policy) {
    if (!(x > 0.0))
        throw std::domain_error("bessel_j_dnu: argument must be > 0");
    const double lxh = std::log(0.5 * x);
    double sum = 0.0;
    double max_mag = 0.0;
    int calm = 0;
    for (int k = 0; k < policy.max_terms; ++k) {
        double s = nu + k + 1.0;
        double base = std::exp((nu + 2.0 * k) * lxh - std::lgamma(k + 1.0));
        double term = base * (lxh * reciprocal_gamma(s) - psi_over_gamma(s));
        if (k % 2 == 1)
            term = -term;
        sum += term;
        max_mag = std::max(max_mag, std::abs(term));
        if (max_mag > 0.0 && std::abs(term) <= policy.target_rel_error * std::abs(sum)) {
            if (++calm >= 2)
                return sum;
        } else {
            calm = 0;
        }
    }
    no_convergence();
}

} // namespace dbk
