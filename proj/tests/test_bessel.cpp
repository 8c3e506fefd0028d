#include <doctest.h>

#include <cmath>

#include "dbk/bessel.hpp"
#include "oracles.hpp"

using namespace dbk;

TEST_SUITE("bessel") {

TEST_CASE("series values against classical tables and half-order closed forms") {
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j(3.0, 0.0) == 0.0);
    CHECK(bessel_j(0.0, 2.0) == doctest::Approx(0.22389077914123567).epsilon(1e-13));
    CHECK(bessel_j(1.0, 2.0) == doctest::Approx(0.57672480775687338).epsilon(1e-13));
    CHECK(bessel_j(2.0, 2.0) == doctest::Approx(0.35283402861563772).epsilon(1e-13));
    // J_{1/2}(x) = sqrt(2/(pi x)) sin x, J_{-1/2}(x) = sqrt(2/(pi x)) cos x
    for (double x : {0.5, 2.0, 5.0}) {
        double pref = std::sqrt(2.0 / (M_PI * x));
        CHECK(bessel_j(0.5, x) == doctest::Approx(pref * std::sin(x)).epsilon(1e-12));
        CHECK(bessel_j(-0.5, x) == doctest::Approx(pref * std::cos(x)).epsilon(1e-12));
    }
}

TEST_CASE("negative integer orders: J_{-n} = (-1)^n J_n") {
    for (int n = 0; n <= 6; ++n)
        for (double x : {0.5, 2.0, 5.0}) {
            double sign = n % 2 == 0 ? 1.0 : -1.0;
            CHECK(bessel_j(-static_cast<double>(n), x) ==
                  doctest::Approx(sign * bessel_j(static_cast<double>(n), x))
                      .epsilon(1e-10));
        }
    // one order out of the Theorem block: J_{-3}(2.5) = -J_3(2.5)
    CHECK(bessel_j(-3.0, 2.5) == doctest::Approx(-bessel_j(3.0, 2.5)).epsilon(1e-12));
}

TEST_CASE("three-term recurrence J_{nu-1} + J_{nu+1} = (nu/eta) J_nu at x = 2 eta") {
    for (double eta : {0.5, 1.0, 2.0})
        for (double nu : {0.7, 1.5, 4.0, -2.3}) {
            double lhs = bessel_j(nu - 1.0, 2.0 * eta) + bessel_j(nu + 1.0, 2.0 * eta);
            double rhs = nu / eta * bessel_j(nu, 2.0 * eta);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        }
}

TEST_CASE("derivative formulas for sqrt(eta) J_nu(2 eta) in eta") {
    const double step = 1e-4;
    for (double nu : {0.5, 2.0, 3.5})
        for (double eta : {0.8, 1.5}) {
            auto f = [nu](double e) { return std::sqrt(e) * bessel_j(nu, 2.0 * e); };
            double d = oracles::richardson_derivative(f, eta, step);
            double rhs1 = (nu + 0.5) / std::sqrt(eta) * bessel_j(nu, 2.0 * eta) -
                          2.0 * std::sqrt(eta) * bessel_j(nu + 1.0, 2.0 * eta);
            double rhs2 = (-nu + 0.5) / std::sqrt(eta) * bessel_j(nu, 2.0 * eta) +
                          2.0 * std::sqrt(eta) * bessel_j(nu - 1.0, 2.0 * eta);
            CHECK(d == doctest::Approx(rhs1).epsilon(1e-6));
            CHECK(d == doctest::Approx(rhs2).epsilon(1e-6));
        }
}

TEST_CASE("order derivative against a Richardson finite-difference oracle") {
    for (auto [nu, x] : {std::pair{0.5, 2.0}, {2.5, 3.0}, {0.0, 2.0}, {4.0, 1.0}}) {
        auto f = [x](double v) { return bessel_j(v, x); };
        double fd = oracles::richardson_derivative(f, nu, 1e-4);
        double an = bessel_j_dnu(nu, x);
        CHECK(an == doctest::Approx(fd).epsilon(1e-8));
    }
    // every term vanishes as x -> 0+ for nu >= 1
    CHECK(std::abs(bessel_j_dnu(1.0, 1e-6)) < 1e-5);
}

TEST_CASE("complex order reduces to the real path on the axis") {
    for (double nu : {0.3, -1.5, 4.0}) {
        Complex v = bessel_j(Complex(nu, 0.0), 2.0);
        CHECK(v.real() == doctest::Approx(bessel_j(nu, 2.0)).epsilon(1e-14));
        CHECK(v.imag() == 0.0);
    }
}

TEST_CASE("complex-step order derivative agrees with the series derivative") {
    // the two order-derivative routes are fully independent
    for (auto [nu, x] : {std::pair{0.7, 2.0}, {3.0, 4.0}}) {
        Complex v = bessel_j(Complex(nu, 1e-20), x);
        CHECK(v.imag() / 1e-20 == doctest::Approx(bessel_j_dnu(nu, x)).epsilon(1e-10));
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(bessel_j(0.3, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(-0.3, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(0.0, 60.0, PrecisionPolicy(1e-12, 50)), std::runtime_error);
    CHECK_THROWS_AS(bessel_j_dnu(1.0, 0.0), std::domain_error);
}

} // TEST_SUITE
