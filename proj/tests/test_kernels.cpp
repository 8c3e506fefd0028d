#include <doctest.h>

#include <cmath>

#include "dbk/bessel.hpp"
#include "dbk/drhp.hpp"
#include "dbk/gamma.hpp"
#include "dbk/kernels.hpp"
#include "dbk/window.hpp"

using namespace dbk;

TEST_SUITE("kernels") {

TEST_CASE("elementary kernel closed-form entries") {
    ThetaParams t1(1.0), t4(4.0);
    CHECK(l_kernel(half(1), half(3), t1) == 0.0); // same sign
    CHECK(l_kernel(half(1), half(1), t4) == 0.0); // diagonal
    CHECK(l_kernel(half(1), half(-1), t4) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(l_kernel(half(3), half(-1), t1) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("skew symmetry of L for all kernel families") {
    Window w(8);
    std::vector<HFunctions> hs;
    hs.push_back(h_bessel(ThetaParams(1.0)));
    hs.push_back(h_bessel(ThetaParams(4.0)));
    hs.push_back(h_zmeasure(ZParams::complementary(0.4, 0.6, 0.3)));
    hs.push_back(h_zmeasure(ZParams::principal(Complex(1.0, 2.0), 0.5)));
    for (const auto& h : hs)
        for (int i = 0; i < w.size(); ++i)
            for (int j = 0; j < w.size(); ++j) {
                double a = l_kernel_from_h(h, w.point(i), w.point(j));
                double b = l_kernel_from_h(h, w.point(j), w.point(i));
                CHECK(a + b == doctest::Approx(0.0).epsilon(1e-13));
            }
}

TEST_CASE("bessel h-pair") {
    HFunctions h1 = h_bessel(ThetaParams(1.0));
    CHECK(h1.h_I(half(1)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(h1.h_II(half(-1)) == doctest::Approx(1.0).epsilon(1e-14));
    HFunctions h4 = h_bessel(ThetaParams(4.0));
    CHECK(h4.h_I(half(9)) == doctest::Approx(std::pow(2.0, 4.5) / 24.0).epsilon(1e-13));
}

TEST_CASE("z-measure h-pair: closed form at x=1/2, reality, degeneration") {
    ZParams zp = ZParams::complementary(0.4, 0.6, 0.3);
    double expected = std::pow(0.24 * 0.3, 0.25) * std::pow(0.7, 0.5);
    CHECK(h_zmeasure(zp).h_I(half(1)) == doctest::Approx(expected).epsilon(1e-13));

    ZParams zpp = ZParams::principal(Complex(1.0, 2.0), 0.3);
    HFunctions hp = h_zmeasure(zpp);
    for (int t : {1, 5, 11})
        CHECK(std::isfinite(hp.h_I(HalfInteger(t))));

    // z = z' = s -> infinity with xi z z' = theta reproduces the Bessel pair
    ZParams deg = ZParams::complementary(1e4, 1e4, 1e-8);
    HFunctions hd = h_zmeasure(deg);
    HFunctions hb = h_bessel(ThetaParams(1.0));
    CHECK(std::abs(hd.h_I(half(1)) - hb.h_I(half(1))) < 2e-4);
    CHECK(std::abs(hd.h_II(half(-3)) - hb.h_II(half(-3))) < 2e-4);
}

TEST_CASE("z-parameter families are validated") {
    CHECK_THROWS_AS(ZParams::complementary(0.4, 1.6, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(ZParams::complementary(1.0, 1.5, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(ZParams::complementary(0.4, 0.6, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ZParams::principal(Complex(2.0, 0.0), 0.3), std::invalid_argument);
    CHECK_NOTHROW(ZParams::complementary(100.0, 100.0, 1e-4)); // degeneration family
}

TEST_CASE("discrete Bessel kernel against Bessel-product oracles") {
    ThetaParams t1(1.0);
    // frozen: (J0 J2 - J1^2)(2) / (1/2 - 3/2), recomputed from the series here
    double j0 = bessel_j(0.0, 2.0), j1 = bessel_j(1.0, 2.0), j2 = bessel_j(2.0, 2.0);
    CHECK(discrete_bessel_k(half(1), half(3), t1) ==
          doctest::Approx((j0 * j2 - j1 * j1) / (0.5 - 1.5)).epsilon(1e-13));
    CHECK(discrete_bessel_k(half(1), half(3), t1) ==
          doctest::Approx(0.25361521830790640).epsilon(1e-12));
    // diagonal: frozen against the windowed resolvent (test_resolvent recomputes)
    CHECK(discrete_bessel_k(half(1), half(1), t1) ==
          doctest::Approx(0.47493645950776520).epsilon(1e-11));
    // block symmetry
    CHECK(discrete_bessel_k(half(3), half(1), t1) ==
          doctest::Approx(discrete_bessel_k(half(1), half(3), t1)).epsilon(1e-13));
}

TEST_CASE("kernel symmetry K(x,y) = K(-y,-x) on a window") {
    ThetaParams t(2.0);
    Window w(6);
    for (int i = 0; i < w.size(); ++i)
        for (int j = 0; j < w.size(); ++j) {
            HalfInteger x = w.point(i), y = w.point(j);
            CHECK(discrete_bessel_k(x, y, t) ==
                  doctest::Approx(discrete_bessel_k(y.negated(), x.negated(), t))
                      .epsilon(1e-12));
        }
}

TEST_CASE("assembly with the identity solution collapses to L") {
    MatrixSolution ident;
    ident.evaluate = [](Complex) { return Mat2::identity(); };
    HFunctions h = h_bessel(ThetaParams(1.5));
    Window w(5);
    for (int i = 0; i < w.size(); ++i)
        for (int j = 0; j < w.size(); ++j) {
            HalfInteger x = w.point(i), y = w.point(j);
            double expected = l_kernel_from_h(h, x, y); // zero blocks included
            CHECK(assemble_from_solution(ident, h, x, y) ==
                  doctest::Approx(expected).epsilon(1e-13));
        }
}

TEST_CASE("two closed forms for the Bessel kernel coincide") {
    ThetaParams t1(1.0);
    MatrixSolution m = m_bessel(t1);
    HFunctions h = h_bessel(t1);
    CHECK(assemble_from_solution(m, h, half(1), half(-1)) ==
          doctest::Approx(discrete_bessel_k(half(1), half(-1), t1)).epsilon(1e-9));
    Window w(6);
    for (int i = 0; i < w.size(); ++i)
        for (int j = 0; j < w.size(); ++j) {
            HalfInteger x = w.point(i), y = w.point(j);
            CHECK(assemble_from_solution(m, h, x, y) ==
                  doctest::Approx(discrete_bessel_k(x, y, t1)).epsilon(1e-9));
        }
}

TEST_CASE("hypergeometric kernel degenerates to the Bessel kernel") {
    ThetaParams t1(1.0);
    ZParams deg = ZParams::complementary(1000.0, 1000.0, 1e-6);
    KernelEvaluator hyper = make_hypergeometric_kernel(deg);
    for (int xt = -5; xt <= 5; xt += 2)
        for (int yt = -5; yt <= 5; yt += 2) {
            HalfInteger x(xt), y(yt);
            CHECK(std::abs(hyper.evaluate(x, y) - discrete_bessel_k(x, y, t1)) <= 5e-3);
        }
}

TEST_CASE("continuous Whittaker kernel") {
    ZParams zp = ZParams::complementary(0.3, 0.4, 0.5);
    // regression pin: cross-checked against the m^c entries assembled by hand
    CHECK(whittaker_kernel(1.0, 2.0, zp) ==
          doctest::Approx(0.015255569397042).epsilon(1e-9));
    CHECK(std::isfinite(whittaker_kernel(1.3, 1.3, zp)));
    CHECK(std::isfinite(whittaker_kernel(-0.7, -0.7, zp)));

    ContinuousHFunctions hc = h_whittaker_continuous(zp);
    // x -> 0+ kills h_I when z + z' > 0
    CHECK(hc.h_I(1e-12) < 1e-4);
    // product identity h_I(1) h_II(-1) = sqrt(zz') e^{-1} / sqrt(prod Gamma)
    Complex g = std::exp(log_gamma(Complex(1.3)) + log_gamma(Complex(1.4)) +
                         log_gamma(Complex(0.7)) + log_gamma(Complex(0.6)));
    double expected = std::sqrt(0.12) * std::exp(-1.0) / std::sqrt(g.real());
    CHECK(hc.h_I(1.0) * hc.h_II(-1.0) == doctest::Approx(expected).epsilon(1e-12));
}

} // TEST_SUITE
