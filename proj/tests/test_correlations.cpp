#include <doctest.h>

#include <cmath>

#include "dbk/correlations.hpp"
#include "dbk/partitions.hpp"

using namespace dbk;

TEST_SUITE("correlations") {

TEST_CASE("query validation") {
    CHECK_THROWS_AS(PointQuery({}), std::invalid_argument);
    CHECK_THROWS_AS(PointQuery({half(1), half(1)}), std::invalid_argument);
    CHECK_THROWS_AS(PointQuery({half(1), half(3), half(5), half(7), half(9)}),
                    std::invalid_argument);
}

TEST_CASE("one-point determinant is the kernel diagonal") {
    ThetaParams t(1.0);
    KernelEvaluator k = make_bessel_kernel(t);
    CHECK(rho_det(PointQuery({half(1)}), k).value ==
          doctest::Approx(discrete_bessel_k(half(1), half(1), t)).epsilon(1e-14));
}

TEST_CASE("exact route: regression pin and n_cut consistency") {
    PointQuery q({half(1)});
    // pinned from the first gated run; n_cut = 18 and 25 agree to 1e-12
    double v18 = rho_exact(q, 0.5, 18).value;
    double v25 = rho_exact(q, 0.5, 25).value;
    CHECK(v18 == doctest::Approx(0.343684504272428).epsilon(1e-12));
    CHECK(std::abs(v18 - v25) <= 1e-12);
    // theta -> 0 concentrates on the empty diagram
    CHECK(rho_exact(q, 0.0, 0).value == 0.0);
    // tail gate refuses small n_cut
    CHECK_THROWS_AS(rho_exact(q, 0.5, 6), std::runtime_error);
}

TEST_CASE("two enumeration routes for the pair {1/2, -1/2}") {
    // q subset X(lambda) iff the innermost Frobenius hook is (0|0)
    const double theta = 0.5;
    const int n_cut = 18;
    double direct = rho_exact(PointQuery({half(1), half(-1)}), theta, n_cut).value;
    long double alt = 0.0L;
    double pois = std::exp(-theta);
    long double fact = 1.0L;
    for (int n = 0; n <= n_cut; ++n) {
        if (n > 0) {
            pois *= theta / n;
            fact *= n;
        }
        unsigned __int128 match = 0;
        for (const YoungDiagram& l : enumerate_partitions(n)) {
            FrobeniusCoords fc = frobenius(l);
            if (fc.d() > 0 && fc.p.back() == 0 && fc.q.back() == 0) {
                std::uint64_t d = dimension(l);
                match += static_cast<unsigned __int128>(d) * d;
            }
        }
        alt += static_cast<long double>(pois) * (static_cast<long double>(match) / fact);
    }
    CHECK(direct == doctest::Approx(static_cast<double>(alt)).epsilon(1e-13));
}

TEST_CASE("determinantal vs exact on the acceptance grid, theta = 0.5") {
    ThetaParams t(0.5);
    KernelEvaluator k = make_bessel_kernel(t);
    int n_cut = choose_n_cut(0.5);
    for (int a : {1, -1, 3, -3, 5, -5}) {
        PointQuery q({HalfInteger(a)});
        CHECK(std::abs(rho_det(q, k).value - rho_exact(q, 0.5, n_cut).value) <= 1e-9);
    }
    PointQuery q2({half(1), half(3)});
    CHECK(std::abs(rho_det(q2, k).value - rho_exact(q2, 0.5, n_cut).value) <= 1e-9);
}

TEST_CASE("monotone under adding points (exact route)") {
    const int n_cut = 18;
    double one = rho_exact(PointQuery({half(1)}), 1.0, n_cut).value;
    double two = rho_exact(PointQuery({half(1), half(3)}), 1.0, n_cut).value;
    double three = rho_exact(PointQuery({half(1), half(3), half(-1)}), 1.0, n_cut).value;
    CHECK(two <= one);
    CHECK(three <= two);
}

TEST_CASE("Monte Carlo route against the determinantal reference") {
    ThetaParams t(4.0);
    KernelEvaluator k = make_bessel_kernel(t);
    for (auto pts : {std::vector<HalfInteger>{half(1)}, {half(1), half(3)}}) {
        PointQuery q(pts);
        RhoEstimate mc = rho_mc(q, 4.0, 200000, 20260808);
        RhoEstimate det = rho_det(q, k);
        CHECK(std::abs(mc.value - det.value) <= 4.0 * mc.std_error);
    }
    CHECK(rho_mc(PointQuery({half(1)}), 0.0, 1000, 1).value == 0.0);
    CHECK_THROWS_AS(rho_mc(PointQuery({half(1)}), 4.0, 100, 1), std::invalid_argument);

    // close the triangle at theta = 4: sampling against exact enumeration
    PointQuery q1({half(1)});
    RhoEstimate mc = rho_mc(q1, 4.0, 200000, 20260808);
    RhoEstimate ex = rho_exact(q1, 4.0, choose_n_cut(4.0));
    CHECK(std::abs(mc.value - ex.value) <= 4.0 * mc.std_error);
}

TEST_CASE("normalization: sum of one-point functions = 2 E[d]") {
    const double theta = 1.0;
    const int n_cut = choose_n_cut(theta);
    ThetaParams t(theta);
    KernelEvaluator k = make_bessel_kernel(t);
    double sum_rho = 0.0;
    for (int a = -41; a <= 41; a += 2)
        sum_rho += rho_det(PointQuery({HalfInteger(a)}), k).value;
    // E[d] = expected Frobenius length under the poissonized measure, exactly
    long double ed = 0.0L;
    double pois = std::exp(-theta);
    long double fact = 1.0L;
    for (int n = 0; n <= n_cut; ++n) {
        if (n > 0) {
            pois *= theta / n;
            fact *= n;
        }
        long double acc = 0.0L;
        for (const YoungDiagram& l : enumerate_partitions(n)) {
            std::uint64_t d = dimension(l);
            acc += static_cast<long double>(d) * d * frobenius(l).d();
        }
        ed += static_cast<long double>(pois) * (acc / fact);
    }
    CHECK(std::abs(sum_rho - 2.0 * static_cast<double>(ed)) <= 1e-6);
}

TEST_CASE("determinant stays in the probability band") {
    ThetaParams t(4.0);
    KernelEvaluator k = make_bessel_kernel(t);
    for (auto pts : {std::vector<HalfInteger>{half(1), half(-1)},
                     {half(1), half(3), half(5)},
                     {half(1), half(-1), half(3), half(-3)}}) {
        RhoEstimate r = rho_det(PointQuery(pts), k);
        CHECK(r.value >= -1e-10);
        CHECK(r.value <= 1.0 + 1e-10);
    }
}

} // TEST_SUITE
