#include <doctest.h>

#include <cmath>

#include "dbk/gamma.hpp"
#include "dbk/hyp2f1.hpp"
#include "dbk/scaling.hpp"
#include "dbk/whittaker.hpp"

using namespace dbk;

TEST_SUITE("scaling") {

TEST_CASE("z-degeneration errors shrink with the scale") {
    LimitReport rep = check_z_degeneration(1.0, {100.0, 1000.0});
    REQUIRE(rep.errors.size() == 2);
    CHECK(rep.strictly_decreasing());
    CHECK_FALSE(rep.has_rate); // two points carry no rate

    LimitReport one = check_z_degeneration(4.0, {300.0});
    CHECK(one.errors.size() == 1);
    CHECK_FALSE(one.has_rate);
    CHECK(one.strictly_decreasing()); // single point: trivially decreasing
}

TEST_CASE("xi -> 1: solution and h-function errors both shrink") {
    LimitReport rep = check_xi_limit(0.3, 0.4, {0.9, 0.99}, {3.3});
    REQUIRE(rep.errors.size() == 2);
    CHECK(rep.errors[1] < rep.errors[0]);
    REQUIRE(rep.secondary_errors.size() == 2);
    CHECK(rep.secondary_errors[1] < rep.secondary_errors[0]);
}

TEST_CASE("xi -> 1 nudges evaluation points off the lattice") {
    // u = 3.25 collides: 3.25/(1-0.9) = 32.5 lies on Z'
    LimitReport rep = check_xi_limit(0.3, 0.4, {0.9}, {3.25});
    REQUIRE(rep.adjusted_points.size() == 1);
    CHECK(rep.adjusted_points[0] != 3.25);
}

TEST_CASE("2F1 -> W limit along the stated x grid") {
    LimitReport rep = check_f_to_w(0.3, 0.7, 2.0, {50.0, 200.0, 800.0});
    CHECK(rep.strictly_decreasing());
    CHECK(rep.has_rate);

    // a + b = 1 kills the power prefactor: target is e^{y/2} W_{0,(a-b)/2}(y)
    double y = 2.0;
    double target = std::exp(0.5 * y) * whittaker_w(0.0, -0.2, y);
    PrecisionPolicy wide(1e-12, 100000);
    double f = gauss_2f1(0.3, 0.7, 800.0, 1.0 - 800.0 / y, wide);
    CHECK(std::abs(f - target) < 2e-4);

    // negative control: the wrong kappa sign does not converge
    double wrong = std::exp(0.5 * (0.3 + 0.9 - 1.0) * std::log(y) + 0.5 * y) *
                   whittaker_w(-0.5 * (1.0 - 0.3 - 0.9), 0.5 * (0.3 - 0.9), y, wide);
    std::vector<double> devs;
    for (double x : {50.0, 200.0, 800.0})
        devs.push_back(std::abs(gauss_2f1(0.3, 0.9, x, 1.0 - x / y, wide) - wrong));
    bool decreasing = devs[1] < devs[0] && devs[2] < devs[1];
    CHECK_FALSE(decreasing);
}

TEST_CASE("degeneration and xi-limit hold simultaneously for one (z, z') family") {
    // the same complementary parameters pass both transitions
    LimitReport deg = check_z_degeneration(1.0, {300.0, 3000.0});
    LimitReport xi = check_xi_limit(0.3, 0.4, {0.9, 0.98}, {3.3});
    CHECK(deg.strictly_decreasing());
    CHECK(xi.strictly_decreasing());
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(check_z_degeneration(1.0, {50.0}), std::domain_error);
    CHECK_THROWS_AS(check_f_to_w(0.3, 0.7, -1.0, {50.0}), std::domain_error);
    CHECK_THROWS_AS(check_xi_limit(0.3, 0.4, {0.9}, {-3.3}), std::domain_error);
}

} // TEST_SUITE
