#pragma once

#include <vector>

#include "dbk/params.hpp"
#include "dbk/precision.hpp"

namespace dbk {

struct LimitReport {
    std::vector<double> grid;             // scale values, in input order
    std::vector<double> errors;           // max-abs deviation per scale
    std::vector<double> secondary_errors; // aux family (h-functions), may be empty
    std::vector<double> adjusted_points;  // evaluation points after any lattice nudge
    double rate_estimate = 0.0;           // log-log slope of errors vs grid
    bool has_rate = false;                // needs >= 3 grid points

    bool strictly_decreasing() const;
};

// z = z' = s, xi = theta/s^2 (so xi z z' = theta): hypergeometric kernel vs
// discrete Bessel kernel on |x|,|y| <= 11/2, and m^d vs the closed-form
// Bessel solution at two off-lattice points. Requires s >= 100.
LimitReport check_z_degeneration(double theta, const std::vector<double>& s_grid,
                                 const PrecisionPolicy& policy = {});

// xi -> 1: compares m^d(u/(1-xi)) against m^c(u) entrywise, column 1 at +u
// and column 2 at -u (each entry at the real points where it is analytic),
// plus the h-function limit h^d at the lattice point nearest x/(1-xi) vs h^c.
LimitReport check_xi_limit(double z, double z_prime, const std::vector<double>& xi_grid,
                           const std::vector<double>& u_points,
                           const PrecisionPolicy& policy = {});

// F(a,b;x;1-x/y) -> y^{(a+b-1)/2} e^{y/2} W_{(1-a-b)/2,(a-b)/2}(y) as x grows.
LimitReport check_f_to_w(double a, double b, double y, const std::vector<double>& x_grid,
                         const PrecisionPolicy& policy = {});

} // namespace dbk
