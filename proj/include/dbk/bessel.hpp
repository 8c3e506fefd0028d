#pragma once

#include <complex>

#include "dbk/gamma.hpp"
#include "dbk/precision.hpp"

namespace dbk {

// J_nu(x) for arbitrary real order, ascending series
//   sum_k (-1)^k (x/2)^{nu+2k} / (k! Gamma(nu+k+1)),
// terms assembled in log space; Gamma poles (negative integer orders)
// contribute zero terms. Requires x >= 0.
double bessel_j(double nu, double x, const PrecisionPolicy& policy = {});

// Same series with complex order (real argument). Used by the closed-form
// matrix solutions off the real axis; intended for |nu| <~ 60.
Complex bessel_j(Complex nu, double x, const PrecisionPolicy& policy = {});

// dJ_nu(x)/dnu by term-by-term differentiation: each series term picks up
// ln(x/2) - psi(nu+k+1), with psi/Gamma regularized across the poles.
// Requires x > 0.
double bessel_j_dnu(double nu, double x, const PrecisionPolicy& policy = {});

} // namespace dbk
