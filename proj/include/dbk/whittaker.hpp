#pragma once

#include <complex>

#include "dbk/precision.hpp"

namespace dbk {

using Complex = std::complex<double>;

// Kummer U(a,b;z) for real a and z off (-inf,0], via exp-sinh quadrature of
//   (1/Gamma(a)) int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt
// on the ray rotated by -arg z (so the decay is along the real direction).
// For a <= 0 the value is reached by the three-term recurrence in a from the
// quadrature-computable region a in (0,2].
Complex confluent_u(double a, Complex b, Complex z, const PrecisionPolicy& policy = {});

// Whittaker W_{kappa,mu}(v) = e^{-v/2} v^{mu+1/2} U(mu-kappa+1/2, 1+2mu; v),
// v > 0. Uses the mu -> |mu| symmetry to keep the U parameter as large as
// possible. Fails loudly outside the supported region.
double whittaker_w(double kappa, double mu, double v, const PrecisionPolicy& policy = {});

// Principal-branch extension for v off the negative real axis.
Complex whittaker_w(double kappa, double mu, Complex v, const PrecisionPolicy& policy = {});

} // namespace dbk
