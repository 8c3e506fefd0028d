#pragma once

#include <complex>
#include <functional>

#include "dbk/half_integer.hpp"
#include "dbk/precision.hpp"

namespace dbk {

using Complex = std::complex<double>;

// Poissonization intensity theta > 0 and eta = sqrt(theta).
struct ThetaParams {
    double theta;
    double eta;

    explicit ThetaParams(double t);
};

// (z, z', xi) with (z+k)(z'+k) > 0 for all integers k, restricted to the two
// constructively checkable families:
//   principal:     z' = conj(z), z off the real axis;
//   complementary: z, z' real in the same open unit interval (z = z' > 0 is
//                  also admitted, which the large-parameter degeneration uses).
struct ZParams {
    enum class Family { principal, complementary };

    Family family;
    Complex z;
    Complex z_prime;
    double xi;

    static ZParams principal(Complex z, double xi);
    static ZParams complementary(double z, double z_prime, double xi);

    double zz_prime() const;   // z z' (> 0)
    double z_sum() const;      // z + z' (real)
};

// Discrete h-pair: h_I on Z'_+, h_II on Z'_-.
struct HFunctions {
    std::function<double(HalfInteger)> h_I;
    std::function<double(HalfInteger)> h_II;
};

// Continuous h-pair: h_I on R_+, h_II on R_-.
struct ContinuousHFunctions {
    std::function<double(double)> h_I;
    std::function<double(double)> h_II;
};

// h_I(x) = eta^x / Gamma(x+1/2), h_II(x) = eta^{-x} / Gamma(-x+1/2).
HFunctions h_bessel(const ThetaParams& p);

// z-measure h-pair (the square roots are of products guaranteed positive by
// the ZParams families).
HFunctions h_zmeasure(const ZParams& zp);

ContinuousHFunctions h_whittaker_continuous(const ZParams& zp);

// Elementary kernel: zero on same-sign pairs and on the diagonal, otherwise
// h_I h_II / (x-y) in the block corresponding to the sign split.
double l_kernel_from_h(const HFunctions& h, HalfInteger x, HalfInteger y);
double l_kernel(HalfInteger x, HalfInteger y, const ThetaParams& p);

} // namespace dbk
