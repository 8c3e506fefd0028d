#pragma once

#include <functional>

#include "dbk/drhp.hpp"
#include "dbk/mat2.hpp"
#include "dbk/params.hpp"

namespace dbk {

// Discrete Bessel kernel in closed form: the 2x2-block combination of
// J_{.+-1/2}(2 eta) over (x-y), the diagonal by order-derivatives
// (L'Hospital). Dual route to resolvent_k over the elementary kernel.
double discrete_bessel_k(HalfInteger x, HalfInteger y, const ThetaParams& p,
                         const PrecisionPolicy& policy = {});

// K(x,y) from a 2x2 solution evaluator and an h-pair:
//   ++ : h_I(x)h_I(y)   (-m11(x)m21(y) + m21(x)m11(y)) / (x-y)
//   +- : h_I(x)h_II(y)  ( m11(x)m22(y) - m21(x)m12(y)) / (x-y)
//   -+ : h_II(x)h_I(y)  ( m22(x)m11(y) - m12(x)m21(y)) / (x-y)
//   -- : h_II(x)h_II(y) (-m22(x)m12(y) + m12(x)m22(y)) / (x-y)
// and on the diagonal the L'Hospital values with m' in place of one factor.
double assemble_from_solution(const MatrixSolution& m, const HFunctions& h,
                              HalfInteger x, HalfInteger y);

// Continuous variant of the same block assembly (x, y real, nonzero).
double assemble_from_solution(const MatrixSolution& m, const ContinuousHFunctions& h,
                              double x, double y);

double hypergeometric_kernel(HalfInteger x, HalfInteger y, const ZParams& zp,
                             const PrecisionPolicy& policy = {});

double whittaker_kernel(double x, double y, const ZParams& zp,
                        const PrecisionPolicy& policy = {});

// Type-erased discrete kernel for the correlation routines.
struct KernelEvaluator {
    std::function<double(HalfInteger, HalfInteger)> evaluate;
};

KernelEvaluator make_bessel_kernel(const ThetaParams& p, const PrecisionPolicy& policy = {});
KernelEvaluator make_hypergeometric_kernel(const ZParams& zp, const PrecisionPolicy& policy = {});
KernelEvaluator make_l_kernel(const ThetaParams& p);

} // namespace dbk
