#pragma once

#include <cstdint>
#include <vector>

#include "dbk/half_integer.hpp"
#include "dbk/kernels.hpp"

namespace dbk {

// Up to four distinct lattice points.
struct PointQuery {
    std::vector<HalfInteger> points;

    explicit PointQuery(std::vector<HalfInteger> pts);
    int k() const { return static_cast<int>(points.size()); }
};

struct RhoEstimate {
    double value = 0.0;
    double std_error = 0.0; // 0 for the deterministic routes
    enum class Method { det, exact, mc } method = Method::det;
};

// rho_k(x_1..x_k) = det [K(x_i, x_j)], direct cofactor expansion.
RhoEstimate rho_det(const PointQuery& q, const KernelEvaluator& kernel);

// Exact route: sum over n <= n_cut of the Poisson weight times the exact
// Plancherel mass of {lambda : q subset X(lambda)}, partition enumeration and
// hook-length dimensions in integer arithmetic. Refuses if the Poisson tail
// beyond n_cut exceeds 1e-12.
RhoEstimate rho_exact(const PointQuery& q, double theta, int n_cut);

// Smallest n_cut <= 30 passing the tail gate.
int choose_n_cut(double theta);

// Monte Carlo route over poissonized RSK samples; streams are keyed by the
// sample index, so the estimate is independent of evaluation order.
RhoEstimate rho_mc(const PointQuery& q, double theta, int samples, std::uint64_t seed);

} // namespace dbk
