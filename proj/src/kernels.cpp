#include "dbk/kernels.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "dbk/bessel.hpp"

namespace dbk {

double discrete_bessel_k(HalfInteger x, HalfInteger y, const ThetaParams& p,
                         const PrecisionPolicy& policy) {
    const double arg = 2.0 * p.eta;
    const double rt = p.eta; // sqrt(theta)
    auto J = [&](double nu) { return bessel_j(nu, arg, policy); };
    if (x == y) {
        // Same value on both sign blocks.
        double a = std::abs(x.value());
        return rt * (bessel_j_dnu(a - 0.5, arg, policy) * J(a + 0.5) -
                     J(a - 0.5) * bessel_j_dnu(a + 0.5, arg, policy));
    }
    const double xv = x.value();
    const double yv = y.value();
    const double dxy = x - y;
    if (x.positive() && y.positive())
        return rt * (J(xv - 0.5) * J(yv + 0.5) - J(xv + 0.5) * J(yv - 0.5)) / dxy;
    if (x.positive())
        return rt * (J(xv - 0.5) * J(-yv - 0.5) + J(xv + 0.5) * J(-yv + 0.5)) / dxy;
    if (y.positive())
        return rt * (J(-xv - 0.5) * J(yv - 0.5) + J(-xv + 0.5) * J(yv + 0.5)) / dxy;
    return rt * (J(-xv + 0.5) * J(-yv - 0.5) - J(-xv - 0.5) * J(-yv + 0.5)) / dxy;
}

namespace {

double to_real_checked(Complex v, const char* where) {
    if (!(std::abs(v.imag()) <= 1e-10 * std::max(1.0, std::abs(v.real()))))
        throw std::runtime_error(std::string(where) + ": imaginary residue too large");
    return v.real();
}

// Shared block assembly over abstract h values and sign data.
double assemble_impl(const MatrixSolution& m, double hx, double hy, bool xpos, bool ypos,
                     double x, double y) {
    if (x == y) {
        auto col = regular_column(m, x);
        Mat2 d = derivative_at(m, x);
        Complex val;
        if (xpos)
            val = hx * hx * (-d.a11 * col[1] + d.a21 * col[0]);
        else
            val = hx * hx * (-d.a22 * col[0] + d.a12 * col[1]);
        return to_real_checked(val, "assemble_from_solution(diagonal)");
    }
    auto cx = regular_column(m, x);
    auto cy = regular_column(m, y);
    Complex num;
    if (xpos && ypos)
        num = -cx[0] * cy[1] + cx[1] * cy[0]; // -m11(x)m21(y) + m21(x)m11(y)
    else if (xpos && !ypos)
        num = cx[0] * cy[1] - cx[1] * cy[0]; // m11(x)m22(y) - m21(x)m12(y)
    else if (!xpos && ypos)
        num = cx[1] * cy[0] - cx[0] * cy[1]; // m22(x)m11(y) - m12(x)m21(y)
    else
        num = -cx[1] * cy[0] + cx[0] * cy[1]; // -m22(x)m12(y) + m12(x)m22(y)
    return to_real_checked(hx * hy * num / (x - y), "assemble_from_solution");
}

} // namespace

double assemble_from_solution(const MatrixSolution& m, const HFunctions& h,
                              HalfInteger x, HalfInteger y) {
    double hx = x.positive() ? h.h_I(x) : h.h_II(x);
    double hy = y.positive() ? h.h_I(y) : h.h_II(y);
    return assemble_impl(m, hx, hy, x.positive(), y.positive(), x.value(), y.value());
}

double assemble_from_solution(const MatrixSolution& m, const ContinuousHFunctions& h,
                              double x, double y) {
    if (x == 0.0 || y == 0.0)
        throw std::domain_error("assemble_from_solution: continuous points must be nonzero");
    double hx = x > 0.0 ? h.h_I(x) : h.h_II(x);
    double hy = y > 0.0 ? h.h_I(y) : h.h_II(y);
    return assemble_impl(m, hx, hy, x > 0.0, y > 0.0, x, y);
}

double hypergeometric_kernel(HalfInteger x, HalfInteger y, const ZParams& zp,
                             const PrecisionPolicy& policy) {
    return assemble_from_solution(m_hypergeometric(zp, policy), h_zmeasure(zp), x, y);
}

double whittaker_kernel(double x, double y, const ZParams& zp, const PrecisionPolicy& policy) {
    return assemble_from_solution(m_whittaker(zp, policy), h_whittaker_continuous(zp), x, y);
}

KernelEvaluator make_bessel_kernel(const ThetaParams& p, const PrecisionPolicy& policy) {
    return {[p, policy](HalfInteger x, HalfInteger y) {
        return discrete_bessel_k(x, y, p, policy);
    }};
}

KernelEvaluator make_hypergeometric_kernel(const ZParams& zp, const PrecisionPolicy& policy) {
    // One solution evaluator shared across all kernel evaluations.
    auto m = std::make_shared<MatrixSolution>(m_hypergeometric(zp, policy));
    auto h = std::make_shared<HFunctions>(h_zmeasure(zp));
    return {[m, h](HalfInteger x, HalfInteger y) {
        return assemble_from_solution(*m, *h, x, y);
    }};
}

KernelEvaluator make_l_kernel(const ThetaParams& p) {
    return {[p](HalfInteger x, HalfInteger y) { return l_kernel(x, y, p); }};
}

} // namespace dbk
