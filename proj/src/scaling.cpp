#include "dbk/scaling.hpp"

#include <cmath>
#include <stdexcept>

#include "dbk/drhp.hpp"
#include "dbk/hyp2f1.hpp"
#include "dbk/kernels.hpp"
#include "dbk/whittaker.hpp"

namespace dbk {

bool LimitReport::strictly_decreasing() const {
    for (std::size_t i = 1; i < errors.size(); ++i)
        if (!(errors[i] < errors[i - 1]))
            return false;
    return !errors.empty();
}

namespace {

void fit_rate(LimitReport& rep) {
    const std::size_t n = rep.grid.size();
    if (n < 3)
        return;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double lx = std::log(rep.grid[i]);
        double ly = std::log(rep.errors[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    rep.rate_estimate = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    rep.has_rate = true;
}

PrecisionPolicy widen(const PrecisionPolicy& policy, int min_terms) {
    return policy.max_terms >= min_terms ? policy : policy.with_max_terms(min_terms);
}

} // namespace

LimitReport check_z_degeneration(double theta, const std::vector<double>& s_grid,
                                 const PrecisionPolicy& policy) {
    const ThetaParams tp(theta);
    const PrecisionPolicy pol = widen(policy, 4000);
    MatrixSolution bessel = m_bessel(tp, BesselBranch::beta_minus_eta, pol);
    const std::vector<double> u_points = {0.3, 1.7};

    LimitReport rep;
    for (double s : s_grid) {
        if (!(s >= 100.0))
            throw std::domain_error("check_z_degeneration: scales must be >= 100");
        ZParams zp = ZParams::complementary(s, s, theta / (s * s));
        KernelEvaluator hyper = make_hypergeometric_kernel(zp, pol);
        double err = 0.0;
        for (int xt = -11; xt <= 11; xt += 2)
            for (int yt = -11; yt <= 11; yt += 2) {
                HalfInteger x(xt), y(yt);
                err = std::max(err, std::abs(hyper.evaluate(x, y) -
                                             discrete_bessel_k(x, y, tp, pol)));
            }
        MatrixSolution md = m_hypergeometric(zp, pol);
        for (double u : u_points) {
            Mat2 a = md.evaluate(Complex(u));
            Mat2 b = bessel.evaluate(Complex(u));
            err = std::max(err, max_abs_diff(a, b));
        }
        rep.grid.push_back(s);
        rep.errors.push_back(err);
    }
    fit_rate(rep);
    return rep;
}

LimitReport check_xi_limit(double z, double z_prime, const std::vector<double>& xi_grid,
                           const std::vector<double>& u_points,
                           const PrecisionPolicy& policy) {
    const PrecisionPolicy pol = widen(policy, 100000);
    LimitReport rep;
    for (double xi : xi_grid) {
        ZParams zp = ZParams::complementary(z, z_prime, xi);
        MatrixSolution md = m_hypergeometric(zp, pol);
        MatrixSolution mc = m_whittaker(zp, pol);
        HFunctions hd = h_zmeasure(zp);
        ContinuousHFunctions hc = h_whittaker_continuous(zp);

        double err = 0.0;
        double h_err = 0.0;
        for (double u : u_points) {
            if (!(u > 0.0))
                throw std::domain_error("check_xi_limit: u points must be positive");
            // Nudge off the lattice if the scaled argument collides with Z'.
            double used = u;
            for (int guard = 0; guard < 8; ++guard) {
                double scaled = used / (1.0 - xi);
                double dist = std::abs(scaled - nearest_half_integer(scaled).value());
                if (dist >= 0.2)
                    break;
                used *= 1.013;
            }
            rep.adjusted_points.push_back(used);
            double big = used / (1.0 - xi);

            Mat2 d_plus = md.evaluate(Complex(big));
            Mat2 c_plus = mc.evaluate(Complex(used));
            err = std::max(err, std::abs(d_plus.a11 - c_plus.a11));
            err = std::max(err, std::abs(d_plus.a21 - c_plus.a21));
            Mat2 d_minus = md.evaluate(Complex(-big));
            Mat2 c_minus = mc.evaluate(Complex(-used));
            err = std::max(err, std::abs(d_minus.a12 - c_minus.a12));
            err = std::max(err, std::abs(d_minus.a22 - c_minus.a22));

            HalfInteger xp = nearest_half_integer(big);
            HalfInteger xm = nearest_half_integer(-big);
            h_err = std::max(h_err, std::abs(hd.h_I(xp) - hc.h_I(used)));
            h_err = std::max(h_err, std::abs(hd.h_II(xm) - hc.h_II(-used)));
        }
        rep.grid.push_back(xi);
        rep.errors.push_back(err);
        rep.secondary_errors.push_back(h_err);
    }
    fit_rate(rep);
    return rep;
}

LimitReport check_f_to_w(double a, double b, double y, const std::vector<double>& x_grid,
                         const PrecisionPolicy& policy) {
    if (!(y > 0.0))
        throw std::domain_error("check_f_to_w: y must be positive");
    const PrecisionPolicy pol = widen(policy, 100000);
    const double target = std::exp(0.5 * (a + b - 1.0) * std::log(y) + 0.5 * y) *
                          whittaker_w(0.5 * (1.0 - a - b), 0.5 * (a - b), y, pol);
    LimitReport rep;
    for (double x : x_grid) {
        if (!(1.0 - x / y < 1.0))
            throw std::domain_error("check_f_to_w: x/y must be positive");
        double f = gauss_2f1(a, b, x, 1.0 - x / y, pol);
        rep.grid.push_back(x);
        rep.errors.push_back(std::abs(f - target));
    }
    fit_rate(rep);
    return rep;
}

} // namespace dbk
