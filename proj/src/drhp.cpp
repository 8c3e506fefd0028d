#include "dbk/drhp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dbk/bessel.hpp"
#include "dbk/gamma.hpp"
#include "dbk/hyp2f1.hpp"
#include "dbk/resolvent.hpp"
#include "dbk/whittaker.hpp"

namespace dbk {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;
const double INF = std::numeric_limits<double>::infinity();
const double NAN_D = std::numeric_limits<double>::quiet_NaN();

Complex gamma_or_inf(Complex z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        return Complex(INF, 0.0);
    return std::exp(log_gamma(z));
}

bool near_pole_c(Complex c) {
    return c.imag() == 0.0 && c.real() <= 1e-9 &&
           std::abs(c.real() - std::round(c.real())) < 1e-9;
}

} // namespace

std::array<double, 2> DiscreteRHP::f(HalfInteger x) const {
    if (x.positive())
        return {h.h_I(x), 0.0};
    return {0.0, h.h_II(x)};
}

std::array<double, 2> DiscreteRHP::g(HalfInteger x) const {
    if (x.positive())
        return {0.0, h.h_I(x)};
    return {h.h_II(x), 0.0};
}

Mat2 DiscreteRHP::jump(HalfInteger x) const {
    auto fx = f(x);
    auto gx = g(x);
    // w = sign * (-f g^t); strictly triangular in the block splitting.
    return {Complex(-sign * fx[0] * gx[0]), Complex(-sign * fx[0] * gx[1]),
            Complex(-sign * fx[1] * gx[0]), Complex(-sign * fx[1] * gx[1])};
}

DiscreteRHP make_discrete_rhp(HFunctions h, const Window& w, double sign) {
    DiscreteRHP prob;
    prob.support = w.points();
    prob.h = std::move(h);
    prob.sign = sign;
    return prob;
}

MatrixSolution m_bessel(const ThetaParams& p, BesselBranch branch,
                        const PrecisionPolicy& policy) {
    const double arg = 2.0 * p.eta;
    const double log_eta = std::log(p.eta);
    const double sqrt_eta = std::sqrt(p.eta);
    const double s = branch == BesselBranch::beta_minus_eta ? 1.0 : -1.0;

    MatrixSolution sol;
    sol.contour_radii = {10.0, 11.0};
    for (int t = -119; t <= 119; t += 2)
        sol.pole_set.push_back(HalfInteger(t));
    sol.evaluate = [=](Complex u) {
        Complex c1 = gamma_or_inf(u + 0.5) * std::exp(-u * log_eta) * sqrt_eta;
        Complex c2 = gamma_or_inf(-u + 0.5) * std::exp(u * log_eta) * sqrt_eta;
        Mat2 m;
        m.a11 = bessel_j(u - 0.5, arg, policy) * c1;
        m.a21 = -s * bessel_j(u + 0.5, arg, policy) * c1;
        m.a12 = s * bessel_j(-u + 0.5, arg, policy) * c2;
        m.a22 = bessel_j(-u - 0.5, arg, policy) * c2;
        return m;
    };
    return sol;
}

MatrixSolution m_hypergeometric(const ZParams& zp, const PrecisionPolicy& policy) {
    const Complex z = zp.z;
    const Complex zq = zp.z_prime;
    const double xi = zp.xi;
    const double v = xi / (xi - 1.0);
    const double pref = std::sqrt(zp.zz_prime() * xi) / (1.0 - xi);

    MatrixSolution sol;
    sol.contour_radii = {10.0, 11.0};
    for (int t = -119; t <= 119; t += 2)
        sol.pole_set.push_back(HalfInteger(t));
    sol.evaluate = [=](Complex u) {
        Mat2 m;
        m.a11 = near_pole_c(u + 0.5) ? Complex(INF) : gauss_2f1(-z, -zq, u + 0.5, v, policy);
        m.a22 = near_pole_c(-u + 0.5) ? Complex(INF) : gauss_2f1(z, zq, -u + 0.5, v, policy);
        if (near_pole_c(-u + 1.5) || -u + 0.5 == Complex(0.0))
            m.a12 = Complex(INF);
        else
            m.a12 = pref * gauss_2f1(1.0 + z, 1.0 + zq, -u + 1.5, v, policy) / (-u + 0.5);
        if (near_pole_c(u + 1.5) || u + 0.5 == Complex(0.0))
            m.a21 = Complex(INF);
        else
            m.a21 = -pref * gauss_2f1(1.0 - z, 1.0 - zq, u + 1.5, v, policy) / (u + 0.5);
        return m;
    };
    // Exact u-derivative: for the principal family the entries are real on
    // the real axis only as full sums (the terms are complex), so a complex
    // step cannot recover the derivative; the series d/dc can.
    sol.derivative = [=](Complex u) {
        Mat2 d;
        d.a11 = near_pole_c(u + 0.5)
                    ? Complex(INF)
                    : gauss_2f1_c_derivative(-z, -zq, u + 0.5, v, policy).d_c;
        d.a22 = near_pole_c(-u + 0.5)
                    ? Complex(INF)
                    : -gauss_2f1_c_derivative(z, zq, -u + 0.5, v, policy).d_c;
        Complex q = -u + 0.5;
        if (near_pole_c(-u + 1.5) || q == Complex(0.0)) {
            d.a12 = Complex(INF);
        } else {
            auto s = gauss_2f1_c_derivative(1.0 + z, 1.0 + zq, -u + 1.5, v, policy);
            d.a12 = pref * (s.value - q * s.d_c) / (q * q);
        }
        Complex p = u + 0.5;
        if (near_pole_c(u + 1.5) || p == Complex(0.0)) {
            d.a21 = Complex(INF);
        } else {
            auto s = gauss_2f1_c_derivative(1.0 - z, 1.0 - zq, u + 1.5, v, policy);
            d.a21 = -pref * (p * s.d_c - s.value) / (p * p);
        }
        return d;
    };
    return sol;
}

MatrixSolution m_whittaker(const ZParams& zp, const PrecisionPolicy& policy) {
    if (zp.family != ZParams::Family::complementary)
        throw std::domain_error("m_whittaker: supported for the complementary family only");
    const double sigma = zp.z_sum();
    const double delta = 0.5 * (zp.z - zp.z_prime).real();
    const double rt = std::sqrt(zp.zz_prime());
    // Columns are only produced where the rotated-ray quadrature for W is
    // sound: within ~3 radians of the positive axis of their W argument.
    const double ARG_MAX = 3.0;

    MatrixSolution sol;
    sol.contour_radii = {10.0, 11.0};
    sol.evaluate = [=](Complex u) {
        if (u == Complex(0.0))
            throw std::domain_error("m_whittaker: u = 0");
        Mat2 m;
        m.a11 = m.a21 = m.a12 = m.a22 = Complex(NAN_D, NAN_D);
        if (std::abs(std::arg(u)) <= ARG_MAX) {
            Complex pre = std::exp(-0.5 * (sigma + 1.0) * std::log(u) + 0.5 * u);
            m.a11 = pre * whittaker_w(0.5 * (sigma + 1.0), delta, u, policy);
            m.a21 = -rt * pre * whittaker_w(0.5 * (sigma - 1.0), delta, u, policy);
        }
        if (std::abs(std::arg(-u)) <= ARG_MAX) {
            Complex pre = std::exp(0.5 * (sigma - 1.0) * std::log(-u) - 0.5 * u);
            m.a12 = rt * pre * whittaker_w(-0.5 * (sigma + 1.0), delta, -u, policy);
            m.a22 = pre * whittaker_w(0.5 * (1.0 - sigma), delta, -u, policy);
        }
        return m;
    };
    return sol;
}

std::array<Complex, 2> regular_column(const MatrixSolution& m, double x) {
    Mat2 v = m.evaluate(Complex(x));
    if (x > 0.0)
        return {v.a11, v.a21};
    return {v.a12, v.a22};
}

ResidueReport verify_residue(const MatrixSolution& m, const DiscreteRHP& prob, HalfInteger x) {
    const int N = 64;
    const double r = 0.25;
    const Mat2 w = prob.jump(x);
    Mat2 res{}, lim{};
    for (int k = 0; k < N; ++k) {
        double phi = 2.0 * PI * k / N;
        Complex e(std::cos(phi), std::sin(phi));
        Mat2 v = m.evaluate(Complex(x.value()) + r * e);
        res = res + (r / N) * e * v;
        lim = lim + (1.0 / N) * (v * w);
    }
    ResidueReport rep;
    rep.residual = max_abs_diff(res, lim);
    rep.residue_norm = res.max_abs();
    if (!std::isfinite(rep.residual))
        throw std::runtime_error("verify_residue: quadrature produced non-finite values");
    return rep;
}

std::vector<double> regularized_growth(const MatrixSolution& m, const DiscreteRHP& prob,
                                       HalfInteger x, double r0) {
    // With the residue convention Res m = lim m w, the analytic combination
    // is m(zeta)(I - w(x)/(zeta-x)): the pole part is (A - Bw)/(zeta-x) = 0.
    const Mat2 w = prob.jump(x);
    std::vector<double> norms;
    for (double r = r0; norms.size() < 4; r *= 0.5) {
        double worst = 0.0;
        for (int k = 0; k < 8; ++k) {
            double phi = 2.0 * PI * (k + 0.5) / 8;
            Complex zeta = Complex(x.value()) + r * Complex(std::cos(phi), std::sin(phi));
            Mat2 reg = m.evaluate(zeta) * (Mat2::identity() - (1.0 / (zeta - x.value())) * w);
            worst = std::max(worst, reg.max_abs());
        }
        norms.push_back(worst);
    }
    return norms;
}

namespace {

// Real 2x2 blocks of the linear system.
struct Block2 {
    double a[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
};

Block2 outer(const std::array<double, 2>& u, const std::array<double, 2>& v) {
    Block2 b;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            b.a[i][j] = u[i] * v[j];
    return b;
}

Block2 mul(const Mat2& m, const Block2& w) {
    Block2 r;
    double mm[2][2] = {{m.a11.real(), m.a12.real()}, {m.a21.real(), m.a22.real()}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.a[i][j] = mm[i][0] * w.a[0][j] + mm[i][1] * w.a[1][j];
    return r;
}

// mu(x) = I + orientation * sum_{y != x} mu(y) W(y) / (x - y), solved as two
// independent 2N-dimensional systems (the rows of mu decouple).
std::vector<Mat2> solve_mu_system(const std::vector<Block2>& w_blocks, const Window& win,
                                  double orientation) {
    const int n = win.size();
    Matrix a(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        double xi = win.point(i).value();
        for (int k = 0; k < n; ++k) {
            if (k == i) {
                a(2 * i, 2 * k) += 1.0;
                a(2 * i + 1, 2 * k + 1) += 1.0;
                continue;
            }
            double coef = -orientation / (xi - win.point(k).value());
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    a(2 * i + c, 2 * k + d) += coef * w_blocks[k].a[d][c];
        }
    }
    LuFactors lu(std::move(a));
    std::vector<Mat2> mu(n, Mat2::identity());
    for (int r = 0; r < 2; ++r) {
        std::vector<double> rhs(2 * n, 0.0);
        for (int i = 0; i < n; ++i)
            rhs[2 * i + r] = 1.0;
        std::vector<double> v = lu.solve(std::move(rhs));
        for (int k = 0; k < n; ++k) {
            if (r == 0) {
                mu[k].a11 = v[2 * k];
                mu[k].a12 = v[2 * k + 1];
            } else {
                mu[k].a21 = v[2 * k];
                mu[k].a22 = v[2 * k + 1];
            }
        }
    }
    return mu;
}

MatrixSolution evaluator_from_blocks(std::vector<Block2> b, const Window& win,
                                     double orientation) {
    std::vector<double> pts;
    for (int k = 0; k < win.size(); ++k)
        pts.push_back(win.point(k).value());
    MatrixSolution sol;
    sol.contour_radii = {static_cast<double>(win.n_max + 2), static_cast<double>(win.n_max + 5)};
    sol.pole_set = win.points();
    auto sum_terms = [b, pts, orientation](Complex zeta, int power) {
        Mat2 acc = power == 1 ? Mat2::identity() : Mat2{};
        double sgn = power == 1 ? orientation : -orientation;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            Complex d = zeta - pts[k];
            if (d == Complex(0.0))
                continue; // regular part at a pole: the popped column is never read
            Complex c = power == 1 ? sgn / d : sgn / (d * d);
            acc.a11 += c * b[k].a[0][0];
            acc.a12 += c * b[k].a[0][1];
            acc.a21 += c * b[k].a[1][0];
            acc.a22 += c * b[k].a[1][1];
        }
        return acc;
    };
    sol.evaluate = [sum_terms](Complex zeta) { return sum_terms(zeta, 1); };
    sol.derivative = [sum_terms](Complex zeta) { return sum_terms(zeta, 2); };
    return sol;
}

} // namespace

SolveResult solve_linear(const DiscreteRHP& prob, const Window& w, double tail_threshold) {
    double mass = boundary_row_mass(prob.h, w);
    if (!(mass < tail_threshold))
        throw std::runtime_error("solve_linear: window too small (boundary row mass " +
                                 std::to_string(mass) + ")");
    const int n = w.size();
    std::vector<Block2> fg(n), gf(n);
    for (int k = 0; k < n; ++k) {
        HalfInteger x = w.point(k);
        auto fx = prob.f(x);
        auto gx = prob.g(x);
        fg[k] = outer(fx, gx);
        gf[k] = outer(gx, fx);
    }

    SolveResult res{w, {}, {}, {}, {}};
    // mu = I - sum mu (f g^t)/(x-y): orientation -1; companion system +1.
    res.mu = solve_mu_system(fg, w, -1.0);
    res.mu_tilde = solve_mu_system(gf, w, +1.0);

    std::vector<Block2> b(n), bt(n);
    for (int k = 0; k < n; ++k) {
        b[k] = mul(res.mu[k], fg[k]);
        bt[k] = mul(res.mu_tilde[k], gf[k]);
    }
    res.m = evaluator_from_blocks(std::move(b), w, -1.0);
    res.m_tilde = evaluator_from_blocks(std::move(bt), w, +1.0);
    return res;
}

FGResult compute_FG(const MatrixSolution& m, const DiscreteRHP& prob, const Window& w) {
    FGResult out;
    const int n = w.size();
    out.F.resize(n);
    out.G.resize(n);
    out.k_diag.resize(n);
    for (int i = 0; i < n; ++i) {
        HalfInteger x = w.point(i);
        auto col = regular_column(m, x.value());
        Mat2 d = derivative_at(m, x.value());
        double scale, m1, m2, d1, d2;
        if (x.positive()) {
            scale = prob.h.h_I(x);
            m1 = col[0].real();
            m2 = col[1].real();
            d1 = d.a11.real();
            d2 = d.a21.real();
            out.F[i] = {scale * m1, scale * m2};
            out.G[i] = {-scale * m2, scale * m1};
        } else {
            scale = prob.h.h_II(x);
            m1 = col[0].real();
            m2 = col[1].real();
            d1 = d.a12.real();
            d2 = d.a22.real();
            out.F[i] = {scale * m1, scale * m2};
            out.G[i] = {scale * m2, -scale * m1};
        }
        out.k_diag[i] = out.G[i][0] * scale * d1 + out.G[i][1] * scale * d2;
    }
    return out;
}

MatrixSolution gauge_n(const MatrixSolution& m, const ThetaParams& p) {
    const double log_eta = std::log(p.eta);
    MatrixSolution n;
    n.pole_set = m.pole_set;
    n.contour_radii = m.contour_radii;
    auto base = m.evaluate;
    n.evaluate = [base, log_eta](Complex u) {
        Mat2 v = base(u);
        Complex e1 = std::exp(u * log_eta);
        Complex e2 = std::exp(-u * log_eta);
        return Mat2{v.a11 * e1, v.a12 * e2, v.a21 * e1, v.a22 * e2};
    };
    return n;
}

MatrixSolution gauge_p(const MatrixSolution& n) {
    MatrixSolution p;
    p.contour_radii = n.contour_radii;
    auto base = n.evaluate;
    p.evaluate = [base](Complex u) {
        Mat2 v = base(u);
        Complex r1 = reciprocal_gamma(u + 0.5);
        Complex r2 = reciprocal_gamma(-u + 0.5);
        return Mat2{v.a11 * r1, v.a12 * r2, v.a21 * r1, v.a22 * r2};
    };
    return p;
}

Mat2 entire_value_at(const MatrixSolution& m, double x, double radius) {
    const int N = 64;
    Mat2 acc{};
    for (int k = 0; k < N; ++k) {
        double phi = 2.0 * PI * k / N;
        Complex zeta = Complex(x) + radius * Complex(std::cos(phi), std::sin(phi));
        acc = acc + (1.0 / N) * m.evaluate(zeta);
    }
    return acc;
}

AsymptoticsReport extract_asymptotics(const MatrixSolution& m, std::vector<double> radii) {
    if (radii.empty())
        radii = m.contour_radii.size() >= 2 ? m.contour_radii : std::vector<double>{10.0, 11.0};
    if (radii.size() < 2)
        throw std::invalid_argument("extract_asymptotics: need at least two radii");
    const int N = 64;
    std::vector<Mat2> fits;
    for (double r : radii) {
        Mat2 acc{};
        for (int k = 0; k < N; ++k) {
            double phi = 2.0 * PI * k / N;
            Complex zeta = r * Complex(std::cos(phi), std::sin(phi));
            acc = acc + (1.0 / N) * (zeta * (m.evaluate(zeta) - Mat2::identity()));
        }
        fits.push_back(acc);
    }
    double scale = std::max(fits[0].max_abs(), 1e-30);
    AsymptoticsReport rep;
    rep.spread = max_abs_diff(fits[0], fits[1]) / scale;
    if (rep.spread > 1e-2)
        throw std::runtime_error("extract_asymptotics: fits inconsistent across radii");
    Mat2 avg = 0.5 * (fits[0] + fits[1]);
    rep.alpha = avg.a11;
    rep.beta = avg.a12;
    rep.symmetry_defect =
        std::max(std::abs(avg.a21 - rep.beta), std::abs(avg.a22 + rep.alpha)) / scale;
    return rep;
}

} // namespace dbk
