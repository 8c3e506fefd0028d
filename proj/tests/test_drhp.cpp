#include <doctest.h>

#include <cmath>

#include "dbk/drhp.hpp"
#include "dbk/kernels.hpp"
#include "dbk/resolvent.hpp"

using namespace dbk;

namespace {

// DRHP with no jump at all: h vanishes identically.
DiscreteRHP empty_rhp(const Window& w) {
    HFunctions h;
    h.h_I = [](HalfInteger) { return 0.0; };
    h.h_II = [](HalfInteger) { return 0.0; };
    return make_discrete_rhp(std::move(h), w);
}

MatrixSolution identity_solution() {
    MatrixSolution m;
    m.evaluate = [](Complex) { return Mat2::identity(); };
    m.contour_radii = {10.0, 11.0};
    return m;
}

} // namespace

TEST_SUITE("drhp") {

TEST_CASE("jump matrices are rank-one nilpotent and f,g are pointwise orthogonal") {
    Window w(10);
    DiscreteRHP prob = make_discrete_rhp(h_bessel(ThetaParams(2.0)), w);
    for (HalfInteger x : prob.support) {
        Mat2 jump = prob.jump(x);
        CHECK((jump * jump).max_abs() == 0.0);
        auto f = prob.f(x);
        auto g = prob.g(x);
        CHECK(f[0] * g[0] + f[1] * g[1] == 0.0);
    }
}

TEST_CASE("closed-form Bessel solution: unimodularity and symmetry") {
    ThetaParams t1(1.0);
    MatrixSolution m = m_bessel(t1);
    CHECK(std::abs(m.evaluate(Complex(0.2, 0.3)).det() - 1.0) <= 1e-10);
    for (Complex u : {Complex(1.3, -0.8), Complex(-4.2, 2.0), Complex(0.0, 6.0)})
        CHECK(std::abs(m.evaluate(u).det() - 1.0) <= 1e-10);

    // u <-> -u symmetry: m11(-u) = m22(u), m12(-u) = -m21(u)
    Mat2 plus = m.evaluate(Complex(0.7));
    Mat2 minus = m.evaluate(Complex(-0.7));
    CHECK(std::abs(minus.a11 - plus.a22) <= 1e-10);
    CHECK(std::abs(minus.a12 + plus.a21) <= 1e-10);
    CHECK(std::abs(minus.a21 + plus.a12) <= 1e-10);
    CHECK(std::abs(minus.a22 - plus.a11) <= 1e-10);
}

TEST_CASE("m tends to I with shrinking deviation along integer-radius contours") {
    MatrixSolution m = m_bessel(ThetaParams(1.0));
    auto deviation = [&](double r) {
        double worst = 0.0;
        for (int k = 0; k < 32; ++k) {
            double phi = 2.0 * M_PI * k / 32;
            Complex u = r * Complex(std::cos(phi), std::sin(phi));
            worst = std::max(worst, max_abs_diff(m.evaluate(u), Mat2::identity()));
        }
        return worst;
    };
    double d10 = deviation(10.0);
    double d20 = deviation(20.0);
    CHECK(d10 <= 0.2);
    CHECK(d20 < d10);
}

TEST_CASE("residue condition at the lattice points") {
    ThetaParams t1(1.0);
    Window w(20);
    DiscreteRHP prob = make_discrete_rhp(h_bessel(t1), w);
    MatrixSolution m = m_bessel(t1);
    for (int t = -9; t <= 9; t += 2)
        CHECK(verify_residue(m, prob, HalfInteger(t)).residual <= 1e-9);

    // no jump, identity solution: residual exactly 0
    DiscreteRHP nothing = empty_rhp(w);
    CHECK(verify_residue(identity_solution(), nothing, half(1)).residual <= 1e-15);

    // deliberately wrong sign of w: bounded away from zero
    DiscreteRHP wrong = make_discrete_rhp(h_bessel(t1), w, -1.0);
    CHECK(verify_residue(m, wrong, half(1)).residual > 1e-3);
}

TEST_CASE("regularized product stays bounded under radius halvings") {
    ThetaParams t1(1.0);
    Window w(20);
    DiscreteRHP prob = make_discrete_rhp(h_bessel(t1), w);
    MatrixSolution m = m_bessel(t1);
    for (int t : {1, -1, 5, -9}) {
        std::vector<double> g = regularized_growth(m, prob, HalfInteger(t));
        REQUIRE(g.size() == 4);
        for (std::size_t i = 1; i < g.size(); ++i)
            CHECK(g[i] / g[i - 1] < 1.1);
    }
}

TEST_CASE("hypergeometric closed form: det, residues, degeneration") {
    ZParams zp = ZParams::complementary(0.4, 0.6, 0.3);
    MatrixSolution md = m_hypergeometric(zp);
    CHECK(std::abs(md.evaluate(Complex(0.3)).det() - 1.0) <= 1e-9);

    Window w(20);
    DiscreteRHP prob = make_discrete_rhp(h_zmeasure(zp), w);
    CHECK(verify_residue(md, prob, half(1)).residual <= 1e-8);
    CHECK(verify_residue(md, prob, half(-3)).residual <= 1e-8);

    // z = z' = 1000, xi z z' = 1: entrywise close to the Bessel solution
    ZParams deg = ZParams::complementary(1000.0, 1000.0, 1e-6);
    MatrixSolution mdeg = m_hypergeometric(deg);
    MatrixSolution mb = m_bessel(ThetaParams(1.0));
    CHECK(max_abs_diff(mdeg.evaluate(Complex(0.25)), mb.evaluate(Complex(0.25))) <= 5e-3);
}

TEST_CASE("whittaker closed form is unimodular off the axis") {
    ZParams zp = ZParams::complementary(0.3, 0.4, 0.5);
    MatrixSolution mc = m_whittaker(zp);
    CHECK(std::abs(mc.evaluate(Complex(2.0, 0.5)).det() - 1.0) <= 1e-7);
    CHECK_THROWS_AS(m_whittaker(ZParams::principal(Complex(1.0, 2.0), 0.5)),
                    std::domain_error);
}

TEST_CASE("linear-system solve reconstructs the closed form") {
    ThetaParams t1(1.0);
    Window w(30);
    DiscreteRHP prob = make_discrete_rhp(h_bessel(t1), w);
    SolveResult sol = solve_linear(prob, w);
    MatrixSolution mb = m_bessel(t1);
    for (Complex u : {Complex(0.2, 0.3), Complex(-1.1, 0.7), Complex(3.3, -0.4),
                      Complex(0.0, 2.0), Complex(-5.2, -1.3)}) {
        CHECK(max_abs_diff(sol.m.evaluate(u), mb.evaluate(u)) <= 1e-8);
        CHECK(max_abs_diff(sol.m.evaluate(u) * sol.m_tilde.evaluate(u).transposed(),
                           Mat2::identity()) <= 1e-9);
    }
    // analytic derivative vs complex step of the closed form
    Mat2 da = sol.m.derivative(Complex(0.2, 0.3));
    Complex step(0.2, 0.3 + 1e-7);
    Mat2 fd = (1.0 / 1e-7) * (sol.m.evaluate(step) - sol.m.evaluate(Complex(0.2, 0.3)));
    (void)fd; // forward difference along i: d/dzeta = -i * difference
    Mat2 rotated{Complex(0, -1) * fd.a11, Complex(0, -1) * fd.a12, Complex(0, -1) * fd.a21,
                 Complex(0, -1) * fd.a22};
    CHECK(max_abs_diff(da, rotated) <= 1e-5);
}

TEST_CASE("zero jump means mu = I and m = I") {
    Window w(6);
    DiscreteRHP nothing = empty_rhp(w);
    SolveResult sol = solve_linear(nothing, w, 1.0);
    for (const Mat2& mu : sol.mu)
        CHECK(max_abs_diff(mu, Mat2::identity()) == 0.0);
    CHECK(max_abs_diff(sol.m.evaluate(Complex(0.3, 0.4)), Mat2::identity()) == 0.0);
}

TEST_CASE("F and G from the solution match the resolvent route") {
    ThetaParams t1(1.0);
    Window w(30);
    HFunctions h = h_bessel(t1);
    DiscreteRHP prob = make_discrete_rhp(h, w);
    WindowedOperator L = build_l(h, w);
    ResolventResult res = resolvent_k(L, h);

    for (const MatrixSolution& m : {m_bessel(t1), solve_linear(prob, w).m}) {
        FGResult fg = compute_FG(m, prob, w);
        double worst_fg = 0.0, worst_orth = 0.0, worst_diag = 0.0;
        for (int i = 0; i < w.size(); ++i) {
            for (int c = 0; c < 2; ++c) {
                worst_fg = std::max(worst_fg, std::abs(fg.F[i][c] - res.F[c][i]));
                worst_fg = std::max(worst_fg, std::abs(fg.G[i][c] - res.G[c][i]));
            }
            worst_orth = std::max(worst_orth, std::abs(fg.F[i][0] * fg.G[i][0] +
                                                       fg.F[i][1] * fg.G[i][1]));
            worst_diag = std::max(worst_diag, std::abs(fg.k_diag[i] - res.k.entries(i, i)));
        }
        CHECK(worst_fg <= 1e-8);
        CHECK(worst_orth <= 1e-9);
        CHECK(worst_diag <= 1e-8);
    }
}

TEST_CASE("gauge transforms") {
    ThetaParams t(2.25); // eta = 1.5, so the eta powers are nontrivial
    MatrixSolution m = m_bessel(t);
    MatrixSolution n = gauge_n(m, t);
    MatrixSolution p = gauge_p(n);

    // det n = det m = 1 (the diagonal factor has det 1)
    CHECK(std::abs(n.evaluate(Complex(0.4, 0.2)).det() - 1.0) <= 1e-10);

    // p is entire: bounded on shrinking circles around a lattice point
    double prev = 0.0;
    for (double r : {0.25, 0.125, 0.0625}) {
        double sup = 0.0;
        for (int k = 0; k < 16; ++k) {
            double phi = 2.0 * M_PI * k / 16;
            Complex u = Complex(0.5) + r * Complex(std::cos(phi), std::sin(phi));
            sup = std::max(sup, p.evaluate(u).max_abs());
        }
        if (prev > 0.0)
            CHECK(sup < prev * 1.1);
        prev = sup;
        CHECK(std::isfinite(sup));
    }

    // (7.7): p(x) is degenerate, p(x) = (-1)^{x-1/2} p(x) [[0,1],[1,0]]
    Mat2 p32 = entire_value_at(p, 1.5);
    Mat2 swapped{-p32.a12, -p32.a11, -p32.a22, -p32.a21};
    CHECK(max_abs_diff(p32, swapped) <= 1e-9);

    // (7.9) with beta = -eta, equivalent to Bessel contiguous relations
    for (double u : {0.3, 1.7, -2.3, 4.1}) {
        Mat2 pu = p.evaluate(Complex(u));
        Mat2 up = p.evaluate(Complex(u + 1.0));
        Mat2 um = p.evaluate(Complex(u - 1.0));
        CHECK(std::abs(up.a11 + pu.a21) <= 1e-10);
        CHECK(std::abs(-um.a21 - pu.a11) <= 1e-10);
        CHECK(std::abs(-up.a12 + pu.a22) <= 1e-10);
        CHECK(std::abs(um.a22 - pu.a12) <= 1e-10);
    }
}

TEST_CASE("eta ODE for the gauge-n solution, full matrix") {
    const double eta = 1.0, step = 1e-4;
    ThetaParams t(eta * eta);
    MatrixSolution n0 = gauge_n(m_bessel(t), t);
    ThetaParams tp((eta + step) * (eta + step)), tm((eta - step) * (eta - step));
    MatrixSolution np = gauge_n(m_bessel(tp), tp);
    MatrixSolution nm = gauge_n(m_bessel(tm), tm);
    for (double u : {0.3, 1.7, -2.3}) {
        Mat2 v = n0.evaluate(Complex(u));
        Mat2 d = (1.0 / (2.0 * step)) * (np.evaluate(Complex(u)) - nm.evaluate(Complex(u)));
        // d_eta n = (1/eta) [[u, 2 eta], [-2 eta, -u]] n  (beta = -eta)
        Mat2 rhs{u / eta * v.a11 + 2.0 * v.a21, u / eta * v.a12 + 2.0 * v.a22,
                 -2.0 * v.a11 - u / eta * v.a21, -2.0 * v.a12 - u / eta * v.a22};
        CHECK(max_abs_diff(d, rhs) / rhs.max_abs() <= 1e-6);
    }
}

TEST_CASE("asymptotics extraction: beta = -eta, and +eta on the hat branch") {
    for (double theta : {1.0, 4.0}) {
        ThetaParams t(theta);
        AsymptoticsReport rep = extract_asymptotics(m_bessel(t));
        CHECK(std::abs(rep.beta - Complex(-t.eta)) <= 1e-3);
        CHECK(rep.symmetry_defect <= 1e-6);
        AsymptoticsReport hat = extract_asymptotics(m_bessel(t, BesselBranch::beta_plus_eta));
        CHECK(std::abs(hat.beta - Complex(t.eta)) <= 1e-3);
    }
    AsymptoticsReport trivial = extract_asymptotics(identity_solution());
    CHECK(std::abs(trivial.alpha) <= 1e-14);
    CHECK(std::abs(trivial.beta) <= 1e-14);
}

TEST_CASE("hat branch solves the sign-flipped problem; two-route hat kernel") {
    ThetaParams t1(1.0);
    Window w(30);
    HFunctions h = h_bessel(t1);
    MatrixSolution mhat = m_bessel(t1, BesselBranch::beta_plus_eta);
    DiscreteRHP flipped = make_discrete_rhp(h, w, -1.0);
    CHECK(verify_residue(mhat, flipped, half(1)).residual <= 1e-9);

    WindowedOperator L = build_l(h, w);
    WindowedOperator kh = hat_k(L);
    // the flipped problem carries (i h_I, i h_II); i^2 = the minus sign here
    double worst = 0.0;
    for (int i = 0; i < w.size(); ++i)
        for (int j = 0; j < w.size(); ++j)
            worst = std::max(worst,
                             std::abs(kh.entries(i, j) +
                                      assemble_from_solution(mhat, h, w.point(i), w.point(j))));
    CHECK(worst <= 1e-8);
}

} // TEST_SUITE
