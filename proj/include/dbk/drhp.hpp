#pragma once

#include <array>
#include <vector>

#include "dbk/linalg.hpp"
#include "dbk/mat2.hpp"
#include "dbk/params.hpp"
#include "dbk/precision.hpp"
#include "dbk/window.hpp"

namespace dbk {

// Jump data of the discrete Riemann-Hilbert problem attached to the N=2 block
// operator: w(x) = sign * (-f(x) g(x)^t), rank one and nilpotent. sign=+1 is
// the standard problem; sign=-1 flips the residue condition (the hat-kernel
// problem, also used as a negative control).
struct DiscreteRHP {
    std::vector<HalfInteger> support;
    HFunctions h;
    double sign = 1.0;

    std::array<double, 2> f(HalfInteger x) const;
    std::array<double, 2> g(HalfInteger x) const;
    Mat2 jump(HalfInteger x) const; // w(x)
};

DiscreteRHP make_discrete_rhp(HFunctions h, const Window& w, double sign = 1.0);

// Which 1/u coefficient the closed-form Bessel solution carries at infinity.
enum class BesselBranch { beta_minus_eta, beta_plus_eta };

// Closed-form solution of the Bessel DRHP,
//   m(u) = sqrt(eta) [[J_{u-1/2}, J_{-u+1/2}], [-J_{u+1/2}, J_{-u-1/2}]]
//          * diag(eta^{-u} Gamma(u+1/2), eta^{u} Gamma(-u+1/2)),
// J at argument 2 eta; the beta=+eta branch flips the off-diagonal signs and
// solves the sign-flipped problem instead.
MatrixSolution m_bessel(const ThetaParams& p,
                        BesselBranch branch = BesselBranch::beta_minus_eta,
                        const PrecisionPolicy& policy = {});

// Closed-form solution of the z-measure DRHP (Gauss 2F1 entries).
MatrixSolution m_hypergeometric(const ZParams& zp, const PrecisionPolicy& policy = {});

// Closed-form solution of the continuous problem (Whittaker entries),
// principal branches with arg u in (-pi, pi). Entries are computed where they
// are analytic; at real u the column sitting on its branch cut is NaN.
MatrixSolution m_whittaker(const ZParams& zp, const PrecisionPolicy& policy = {});

// Entries of the column of m that is regular at a real point x:
// (m11, m21) for x > 0, (m12, m22) for x < 0.
std::array<Complex, 2> regular_column(const MatrixSolution& m, double x);

struct ResidueReport {
    double residual = 0.0;      // max entry |Res - lim m w|
    double residue_norm = 0.0;  // max entry |Res|
};

// Residue by 64-node trapezoidal quadrature on |zeta - x| = 1/4 against the
// circle mean of m(zeta) w(x) (analytic there since w^2 = 0).
ResidueReport verify_residue(const MatrixSolution& m, const DiscreteRHP& prob, HalfInteger x);

// Growth of the regularized product m(zeta)(I + w(x)/(zeta - x)) under
// radius halvings r, r/2, r/4, r/8; bounded for a genuine solution.
std::vector<double> regularized_growth(const MatrixSolution& m, const DiscreteRHP& prob,
                                       HalfInteger x, double r0 = 0.25);

struct SolveResult {
    Window window;
    std::vector<Mat2> mu;       // mu(x), row-wise solution of the linear system
    std::vector<Mat2> mu_tilde;
    MatrixSolution m;           // I - sum mu(y) (f g^t)(y) / (zeta - y)
    MatrixSolution m_tilde;     // I + sum mu~(y) (g f^t)(y) / (zeta - y)
};

// Dense solve of mu(x) = I - sum_{y != x} mu(y)(f g^t)(y)/(x-y) and of the
// companion system for mu~; reconstructs both solution evaluators.
SolveResult solve_linear(const DiscreteRHP& prob, const Window& w,
                         double tail_threshold = 1e-13);

struct FGResult {
    std::vector<std::array<double, 2>> F;
    std::vector<std::array<double, 2>> G;
    std::vector<double> k_diag; // G^t(x) lim m'(zeta) f(x)
};

// F(x) = lim m(zeta) f(x), G(x) = lim (m^t)^{-1}(zeta) g(x) over the window.
// The limits are exact values of the regular column (m(zeta)f(x) extends
// analytically through x); the derivative on the diagonal is complex-step or
// the analytic derivative when the solution carries one.
FGResult compute_FG(const MatrixSolution& m, const DiscreteRHP& prob, const Window& w);

// Gauge transforms: n(u) = m(u) diag(eta^u, eta^{-u});
// p(u) = n(u) diag(1/Gamma(u+1/2), 1/Gamma(-u+1/2)) is entire.
MatrixSolution gauge_n(const MatrixSolution& m, const ThetaParams& p);
MatrixSolution gauge_p(const MatrixSolution& n);

// Value of an entire matrix function at a point via the 64-node circle mean
// (needed at lattice points, where the factors of p are 0 * inf pointwise).
Mat2 entire_value_at(const MatrixSolution& m, double x, double radius = 0.125);

struct AsymptoticsReport {
    Complex alpha{0.0};
    Complex beta{0.0};
    double spread = 0.0;         // relative disagreement between the radii
    double symmetry_defect = 0.0; // departure from [[a, b], [b, -a]]
};

// Fits m(zeta) ~ I + M1/zeta on integer-radius circles (64 nodes each); the
// circle mean of (m - I) zeta is exactly the sum of enclosed residues, so the
// superexponential tail makes this a spectral extraction of M1.
AsymptoticsReport extract_asymptotics(const MatrixSolution& m,
                                      std::vector<double> radii = {});

} // namespace dbk
