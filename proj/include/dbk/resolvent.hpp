#pragma once

#include <array>
#include <vector>

#include "dbk/linalg.hpp"
#include "dbk/params.hpp"
#include "dbk/window.hpp"

namespace dbk {

// Dense truncation of an operator on l2(Z') to a symmetric window.
struct WindowedOperator {
    Window window;
    Matrix entries;

    double operator()(HalfInteger x, HalfInteger y) const {
        return entries(window.index(x), window.index(y));
    }
};

// l1 mass of the worst boundary row of L; the truncation gate.
double boundary_row_mass(const HFunctions& h, const Window& w);

// L(x,y) = h_I(x) h_II(y)/(x-y) on the +- block, mirrored on -+, zero
// elsewhere. Refuses (runtime_error) when the boundary-row mass exceeds the
// threshold: a window too small would silently degrade every later check.
WindowedOperator build_l(const HFunctions& h, const Window& w, double tail_threshold = 1e-13);

struct ResolventResult {
    WindowedOperator k;                      // K = L (I + L)^{-1}
    std::array<std::vector<double>, 2> f, g; // block vectors of the h split
    std::array<std::vector<double>, 2> F, G; // (I+L)^{-1} f_j, (I+L^t)^{-1} g_j
    double condition = 0.0;                  // kappa_1(I + L)
};

ResolventResult resolvent_k(const WindowedOperator& l, const HFunctions& h,
                            double cond_threshold = 1e8);

struct StructureReport {
    double max_offdiag_residual = 0.0; // K(x,y) vs F^t(x) G(y)/(x-y)
    double max_diag_residual = 0.0;    // K(x,x) vs -sum_y L(x,y) K(y,x)
    double max_fg_orthogonality = 0.0; // F^t(x) G(x)
};

StructureReport check_integrable_structure(const WindowedOperator& l, const ResolventResult& r);

// (T h)(x) = sum_{x' != x} h(x')/(x - x'), the lattice principal-value analog.
std::vector<double> apply_T(const std::vector<double>& h, const Window& w);

// Hat kernel K^ = L (L - 1)^{-1}.
WindowedOperator hat_k(const WindowedOperator& l, double cond_threshold = 1e8);

} // namespace dbk
