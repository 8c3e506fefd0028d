#include "dbk/resolvent.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dbk {

double boundary_row_mass(const HFunctions& h, const Window& w) {
    const int n = w.size();
    double worst = 0.0;
    for (int row : {0, n - 1}) {
        HalfInteger x = w.point(row);
        double mass = 0.0;
        for (int j = 0; j < n; ++j)
            mass += std::abs(l_kernel_from_h(h, x, w.point(j)));
        worst = std::max(worst, mass);
    }
    return worst;
}

WindowedOperator build_l(const HFunctions& h, const Window& w, double tail_threshold) {
    double mass = boundary_row_mass(h, w);
    if (!(mass < tail_threshold))
        throw std::runtime_error("build_l: window too small (boundary row mass " +
                                 std::to_string(mass) + " >= threshold " +
                                 std::to_string(tail_threshold) + ")");
    WindowedOperator op{w, Matrix(w.size(), w.size())};
    for (int i = 0; i < w.size(); ++i)
        for (int j = 0; j < w.size(); ++j)
            op.entries(i, j) = l_kernel_from_h(h, w.point(i), w.point(j));
    return op;
}

ResolventResult resolvent_k(const WindowedOperator& l, const HFunctions& h,
                            double cond_threshold) {
    const Window& w = l.window;
    const int n = w.size();
    Matrix one_plus_l = Matrix::identity(n) + l.entries;
    double cond = condition_one(one_plus_l);
    if (!(cond < cond_threshold))
        throw std::runtime_error("resolvent_k: (I+L) ill-conditioned, kappa_1 = " +
                                 std::to_string(cond));

    ResolventResult res{WindowedOperator{w, solve_right(l.entries, one_plus_l)},
                        {}, {}, {}, {}, cond};
    for (int j = 0; j < 2; ++j) {
        res.f[j].assign(n, 0.0);
        res.g[j].assign(n, 0.0);
    }
    for (int i = 0; i < n; ++i) {
        HalfInteger x = w.point(i);
        if (x.positive()) {
            res.f[0][i] = h.h_I(x);
            res.g[1][i] = h.h_I(x);
        } else {
            res.f[1][i] = h.h_II(x);
            res.g[0][i] = h.h_II(x);
        }
    }
    LuFactors lu(one_plus_l);
    LuFactors lu_t(one_plus_l.transposed());
    for (int j = 0; j < 2; ++j) {
        res.F[j] = lu.solve(res.f[j]);
        res.G[j] = lu_t.solve(res.g[j]);
    }
    return res;
}

StructureReport check_integrable_structure(const WindowedOperator& l,
                                           const ResolventResult& r) {
    const Window& w = l.window;
    const int n = w.size();
    StructureReport rep;
    for (int i = 0; i < n; ++i) {
        double fg = r.F[0][i] * r.G[0][i] + r.F[1][i] * r.G[1][i];
        rep.max_fg_orthogonality = std::max(rep.max_fg_orthogonality, std::abs(fg));
        double diag_sum = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j != i)
                diag_sum += l.entries(i, j) * r.k.entries(j, i);
            if (j == i)
                continue;
            double dx = w.point(i) - w.point(j);
            double predicted = (r.F[0][i] * r.G[0][j] + r.F[1][i] * r.G[1][j]) / dx;
            rep.max_offdiag_residual =
                std::max(rep.max_offdiag_residual, std::abs(r.k.entries(i, j) - predicted));
        }
        rep.max_diag_residual =
            std::max(rep.max_diag_residual, std::abs(r.k.entries(i, i) + diag_sum));
    }
    return rep;
}

std::vector<double> apply_T(const std::vector<double>& h, const Window& w) {
    const int n = w.size();
    if (static_cast<int>(h.size()) != n)
        throw std::invalid_argument("apply_T: size mismatch");
    std::vector<double> out(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i)
                out[i] += h[j] / (w.point(i) - w.point(j));
    return out;
}

WindowedOperator hat_k(const WindowedOperator& l, double cond_threshold) {
    const int n = l.window.size();
    Matrix l_minus_one = l.entries - Matrix::identity(n);
    double cond = condition_one(l_minus_one);
    if (!(cond < cond_threshold))
        throw std::runtime_error("hat_k: (L-1) ill-conditioned");
    return WindowedOperator{l.window, solve_right(l.entries, l_minus_one)};
}

} // namespace dbk
