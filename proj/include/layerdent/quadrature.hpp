#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "layerdent/errors.hpp"

namespace layerdent {

struct QuadratureReport {
    double value = 0.0;
    double est_error = 0.0;
    int panels = 0;
    bool converged = false;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on (-1,1) (Fullerton's 80-digit values,
// as used by QUADPACK dqk15).
inline constexpr std::array<double, 8> gk15_x = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
inline constexpr std::array<double, 8> gk15_wk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gk15_wg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename F>
inline void gk15_panel(F&& f, double a, double b, double& result, double& err) {
    const double c = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    const double fc = f(c);
    double resg = gk15_wg[3] * fc;
    double resk = gk15_wk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = hl * gk15_x[j];
        const double fsum = f(c - dx) + f(c + dx);
        resk += gk15_wk[j] * fsum;
        if (j % 2 == 1) resg += gk15_wg[j / 2] * fsum;
    }
    result = resk * hl;
    err = std::fabs((resk - resg) * hl);
}

template <typename F>
inline void gk15_adapt(F&& f, double a, double b, double tol, int depth,
                       double& sum, double& errsum, int& panels) {
    double r, e;
    gk15_panel(f, a, b, r, e);
    if (e <= tol || depth >= 48 || (b - a) < 1e-14 * (std::fabs(a) + 1.0)) {
        sum += r;
        errsum += e;
        ++panels;
        return;
    }
    const double m = 0.5 * (a + b);
    gk15_adapt(f, a, m, 0.5 * tol, depth + 1, sum, errsum, panels);
    gk15_adapt(f, m, b, 0.5 * tol, depth + 1, sum, errsum, panels);
}

} // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a,b] to absolute tolerance.
template <typename F>
inline QuadratureReport integrate(F&& f, double a, double b, double abs_tol) {
    QuadratureReport rep;
    if (a == b) {
        rep.converged = true;
        return rep;
    }
    detail::gk15_adapt(f, a, b, abs_tol, 0, rep.value, rep.est_error, rep.panels);
    rep.converged = rep.est_error <= abs_tol;
    return rep;
}

// Same, but with prescribed interior breakpoints (used to keep oscillatory
// weights to about one half-period per initial panel).
template <typename F>
inline QuadratureReport integrate_segmented(F&& f, const std::vector<double>& breaks,
                                            double abs_tol) {
    QuadratureReport rep;
    if (breaks.size() < 2) {
        rep.converged = true;
        return rep;
    }
    const double per_tol = abs_tol / static_cast<double>(breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        detail::gk15_adapt(f, breaks[i], breaks[i + 1], per_tol, 0, rep.value,
                           rep.est_error, rep.panels);
    }
    rep.converged = rep.est_error <= abs_tol;
    return rep;
}

inline std::vector<double> uniform_breaks(double a, double b, int n) {
    std::vector<double> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = a + (b - a) * i / n;
    return v;
}

} // namespace layerdent
