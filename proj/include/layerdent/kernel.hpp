#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "layerdent/errors.hpp"
#include "layerdent/materials.hpp"
#include "layerdent/quadrature.hpp"

namespace layerdent {

// Transform-domain kernel L(u) of a transversely isotropic layer bonded to a
// transversely isotropic half-space, in the closed two-exponential form
//   L(u) = 1 + 2 M(x1,y1)/N(x1,y1),  x1 = e^{-u decay1}, y1 = e^{-u decay2}.
//
// The coupling coefficients follow Fabrikant's solution with one sign
// correction: a21 carries a minus sign relative to a12's brace (with the
// sign as sometimes transcribed, the x1*y1 cross terms cancel identically
// and the kernel loses the physical limit L(0) = H_substrate/H_layer; the
// corrected form reproduces a direct transform-domain solve of the bonded
// two-medium problem to machine precision).
struct KernelModel {
    double a11, a12, a21, a22;
    double Z;      // denominator of the coupling coefficients
    double g;      // (gamma1_l - gamma2_l)/(gamma1_s - gamma2_s)
    double Hratio; // H_s (m1_l - 1) / (H_l (m1_s - 1))
    double decay1; // 1/gamma1 of the layer
    double decay2; // 1/gamma2 of the layer
    double g1, g2; // layer gamma_i/(gamma1 - gamma2)

    double operator()(double u) const {
        const double x = std::exp(-u * decay1);
        const double y = std::exp(-u * decay2);
        const double cross = g1 * a12 - g2 * a21;
        const double det = a12 * a21 - a11 * a22;
        const double M = -cross * x * y - g1 * a11 * x * x + g2 * a22 * y * y - det * x * x * y * y;
        const double N = 1.0 + 2.0 * cross * x * y + (g1 + g2) * (a11 * x * x - a22 * y * y) +
                         det * x * x * y * y;
        return 1.0 + 2.0 * M / N;
    }
};

// Isotropic layer/substrate kernel L(u) = 1 + Q(u) with user-supplied
// coefficients d1, d2, d3 (they come from the literature for a given pair;
// identical materials must have d1 = d2 = 0 so that Q vanishes).
struct IsotropicKernelCoeffs {
    double d1 = 0.0, d2 = 0.0, d3 = 0.0;

    double operator()(double u) const {
        const double e2 = std::exp(-2.0 * u);
        return 1.0 - 2.0 * e2 * (d1 + d2 * e2) / (1.0 + d3 * e2 + d2 * e2 * e2);
    }
};

using Kernel = std::variant<KernelModel, IsotropicKernelCoeffs>;

inline double eval_L(const Kernel& k, double u) {
    return std::visit([u](const auto& m) { return m(u); }, k);
}

inline KernelModel build_kernel_ti(const LayerSystem& sys) {
    const MaterialParams& l = sys.layer;
    const MaterialParams& s = sys.substrate;
    const double dl = l.gamma1 - l.gamma2;
    const double ds = s.gamma1 - s.gamma2;
    const double H = s.H * (l.m1 - 1.0) / (l.H * (s.m1 - 1.0));
    const double g = dl / ds;

    const double e1 = s.gamma1 - s.m1 * s.gamma2;        // = ds*(g1_s - m1_s g2_s)
    const double e2 = s.gamma1 - s.m1 * s.m1 * s.gamma2; // = ds*(g1_s - m1_s^2 g2_s)

    const double zt1 = H * H * dl * (e2 / ds);
    const double zt2 = -g * H / ds *
                       ((l.m1 - 1.0) * (s.m1 - 1.0) * (l.gamma1 * l.gamma2 + s.gamma1 * s.gamma2) +
                        2.0 * e1 * (l.gamma1 - l.m1 * l.gamma2));
    const double zt3 = g * g * (l.gamma1 - l.m1 * l.m1 * l.gamma2);
    const double Z = zt1 + zt2 + zt3;
    const double zscale = std::max({std::fabs(zt1), std::fabs(zt2), std::fabs(zt3)});
    if (std::fabs(Z) < 1e-14 * zscale)
        throw SingularZ("coupling denominator Z vanishes for this material pair (|Z| = " +
                        std::to_string(std::fabs(Z)) + ")");

    KernelModel k;
    k.Z = Z;
    k.g = g;
    k.Hratio = H;
    k.decay1 = 1.0 / l.gamma1;
    k.decay2 = 1.0 / l.gamma2;
    k.g1 = l.g1;
    k.g2 = l.g2;
    k.a11 = 1.0 + 2.0 * l.gamma1 / Z *
                      ((-H * H * e2 + g * H * (2.0 * e1 + (l.m1 - 1.0) * (s.m1 - 1.0) * l.gamma2)) / ds -
                       g * g);
    const double brace = g * g * l.m1 - g * H * (e1 / ds) * (l.m1 + 1.0) + H * H * (e2 / ds);
    k.a12 = 2.0 * l.gamma2 / Z * brace;
    k.a21 = -2.0 * l.gamma1 / Z * brace;
    k.a22 = 1.0 + 2.0 * l.gamma2 / Z *
                      ((H * H * e2 - g * H * (2.0 * l.m1 * e1 - (l.m1 - 1.0) * (s.m1 - 1.0) * l.gamma1)) / ds +
                       g * g * l.m1 * l.m1);
    return k;
}

// Empirical exponential bound |1 - L(u)| <= c e^{-rate u}, fitted on
// u in [2, 20] and then inflated so the bound holds at every sample.
struct TailBound {
    double c = 0.0;
    double rate = 1.0;
    bool null_kernel = false; // 1 - L vanished at every sample

    // Truncation point beyond which c e^{-rate u} < floor.
    double cutoff(double floor = 1e-13) const {
        if (null_kernel || c <= floor) return 10.0;
        return std::clamp(std::log(c / floor) / rate, 10.0, 400.0);
    }
};

inline TailBound fit_tail(const Kernel& k) {
    const double u_lo = 2.0, u_hi = 20.0;
    const int n = 73;
    std::vector<double> us, ws;
    double wmax = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = u_lo + (u_hi - u_lo) * i / (n - 1);
        const double w = std::fabs(1.0 - eval_L(k, u));
        us.push_back(u);
        ws.push_back(w);
        wmax = std::max(wmax, w);
    }
    TailBound tb;
    if (wmax < 1e-15) {
        tb.null_kernel = true;
        return tb;
    }
    // least squares on log|1-L| = log c - rate u, over points above noise
    double su = 0, sw = 0, suu = 0, suw = 0;
    int m = 0;
    for (int i = 0; i < n; ++i) {
        if (ws[i] < 1e-280) continue;
        const double lw = std::log(ws[i]);
        su += us[i];
        sw += lw;
        suu += us[i] * us[i];
        suw += us[i] * lw;
        ++m;
    }
    const double det = m * suu - su * su;
    tb.rate = -(m * suw - su * sw) / det;
    const double logc = (sw * suu - su * suw) / det;
    tb.c = std::exp(logc);
    if (!(tb.rate > 0.0))
        throw Error("kernel tail is not exponentially decaying (fitted rate " +
                    std::to_string(tb.rate) + ")");
    for (int i = 0; i < n; ++i) // inflate c so the bound covers all samples
        tb.c = std::max(tb.c, ws[i] * std::exp(tb.rate * us[i]));
    return tb;
}

// Moment integrals of 1 - L scaled per the expansion of the influence
// function: a_m = (-1)^m / ((2m)!!)^2 * int_0^inf [1 - L(u)] u^{2m} du,
// with (0)!! = 1, plus the equivalent constants K0 = -2 a0/pi, K1 = -4 a1/pi.
struct AsymptoticConstants {
    std::vector<double> a; // a[m], m = 0..order
    double K0 = 0.0;
    double K1 = 0.0;

    double a0() const { return a.empty() ? 0.0 : a[0]; }
    double a1() const { return a.size() < 2 ? 0.0 : a[1]; }
};

inline double double_factorial_even(int m) {
    double r = 1.0;
    for (int i = 1; i <= m; ++i) r *= 2.0 * i;
    return r;
}

inline AsymptoticConstants asymptotic_constants(const Kernel& k, int order = 1,
                                                double abs_tol = 1e-10) {
    AsymptoticConstants out;
    out.a.assign(static_cast<std::size_t>(order) + 1, 0.0);
    const TailBound tb = fit_tail(k);
    if (!tb.null_kernel) {
        const double umax = tb.cutoff(1e-13);
        for (int m = 0; m <= order; ++m) {
            auto integrand = [&](double u) {
                double w = 1.0 - eval_L(k, u);
                for (int j = 0; j < 2 * m; ++j) w *= u;
                return w;
            };
            const auto rep = integrate(integrand, 0.0, umax, abs_tol);
            // refinement check with a tighter tolerance
            const auto rep2 = integrate(integrand, 0.0, umax, abs_tol * 0.1);
            if (!rep.converged || !rep2.converged || std::fabs(rep.value - rep2.value) > 1e-9)
                throw QuadratureNotConverged("moment integral m=" + std::to_string(m) +
                                             " did not converge (delta " +
                                             std::to_string(std::fabs(rep.value - rep2.value)) + ")");
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            const double df = double_factorial_even(m);
            out.a[static_cast<std::size_t>(m)] = sign / (df * df) * rep2.value;
        }
    }
    out.K0 = -2.0 * out.a0() / M_PI;
    out.K1 = -4.0 * out.a1() / M_PI;
    return out;
}

// Double-index coefficient families of the kernel-moment expansions:
//   b[i][j]   = (m!)^2 / ((i!)^2 (j!)^2) a_m
//   b0[i][j]  = 2^{2j} (m!)^2 / ((i!)^2 (2j)!) a_m
//   b2t[i][j] = -2^{2j+1} j (m!)^2 / ((i!)^2 (2j+1)!) a_m,   m = i + j.
struct SeriesCoefficients {
    int order = 0;
    std::vector<std::vector<double>> b;
    std::vector<std::vector<double>> b0;
    std::vector<std::vector<double>> b2t;
};

inline SeriesCoefficients series_coefficients(const AsymptoticConstants& consts, int order) {
    if (order + 1 > static_cast<int>(consts.a.size()))
        throw DomainError("series_coefficients: requested order exceeds available a_m");
    auto fact = [](int n) {
        double r = 1.0;
        for (int i = 2; i <= n; ++i) r *= i;
        return r;
    };
    SeriesCoefficients sc;
    sc.order = order;
    const std::size_t n = static_cast<std::size_t>(order) + 1;
    sc.b.assign(n, std::vector<double>(n, 0.0));
    sc.b0.assign(n, std::vector<double>(n, 0.0));
    sc.b2t.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i <= order; ++i) {
        for (int j = 0; i + j <= order; ++j) {
            const int m = i + j;
            const double am = consts.a[static_cast<std::size_t>(m)];
            const double fm = fact(m), fi = fact(i), fj = fact(j);
            sc.b[i][j] = fm * fm / (fi * fi * fj * fj) * am;
            sc.b0[i][j] = std::pow(2.0, 2 * j) * fm * fm / (fi * fi * fact(2 * j)) * am;
            sc.b2t[i][j] = -std::pow(2.0, 2 * j + 1) * j * fm * fm / (fi * fi * fact(2 * j + 1)) * am;
        }
    }
    return sc;
}

} // namespace layerdent
