#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "layerdent/errors.hpp"
#include "layerdent/hemisphere.hpp"
#include "layerdent/kernel.hpp"
#include "layerdent/powerlaw.hpp"
#include "layerdent/quadrature.hpp"

// Validation-only numerics: direct quadrature of the kernel-moment functions,
// the general-profile force/displacement relations, bracketing inversion,
// brute-force series reversion, and finite-difference stiffness. Everything
// here is independent of the closed-form paths it cross-checks.

namespace layerdent::oracle {

inline double bessel_j0(double x) { return std::cyl_bessel_j(0.0, std::fabs(x)); }

// sin(x)/x with the removable singularity evaluated by series.
inline double sinc(double x) {
    if (std::fabs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
    }
    return std::sin(x) / x;
}

// Weight of the fourth-moment function: sin(x)/x - (2/x^2)(sin(x)/x - cos(x));
// tends to 1/3 as x -> 0.
inline double s4_weight(double x) {
    if (std::fabs(x) < 1e-3) {
        const double x2 = x * x;
        return 1.0 / 3.0 - x2 / 10.0 + x2 * x2 / 168.0;
    }
    return sinc(x) - 2.0 / (x * x) * (sinc(x) - std::cos(x));
}

// Semi-infinite integral of [1-L(u)] * weight(u), truncated where the fitted
// exponential tail bound falls below 1e-13 and integrated between prescribed
// breakpoints (about one half-period of the most oscillatory factor each).
template <typename W>
inline QuadratureReport semi_infinite_quad(const Kernel& k, W&& weight, double freq,
                                           double abs_tol = 1e-9) {
    const TailBound tb = fit_tail(k);
    if (tb.null_kernel) return {0.0, 0.0, 0, true};
    const double umax = tb.cutoff(1e-13);
    auto fullint = [&](double u) { return (1.0 - eval_L(k, u)) * weight(u); };
    auto run = [&](double width) {
        const int n = std::max(4, static_cast<int>(std::ceil(umax / width)));
        return integrate_segmented(fullint, uniform_breaks(0.0, umax, n), abs_tol);
    };
    const double width = (freq > 1e-12) ? std::min(M_PI / (2.0 * freq), 4.0) : 4.0;
    QuadratureReport rep = run(width);
    const QuadratureReport check = run(width * 0.5);
    if (!rep.converged || std::fabs(rep.value - check.value) > 10.0 * abs_tol)
        throw QuadratureNotConverged("semi-infinite quadrature did not settle (delta " +
                                     std::to_string(std::fabs(rep.value - check.value)) + ")");
    rep.value = check.value;
    return rep;
}

// int [1-L] J0(t u) du
inline double quad_F(double t, const Kernel& k, double tol = 1e-9) {
    return semi_infinite_quad(k, [t](double u) { return bessel_j0(t * u); }, t, tol).value;
}

// int [1-L] J0(sigma u) J0(tau u) du
inline double quad_F2(double sigma, double tau, const Kernel& k, double tol = 1e-9) {
    return semi_infinite_quad(
               k, [=](double u) { return bessel_j0(sigma * u) * bessel_j0(tau * u); },
               std::max(sigma, tau), tol)
        .value;
}

// int [1-L] J0(sigma u) cos(alpha u) du
inline double quad_S0(double sigma, double alpha, const Kernel& k, double tol = 1e-9) {
    return semi_infinite_quad(
               k, [=](double u) { return bessel_j0(sigma * u) * std::cos(alpha * u); },
               std::max(sigma, alpha), tol)
        .value;
}

// int [1-L] J0(sigma u) sin(alpha u)/u du
inline double quad_S2(double sigma, double alpha, const Kernel& k, double tol = 1e-9) {
    return semi_infinite_quad(
               k, [=](double u) { return bessel_j0(sigma * u) * alpha * sinc(alpha * u); },
               std::max(sigma, alpha), tol)
        .value;
}

// int [1-L] J0(sigma u) (sin(alpha u)/u - alpha cos(alpha u)) du
inline double quad_S2tilde(double sigma, double alpha, const Kernel& k, double tol = 1e-9) {
    return semi_infinite_quad(
               k,
               [=](double u) {
                   return bessel_j0(sigma * u) * alpha *
                          (sinc(alpha * u) - std::cos(alpha * u));
               },
               std::max(sigma, alpha), tol)
        .value;
}

// int [1-L] J0(sigma u) {sin(au)/(au) - 2/(au)^2 (sin(au)/(au) - cos(au))} du
inline double quad_S4(double sigma, double alpha, const Kernel& k, double tol = 1e-9) {
    return semi_infinite_quad(
               k, [=](double u) { return bessel_j0(sigma * u) * s4_weight(alpha * u); },
               std::max(sigma, alpha), tol)
        .value;
}

// Axisymmetric convex profile with derivative; the general-shape relations
// integrate it directly.
struct ShapeFunction {
    std::function<double(double)> phi;
    std::function<double(double)> dphi;
    std::string kind;

    static ShapeFunction power_law(const PowerLawShape& s) {
        check_shape(s);
        const double l = s.lambda, A = s.A;
        return {[=](double r) { return A * std::pow(r, l); },
                [=](double r) { return A * l * std::pow(r, l - 1.0); },
                "powerlaw"};
    }
    static ShapeFunction hemisphere(double R) {
        if (!(R > 0.0)) throw DomainError("hemisphere shape: R must be positive");
        return {[=](double r) { return R - std::sqrt((R - r) * (R + r)); },
                [=](double r) { return r / std::sqrt((R - r) * (R + r)); },
                "hemisphere"};
    }
};

// General-profile force and displacement at contact radius a, evaluated by
// quadrature with the substitution rho = a sin(t) (removes the edge weight):
//   P = (1 - (8 a1/3pi) eps^3) 4 theta T1
//   w = (1 - (4 a1/3pi) eps^3) a T0 + (4 a1/(pi h^3)) T4
//       - (2/(pi h)) (a0 + 2 a1 eps^2 - (8 a0 a1/3pi) eps^3) T1
// where T0 = int phi'(a sin t) dt, T1 = a^2 int phi'(a sin t) sin^2 t dt,
// T4 = a^3 int phi(a sin t)(2 sin^2 t - 1) sin t dt over t in [0, pi/2].
inline std::pair<double, double> exact_general_relations(double a, const ShapeFunction& phi,
                                                         double theta, double h,
                                                         const AsymptoticConstants& c,
                                                         double rel_tol = 1e-10) {
    if (!(a > 0.0)) throw DomainError("exact_general_relations: a must be positive");
    if (std::fabs(phi.phi(0.0)) > 1e-14 * a)
        throw DomainError("exact_general_relations: profile must have phi(0) = 0");
    auto integral = [&](auto&& f) {
        auto rough = integrate(f, 0.0, M_PI / 2.0, 1e-6);
        const double scale = std::max(std::fabs(rough.value), 1e-30);
        auto fine = integrate(f, 0.0, M_PI / 2.0, rel_tol * scale);
        if (!fine.converged)
            throw QuadratureNotConverged("general-shape profile integral did not converge");
        return fine.value;
    };
    const double T0 = integral([&](double t) { return phi.dphi(a * std::sin(t)); });
    const double T1 =
        a * a * integral([&](double t) {
            const double s = std::sin(t);
            return phi.dphi(a * s) * s * s;
        });
    const double T4 =
        a * a * a * integral([&](double t) {
            const double s = std::sin(t);
            return phi.phi(a * s) * (2.0 * s * s - 1.0) * s;
        });
    const double a0 = c.a0(), a1 = c.a1();
    const double eps = a / h;
    const double e3 = eps * eps * eps;
    const double P = (1.0 - 8.0 * a1 / (3.0 * M_PI) * e3) * 4.0 * theta * T1;
    const double w = (1.0 - 4.0 * a1 / (3.0 * M_PI) * e3) * a * T0 +
                     4.0 * a1 / (M_PI * h * h * h) * T4 -
                     2.0 / (M_PI * h) *
                         (a0 + 2.0 * a1 * eps * eps - 8.0 * a0 * a1 / (3.0 * M_PI) * e3) * T1;
    return {P, w};
}

// Deterministic bracketed inversion of a continuous monotone map.
template <typename F>
inline double bracket_invert(F&& f, double target, double lo, double hi, double tol = 1e-12) {
    double flo = f(lo) - target;
    double fhi = f(hi) - target;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoBracket("bracket_invert: f(lo), f(hi) do not straddle the target");
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fx = f(x) - target;
        if (std::fabs(fx) <= tol * std::max(1.0, std::fabs(target))) return x;
        if ((fx > 0.0) == (fhi > 0.0)) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
        double nx = x - fx * (hi - lo) / (fhi - flo);
        if (!(nx > std::min(lo, hi)) || !(nx < std::max(lo, hi))) nx = 0.5 * (lo + hi);
        if (std::fabs(nx - x) < 1e-17 * (std::fabs(x) + 1.0)) return nx;
        x = nx;
    }
    return x;
}

// --- truncated power-series helpers (order 5, i.e. coefficients of x^0..x^5) ---

template <typename T>
using Series6 = std::array<T, 6>;

template <typename T>
inline Series6<T> series_mul(const Series6<T>& a, const Series6<T>& b) {
    Series6<T> r{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; i + j < 6; ++j) r[static_cast<std::size_t>(i + j)] =
            r[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return r;
}

// reciprocal of a series with invertible constant term
template <typename T>
inline Series6<T> series_recip(const Series6<T>& a) {
    Series6<T> r{};
    r[0] = T(1) / a[0];
    for (int n = 1; n < 6; ++n) {
        T s{};
        for (int k = 1; k <= n; ++k)
            s = s + a[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(n - k)];
        r[static_cast<std::size_t>(n)] = -s / a[0];
    }
    return r;
}

// Reversion of y = x (1 + c1 x + c2 x^2 + c3 x^3 + c4 x^4) for x(y) through
// order 5, by Newton iteration on truncated polynomials (x0 = y; each sweep
// doubles the number of correct orders).
template <typename T>
inline std::array<T, 4> series_revert(const std::array<T, 4>& c) {
    Series6<T> x{};
    x[1] = T(1); // x = y
    for (int pass = 0; pass < 4; ++pass) {
        // F(x) = x + c1 x^2 + ... + c4 x^5, F'(x) = 1 + 2 c1 x + ... + 5 c4 x^4
        Series6<T> xp{};
        xp[0] = T(1);
        Series6<T> F{}, dF{};
        for (int p = 1; p <= 5; ++p) {
            xp = series_mul(xp, x);
            const T coef = (p == 1) ? T(1) : c[static_cast<std::size_t>(p - 2)];
            for (int i = 0; i < 6; ++i)
                F[static_cast<std::size_t>(i)] =
                    F[static_cast<std::size_t>(i)] + coef * xp[static_cast<std::size_t>(i)];
        }
        // derivative composed with x: dF = 1 + sum_{p=2..5} p c_{p-1} x^{p-1}
        Series6<T> xq{};
        xq[0] = T(1);
        dF[0] = T(1);
        for (int p = 2; p <= 5; ++p) {
            xq = series_mul(xq, x);
            const T coef = T(p) * c[static_cast<std::size_t>(p - 2)];
            for (int i = 0; i < 6; ++i)
                dF[static_cast<std::size_t>(i)] =
                    dF[static_cast<std::size_t>(i)] + coef * xq[static_cast<std::size_t>(i)];
        }
        F[1] = F[1] - T(1); // F(x) - y
        const Series6<T> corr = series_mul(F, series_recip(dF));
        for (int i = 0; i < 6; ++i)
            x[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - corr[static_cast<std::size_t>(i)];
    }
    return {x[2], x[3], x[4], x[5]};
}

// Power variant: y = x (1 + c1 x + ... + c4 x^4)^{p}. Expands the fractional
// power by the binomial series, then reverts.
template <typename T>
inline std::array<T, 4> series_revert_power(const std::array<T, 4>& c, T p) {
    const T c1 = c[0], c2 = c[1], c3 = c[2], c4 = c[3];
    std::array<T, 4> ct;
    ct[0] = p * c1;
    ct[1] = p * c2 + p * (p - T(1)) / T(2) * c1 * c1;
    ct[2] = p * c3 + p * (p - T(1)) * c1 * c2 + p * (p - T(1)) * (p - T(2)) / T(6) * c1 * c1 * c1;
    ct[3] = p * c4 + p * (p - T(1)) * (c1 * c3 + c2 * c2 / T(2)) +
            p * (p - T(1)) * (p - T(2)) / T(2) * c1 * c1 * c2 +
            p * (p - T(1)) * (p - T(2)) * (p - T(3)) / T(24) * c1 * c1 * c1 * c1;
    return series_revert(ct);
}

// Central-difference incremental stiffness (dP/da)/(dw/da), Richardson
// extrapolated over delta and delta/2.
template <typename FP, typename FW>
inline double finite_diff_stiffness(FP&& P_of_a, FW&& w_of_a, double a, double delta) {
    auto slope = [&](double d) {
        return (P_of_a(a + d) - P_of_a(a - d)) / (w_of_a(a + d) - w_of_a(a - d));
    };
    const double s1 = slope(delta);
    const double s2 = slope(0.5 * delta);
    return (4.0 * s2 - s1) / 3.0;
}

// Step-halving trapezoid integration of [1-L(u)] u^{2m} on [0, umax]; the
// brute-force check on the adaptive moment quadrature.
inline double trapezoid_moment(const Kernel& k, int m, double umax, double tol = 1e-10) {
    auto f = [&](double u) {
        double w = 1.0 - eval_L(k, u);
        for (int j = 0; j < 2 * m; ++j) w *= u;
        return w;
    };
    int n = 64;
    double h = umax / n;
    double sum = 0.5 * (f(0.0) + f(umax));
    for (int i = 1; i < n; ++i) sum += f(i * h);
    double prev = sum * h;
    for (int iter = 0; iter < 24; ++iter) {
        double add = 0.0;
        for (int i = 0; i < n; ++i) add += f((i + 0.5) * h);
        n *= 2;
        h *= 0.5;
        sum += add;
        const double cur = sum * h;
        if (std::fabs(cur - prev) < tol) return cur;
        prev = cur;
    }
    throw QuadratureNotConverged("trapezoid moment integral did not reach tolerance");
}

} // namespace layerdent::oracle
