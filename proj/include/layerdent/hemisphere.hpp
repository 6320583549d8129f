#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "layerdent/errors.hpp"
#include "layerdent/kernel.hpp"

namespace layerdent {

// Hemispherically-ended indenter, profile Phi(r) = R - sqrt(R^2 - r^2).
// alpha = a/R must stay strictly below 1: the governing logarithm
// ln((1+alpha)/(1-alpha)) diverges as contact approaches the equator.
inline constexpr double hemi_alpha_limit = 1.0 - 1e-9;

struct HemisphereState {
    double R = 0.0;
    double alpha = 0.0;  // a/R
    double mu = 0.0;     // R/h
    double alpha0 = 0.0; // leading-order contact-radius root
    double alpha3 = 0.0; // mu^3 correction coefficient
};

namespace hemi_detail {

// ln((1+a)/(1-a)) = 2 atanh(a), computed without cancellation.
inline double log_ratio(double alpha) { return 2.0 * std::atanh(alpha); }

inline void check_alpha(double alpha) {
    if (!(alpha >= 0.0) || alpha >= hemi_alpha_limit)
        throw DomainError("hemisphere: alpha = a/R must lie in [0, 1); got " +
                          std::to_string(alpha));
}

} // namespace hemi_detail

// Closed forms of the three profile integrals (units 1, R^2, R^4):
//   I1 = atanh(alpha)
//   I2 = R^2 (-alpha/2 + (1+alpha^2) atanh(alpha)/2)
//   I3 = R^4 (alpha/4 + alpha^3/12 - (1-alpha^4) atanh(alpha)/4)
// I2 and I3 lose all leading digits to cancellation as alpha -> 0, so the
// small-alpha branch switches to their Taylor series.
struct HemiIntegrals {
    double I1, I2, I3;
};

inline HemiIntegrals hemi_shape_integrals(double alpha, double R = 1.0) {
    hemi_detail::check_alpha(alpha);
    HemiIntegrals out;
    const double at = std::atanh(alpha);
    out.I1 = at;
    if (alpha < 1e-4) {
        const double a2 = alpha * alpha;
        // I2/R^2 = sum_{k>=1} 2k alpha^{2k+1}/(4k^2-1), I3/R^4 = sum_{k>=2} alpha^{2k+1}/((2k-3)(2k+1))
        out.I2 = R * R * alpha * a2 * (2.0 / 3.0 + a2 * (4.0 / 15.0 + a2 * (6.0 / 35.0)));
        out.I3 = R * R * R * R * alpha * a2 * a2 * (1.0 / 5.0 + a2 * (1.0 / 21.0 + a2 / 45.0));
    } else {
        out.I2 = R * R * (-alpha / 2.0 + (1.0 + alpha * alpha) * at / 2.0);
        out.I3 = R * R * R * R *
                 (alpha / 4.0 + alpha * alpha * alpha / 12.0 -
                  (1.0 - std::pow(alpha, 4)) * at / 4.0);
    }
    return out;
}

// Normalized force G(alpha) = P/(theta R^2) of the leading-order relation;
// strictly increasing on (0,1).
inline double hemi_force_rhs(double alpha) {
    hemi_detail::check_alpha(alpha);
    if (alpha < 1e-4) {
        // (1+a^2) 2 atanh a - 2a = (8/3) a^3 + (16/15) a^5 + ...
        const double a2 = alpha * alpha;
        return alpha * a2 * (8.0 / 3.0 + a2 * (16.0 / 15.0 + a2 * (24.0 / 35.0)));
    }
    return (1.0 + alpha * alpha) * hemi_detail::log_ratio(alpha) - 2.0 * alpha;
}

// Fourth-order parametric relations for the hemisphere: returns (P, w).
inline std::pair<double, double> hemi_parametric(double alpha, double mu, double theta, double R,
                                                 const AsymptoticConstants& c) {
    hemi_detail::check_alpha(alpha);
    if (!(alpha > 0.0)) throw DomainError("hemi_parametric: alpha must be positive");
    if (!(mu >= 0.0)) throw DomainError("hemi_parametric: mu must be non-negative");
    const double a0 = c.a0(), a1 = c.a1();
    const double lg = hemi_detail::log_ratio(alpha);
    const double G = hemi_force_rhs(alpha);
    const double mu3 = mu * mu * mu;
    const double a3 = alpha * alpha * alpha;
    const double P = theta * R * R * G * (1.0 - mu3 * a3 * 8.0 * a1 / (3.0 * M_PI));
    const double w =
        R * (alpha / 2.0 * lg - mu * a0 / (2.0 * M_PI) * G +
             mu3 * a1 / (6.0 * M_PI) *
                 (2.0 * alpha * (7.0 * alpha * alpha + 3.0) -
                  (7.0 * std::pow(alpha, 4) + 6.0 * alpha * alpha + 3.0) * lg) +
             mu3 * mu * 4.0 * a0 * a1 / (3.0 * M_PI * M_PI) * a3 * G);
    return {P, w};
}

// Unique root alpha0 of G(alpha0) = P/(theta R^2), by a bracketed
// secant/bisection hybrid. The production bracket stops at 1 - 1e-12.
inline double alpha0_from_force(double P, double theta, double R, double tol = 1e-14) {
    if (!(P > 0.0)) throw DomainError("alpha0_from_force: P must be positive");
    const double target = P / (theta * R * R);
    const double hi_lim = 1.0 - 1e-12;
    double lo = 0.0, flo = -target;
    double hi = hi_lim;
    const double fhi_raw = (1.0 + hi * hi) * 2.0 * std::atanh(hi) - 2.0 * hi - target;
    if (fhi_raw < 0.0)
        throw NoBracket("alpha0_from_force: P/(theta R^2) = " + std::to_string(target) +
                        " exceeds the representable range (contact approaching the equator)");
    double fhi = fhi_raw;
    // false-position with bisection fallback; G is smooth and increasing
    double x = std::cbrt(3.0 * target / 8.0); // leading-order seed
    x = std::min(std::max(x, 1e-300), hi_lim * 0.999);
    for (int it = 0; it < 200; ++it) {
        const double fx = ((1.0 + x * x) * 2.0 * std::atanh(x) - 2.0 * x) - target;
        if (std::fabs(fx) <= tol * std::max(1.0, target)) return x;
        if (fx > 0.0) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
        double nx = x - fx * (hi - lo) / (fhi - flo); // secant over the bracket
        if (!(nx > lo) || !(nx < hi)) nx = 0.5 * (lo + hi);
        if (std::fabs(nx - x) < 1e-17 * std::max(1.0, x)) return nx;
        x = nx;
    }
    return x;
}

struct EnglandResult {
    HemisphereState state;
    double a = 0.0; // contact radius including the mu^3 correction
    double w = 0.0; // displacement through fourth order in mu
};

// Perturbation expansion in mu = R/h about the half-space hemisphere
// solution: alpha1 = alpha2 = alpha4 = 0, alpha3 proportional to a1.
inline EnglandResult england_expansion(double alpha0, double mu, double R,
                                       const AsymptoticConstants& c) {
    hemi_detail::check_alpha(alpha0);
    if (!(alpha0 > 0.0)) throw DomainError("england_expansion: alpha0 must be positive");
    if (!(mu >= 0.0)) throw DomainError("england_expansion: mu must be non-negative");
    const double a0 = c.a0(), a1 = c.a1();
    const double lg = hemi_detail::log_ratio(alpha0);
    const double G = hemi_force_rhs(alpha0);
    const double om = 1.0 - alpha0 * alpha0;
    EnglandResult out;
    out.state.R = R;
    out.state.mu = mu;
    out.state.alpha0 = alpha0;
    out.state.alpha3 = 4.0 * a1 / (3.0 * M_PI) * alpha0 * alpha0 * om * G / (om * lg + 2.0 * alpha0);
    out.state.alpha = alpha0 + mu * mu * mu * out.state.alpha3;
    out.a = R * out.state.alpha;
    const double a02 = alpha0 * alpha0;
    out.w = R * (alpha0 / 2.0 * lg - mu * a0 / (2.0 * M_PI) * G -
                 mu * mu * mu * a1 / (6.0 * M_PI) *
                     ((3.0 * a02 * a02 + 2.0 * a02 + 3.0) * lg - 6.0 * alpha0 * (1.0 + a02)));
    return out;
}

} // namespace layerdent
