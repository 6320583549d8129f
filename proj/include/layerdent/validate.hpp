#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "layerdent/hemisphere.hpp"
#include "layerdent/kernel.hpp"
#include "layerdent/oracle.hpp"
#include "layerdent/powerlaw.hpp"

// Self-check suite behind the `validate` CLI command: cross-checks the
// supplied asymptotic constants against direct kernel quadrature, verifies
// the truncation orders of the moment functions, the inversion round trips,
// and the hemisphere identities. Each check reports a measured value so a
// failure is actionable.

namespace layerdent::validate {

struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    std::string detail;
};

namespace detail {

inline void add(std::vector<CheckResult>& out, std::string name, bool ok, double measured,
                std::string detail) {
    out.push_back({std::move(name), ok, measured, std::move(detail)});
}

} // namespace detail

inline std::vector<CheckResult> run_validation(const Kernel& kernel, double theta, double h,
                                               const AsymptoticConstants& consts) {
    std::vector<CheckResult> out;
    const double a0 = consts.a0(), a1 = consts.a1();

    // 1. supplied constants vs. direct quadrature of the kernel (adaptive and
    //    brute-force trapezoid routes)
    try {
        const AsymptoticConstants re = asymptotic_constants(kernel, 1);
        const TailBound tb = fit_tail(kernel);
        const double umax = tb.cutoff(1e-13);
        const double a0_trap = tb.null_kernel ? 0.0 : oracle::trapezoid_moment(kernel, 0, umax);
        const double d_supplied =
            std::max(std::fabs(re.a0() - a0), std::fabs(re.a1() - a1));
        detail::add(out, "constants-match-kernel", d_supplied <= 1e-9, d_supplied,
                    "max |a_m(quadrature) - a_m(supplied)|");
        const double d_trap = std::fabs(re.a0() - a0_trap);
        detail::add(out, "constants-adaptive-vs-trapezoid", d_trap <= 1e-9, d_trap,
                    "|a0(adaptive) - a0(trapezoid)|");
    } catch (const Error& e) {
        detail::add(out, "constants-match-kernel", false, 0.0, e.what());
    }

    // 2. truncation orders of the moment functions under halving of (sigma,
    //    alpha) from (0.1, 0.1); expected shrink factors are 16, 32, 4.
    {
        auto resid = [&](double s, double al) {
            const double r0 = std::fabs(oracle::quad_S0(s, al, kernel) -
                                        (a0 + a1 * (s * s + 2.0 * al * al)));
            const double r2 = std::fabs(oracle::quad_S2tilde(s, al, kernel) +
                                        4.0 / 3.0 * a1 * al * al * al);
            const double r4 = std::fabs(oracle::quad_S4(s, al, kernel) - a0 / 3.0);
            return std::array<double, 3>{r0, r2, r4};
        };
        const auto e1 = resid(0.1, 0.1);
        const auto e2 = resid(0.05, 0.05);
        const char* names[3] = {"truncation-order-S0", "truncation-order-S2tilde",
                                "truncation-order-S4"};
        const double lo[3] = {10.0, 20.0, 2.5};
        const double hi[3] = {25.0, 45.0, 6.0};
        for (int i = 0; i < 3; ++i) {
            if (e1[i] < 1e-13 && e2[i] < 1e-13) {
                detail::add(out, names[i], true, 0.0, "residuals at noise floor (null kernel)");
            } else {
                const double ratio = e1[i] / e2[i];
                detail::add(out, names[i], ratio >= lo[i] && ratio <= hi[i], ratio,
                            "residual shrink factor under halving");
            }
        }
    }

    // 3. round trips of the power-law model at lambda = 2 (order eps^5)
    {
        const PowerLawShape shape{2.0, 0.5 / h};
        auto residual = [&](double eps) {
            const IndentationState st = parametric_state(eps * h, shape, theta, h, consts);
            const double w2 = displacement_from_force(
                force_from_displacement(st.w, shape, theta, h, consts), shape, theta, h, consts);
            const double a2 = radius_from_displacement(st.w, shape, theta, h, consts);
            return std::array<double, 2>{std::fabs(w2 - st.w) / st.w,
                                         std::fabs(a2 - st.a) / st.a};
        };
        const auto r1 = residual(0.1);
        const auto r2 = residual(0.05);
        const char* names[2] = {"roundtrip-w-P-w", "roundtrip-w-a-w"};
        for (int i = 0; i < 2; ++i) {
            if (r1[i] < 1e-14 && r2[i] < 1e-15) {
                detail::add(out, names[i], true, 0.0, "exact at machine precision (null kernel)");
            } else {
                const double ratio = r1[i] / r2[i];
                detail::add(out, names[i], ratio >= 10.0 && ratio <= 90.0, ratio,
                            "residual shrink factor under eps halving (nominal 32)");
            }
        }
    }

    // 4. hemisphere closed-form integrals vs. direct quadrature of the
    //    defining singular integrals (rho = a sin t substitution)
    {
        double worst = 0.0;
        const auto shape = oracle::ShapeFunction::hemisphere(1.0);
        for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const HemiIntegrals hi = hemi_shape_integrals(alpha, 1.0);
            const double a = alpha;
            auto quad = [&](auto&& f) { return integrate(f, 0.0, M_PI / 2.0, 1e-12).value; };
            const double q1 = quad([&](double t) { return shape.dphi(a * std::sin(t)); });
            const double q2 = a * a * quad([&](double t) {
                const double s = std::sin(t);
                return shape.dphi(a * s) * s * s;
            });
            const double q3 = a * a * a * quad([&](double t) {
                const double s = std::sin(t);
                return shape.phi(a * s) * (2.0 * s * s - 1.0) * s;
            });
            worst = std::max({worst, std::fabs(q1 - hi.I1), std::fabs(q2 - hi.I2),
                              std::fabs(q3 - hi.I3)});
        }
        detail::add(out, "hemisphere-integral-identities", worst <= 1e-10, worst,
                    "max |closed form - quadrature| over alpha grid");
    }

    // 5. hemisphere force-root residual across the usable load range
    {
        double worst = 0.0;
        for (double ratio : {1e-4, 1e-2, 0.5, 1.0, 2.0}) {
            const double al = alpha0_from_force(ratio, 1.0, 1.0);
            worst = std::max(worst, std::fabs(hemi_force_rhs(al) - ratio));
        }
        detail::add(out, "hemisphere-root-residual", worst <= 1e-12, worst,
                    "max |G(alpha0) - P/(theta R^2)|");
    }

    // 6. England expansion order in mu (residual vs. numeric inversion of the
    //    parametric relations; the first surviving error term is mu^6)
    {
        const double alpha0 = 0.4;
        const double P = hemi_force_rhs(alpha0);
        auto resid = [&](double mu) {
            const double al_exact = oracle::bracket_invert(
                [&](double al) { return hemi_parametric(al, mu, 1.0, 1.0, consts).first; }, P,
                1e-6, 0.95, 1e-15);
            const double w_exact = hemi_parametric(al_exact, mu, 1.0, 1.0, consts).second;
            return std::fabs(england_expansion(alpha0, mu, 1.0, consts).w - w_exact);
        };
        const double r1 = resid(0.2), r2 = resid(0.1);
        if (r1 < 1e-15 && r2 < 1e-15) {
            detail::add(out, "england-order", true, 0.0, "exact at machine precision (null kernel)");
        } else {
            const double ratio = r1 / r2;
            detail::add(out, "england-order", ratio >= 50.0 && ratio <= 80.0, ratio,
                        "residual shrink factor under mu halving (nominal 64)");
        }
    }

    // 7. shape-factor identities on a lambda grid
    {
        double worst = 0.0;
        for (double l : {1.0, 1.25, 2.0, 3.5, 10.0, 100.0}) {
            const ShapeFactors f = shape_factors(l);
            worst = std::max(worst, std::fabs((l + 1.0) / l * f.F1 / f.F2 - 4.0));
            worst = std::max(worst,
                             std::fabs((l + 1.0) / l * f.F3 * std::pow(f.F2, 1.0 / l) - 4.0));
        }
        detail::add(out, "shape-factor-identities", worst <= 1e-12, worst,
                    "max deviation of the two gamma-function identities");
    }

    // 8. scaling-factor composition: closed-form coefficients vs. degree-4
    //    truncation of the force expansion composed with varpi(eps)
    {
        double worst = 0.0;
        for (double l : {1.0, 2.0, 3.7}) {
            const ForceCoeffs C = force_coeffs(l, a0, a1);
            const VarpiCoeffs E = varpi_coeffs(l, a0, a1);
            const KappaCoeffs K = kappa_coeffs(l, a0, a1);
            // eps-polynomial of f(vp(eps)) via truncated arithmetic
            const std::array<double, 5> vp = {0.0, 1.0, E.E1, E.E2, E.E3};
            std::array<double, 5> acc = {1.0, 0.0, 0.0, 0.0, 0.0};
            std::array<double, 5> comp = {1.0, 0.0, 0.0, 0.0, 0.0};
            const double cs[4] = {C.C1, C.C2, C.C3, C.C4};
            for (int p = 0; p < 4; ++p) {
                std::array<double, 5> next{};
                for (int i = 0; i < 5; ++i)
                    for (int j = 0; i + j < 5; ++j) next[static_cast<std::size_t>(i + j)] +=
                        acc[static_cast<std::size_t>(i)] * vp[static_cast<std::size_t>(j)];
                acc = next;
                for (int i = 0; i < 5; ++i) comp[static_cast<std::size_t>(i)] += cs[p] * acc[static_cast<std::size_t>(i)];
            }
            const double kk[5] = {1.0, K.K1, K.K2, K.K3, K.K4};
            for (int i = 1; i < 5; ++i)
                worst = std::max(worst, std::fabs(comp[static_cast<std::size_t>(i)] - kk[i]) /
                                            std::max(1.0, std::fabs(kk[i])));
        }
        detail::add(out, "kappa-composition", worst <= 1e-12, worst,
                    "max relative coefficient mismatch, closed form vs composition");
    }

    return out;
}

inline bool all_passed(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

} // namespace layerdent::validate
