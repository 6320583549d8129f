#pragma once

#include <array>
#include <cmath>
#include <string>

#include "layerdent/errors.hpp"
#include "layerdent/kernel.hpp"

namespace layerdent {

// Blunt indenter profile Phi(r) = A r^lambda, lambda >= 1 (lambda = 1 cone,
// lambda = 2 paraboloid). A has units length^(1-lambda).
struct PowerLawShape {
    double lambda;
    double A;

    static PowerLawShape cone(double gamma_angle) {
        if (!(gamma_angle > 0.0) || !(gamma_angle < M_PI / 2.0))
            throw DomainError("cone semi-angle parameter must lie in (0, pi/2)");
        return {1.0, std::tan(gamma_angle)};
    }
    static PowerLawShape paraboloid(double R) {
        if (!(R > 0.0)) throw DomainError("paraboloid tip radius must be positive");
        return {2.0, 1.0 / (2.0 * R)};
    }
};

inline void check_shape(const PowerLawShape& s) {
    if (!(s.lambda >= 1.0)) throw DomainError("power-law exponent must satisfy lambda >= 1");
    if (!(s.A > 0.0)) throw DomainError("power-law amplitude must be positive");
}

// Gamma-function shape factors; F3 is evaluated in log space so large
// exponents do not overflow.
struct ShapeFactors {
    double F1;
    double F2;
    double F3;
};

inline ShapeFactors shape_factors(double lambda) {
    if (!(lambda >= 1.0)) throw DomainError("shape_factors: lambda >= 1 required");
    const double lg = 2.0 * std::lgamma(lambda / 2.0) - std::lgamma(lambda);
    ShapeFactors f;
    f.F1 = lambda * lambda / (lambda + 1.0) * std::exp(lambda * M_LN2 + lg);
    f.F2 = lambda * std::exp((lambda - 2.0) * M_LN2 + lg);
    f.F3 = std::exp((lambda - 1.0) / lambda * std::log(lambda) + (lambda + 2.0) / lambda * M_LN2 -
                    std::log(lambda + 1.0) - lg / lambda);
    return f;
}

struct RadiusCoeffs {
    double B1, B2, B3, B4;
};
struct ForceCoeffs {
    double C1, C2, C3, C4;
};
struct ReversionCoeffs {
    double D1, D2, D3, D4;
};
struct VarpiCoeffs {
    double E1, E2, E3, E4;
};
struct KappaCoeffs {
    double K1, K2, K3, K4;

    double eval(double eps) const {
        return 1.0 + eps * (K1 + eps * (K2 + eps * (K3 + eps * K4)));
    }
};

// Contact radius expansion a/h = vp (1 + B1 vp + B2 vp^2 + B3 vp^3 + B4 vp^4).
inline RadiusCoeffs radius_coeffs(double lambda, double a0, double a1) {
    const double l = lambda;
    const double q = 2.0 * a0 / M_PI;
    const double r = 8.0 * a1 / (3.0 * M_PI);
    const double qr = q * r; // 16 a0 a1 / (3 pi^2)
    RadiusCoeffs B;
    B.B1 = q / (l + 1.0);
    B.B2 = (l + 3.0) / (2.0 * (l + 1.0) * (l + 1.0)) * q * q;
    B.B3 = (l + 4.0) * (l + 2.0) / (3.0 * std::pow(l + 1.0, 3)) * q * q * q +
           (2.0 * l + 5.0) / ((l + 1.0) * (l + 3.0)) * r;
    B.B4 = (2.0 * l + 5.0) * (l + 5.0) * (3.0 * l + 5.0) / (24.0 * std::pow(l + 1.0, 4)) *
               q * q * q * q +
           (l * l + 11.0 * l + 22.0) / ((l + 1.0) * (l + 1.0) * (l + 3.0)) * qr;
    return B;
}

// Force expansion P = theta A^{-1/lambda} F3 w^{(lambda+1)/lambda} (1 + C1 vp + ...).
inline ForceCoeffs force_coeffs(double lambda, double a0, double a1) {
    const double l = lambda;
    const double q = 2.0 * a0 / M_PI;
    const double r = 8.0 * a1 / (3.0 * M_PI);
    const double qr = q * r;
    ForceCoeffs C;
    C.C1 = q;
    C.C2 = (2.0 * l + 3.0) / (2.0 * (l + 1.0)) * q * q;
    C.C3 = (l + 2.0) * (3.0 * l + 4.0) / (3.0 * (l + 1.0) * (l + 1.0)) * q * q * q +
           (l + 2.0) / (l + 3.0) * r;
    C.C4 = (2.0 * l + 5.0) * (3.0 * l + 5.0) * (4.0 * l + 5.0) / (24.0 * std::pow(l + 1.0, 3)) *
               q * q * q * q +
           (2.0 * l + 5.0) * (l + 2.0) / ((l + 1.0) * (l + 3.0)) * qr;
    return C;
}

// Normalized-displacement expansion vp = eps (1 + E1 eps + ... + E4 eps^4).
inline VarpiCoeffs varpi_coeffs(double lambda, double a0, double a1) {
    const double l = lambda;
    const double q = 2.0 * a0 / M_PI;
    const double r = 8.0 * a1 / (3.0 * M_PI);
    const double qr = q * r;
    VarpiCoeffs E;
    E.E1 = -q / (l + 1.0);
    E.E2 = -(l - 1.0) / (2.0 * (l + 1.0) * (l + 1.0)) * q * q;
    E.E3 = -((l - 1.0) * (2.0 * l - 1.0) / (6.0 * std::pow(l + 1.0, 3)) * q * q * q +
             (2.0 * l + 5.0) / ((l + 3.0) * (l + 1.0)) * r);
    E.E4 = -((l - 1.0) * (2.0 * l - 1.0) * (3.0 * l - 1.0) / (24.0 * std::pow(l + 1.0, 4)) *
                 q * q * q * q +
             (l * l - l - 8.0) / ((l + 1.0) * (l + 1.0) * (l + 3.0)) * qr);
    return E;
}

// Indentation scaling factor kappa_lambda(eps) = 1 + K1 eps + ... + K4 eps^4.
// The eps^3 coefficient carries (lambda+2)/(lambda+3); the composition of the
// force expansion with vp(eps) fixes that factor (the lambda = 2 special case
// 32 a1/(15 pi) pins it down).
inline KappaCoeffs kappa_coeffs(double lambda, double a0, double a1) {
    const double l = lambda;
    const double q = 2.0 * a0 / M_PI;
    const double r = 8.0 * a1 / (3.0 * M_PI);
    const double qr = q * r;
    KappaCoeffs K;
    K.K1 = q;
    K.K2 = (2.0 * l + 1.0) / (2.0 * (l + 1.0)) * q * q;
    K.K3 = (2.0 * l + 1.0) * (3.0 * l + 1.0) / (6.0 * (l + 1.0) * (l + 1.0)) * q * q * q +
           (l + 2.0) / (l + 3.0) * r;
    K.K4 = (2.0 * l + 1.0) * (3.0 * l + 1.0) * (4.0 * l + 1.0) / (24.0 * std::pow(l + 1.0, 3)) *
               q * q * q * q +
           (2.0 * l * l + 4.0 * l - 1.0) / ((l + 1.0) * (l + 3.0)) * qr;
    return K;
}

// Flat-punch (lambda -> infinity) limit of the scaling factor.
inline KappaCoeffs kappa_inf_coeffs(double a0, double a1) {
    const double q = 2.0 * a0 / M_PI;
    const double r = 8.0 * a1 / (3.0 * M_PI);
    KappaCoeffs K;
    K.K1 = q;
    K.K2 = q * q;
    K.K3 = q * q * q + r;
    K.K4 = q * q * q * q + 2.0 * q * r;
    return K;
}

inline double kappa(double lambda, double eps, const AsymptoticConstants& c) {
    if (!(eps >= 0.0)) throw DomainError("kappa: eps >= 0 required");
    return kappa_coeffs(lambda, c.a0(), c.a1()).eval(eps);
}

inline double kappa_inf(double eps, const AsymptoticConstants& c) {
    if (!(eps >= 0.0)) throw DomainError("kappa_inf: eps >= 0 required");
    return kappa_inf_coeffs(c.a0(), c.a1()).eval(eps);
}

inline double varpi_from_epsilon(double lambda, double eps, const AsymptoticConstants& c) {
    if (!(eps >= 0.0)) throw DomainError("varpi_from_epsilon: eps >= 0 required");
    const VarpiCoeffs E = varpi_coeffs(lambda, c.a0(), c.a1());
    return eps * (1.0 + eps * (E.E1 + eps * (E.E2 + eps * (E.E3 + eps * E.E4))));
}

// Order-4 reversion of the normalized force relation
//   Pt^{lambda+1} = vp^{lambda+1} (1 + C1 vp + ... + C4 vp^4)
// solved for vp(Pt) = Pt (1 + D1 Pt + ... + D4 Pt^4). The reversion is done
// by polynomial algebra (binomial expansion of the (lambda+1)-th root, then
// standard series reversion), never from hand-entered coefficients.
inline ReversionCoeffs reversion_coeffs(double lambda, double a0, double a1) {
    const ForceCoeffs C = force_coeffs(lambda, a0, a1);
    const double p = 1.0 / (lambda + 1.0);
    // (1 + C1 x + C2 x^2 + C3 x^3 + C4 x^4)^p truncated at x^4
    const double c1 = p * C.C1;
    const double c2 = p * C.C2 + p * (p - 1.0) / 2.0 * C.C1 * C.C1;
    const double c3 = p * C.C3 + p * (p - 1.0) * C.C1 * C.C2 +
                      p * (p - 1.0) * (p - 2.0) / 6.0 * std::pow(C.C1, 3);
    const double c4 = p * C.C4 + p * (p - 1.0) * (C.C1 * C.C3 + 0.5 * C.C2 * C.C2) +
                      p * (p - 1.0) * (p - 2.0) / 2.0 * C.C1 * C.C1 * C.C2 +
                      p * (p - 1.0) * (p - 2.0) * (p - 3.0) / 24.0 * std::pow(C.C1, 4);
    ReversionCoeffs D;
    D.D1 = -c1;
    D.D2 = 2.0 * c1 * c1 - c2;
    D.D3 = -5.0 * std::pow(c1, 3) + 5.0 * c1 * c2 - c3;
    D.D4 = 14.0 * std::pow(c1, 4) - 21.0 * c1 * c1 * c2 + 6.0 * c1 * c3 + 3.0 * c2 * c2 - c4;
    return D;
}

// All expansion-coefficient families for one (lambda, a0, a1).
struct ExpansionCoeffs {
    RadiusCoeffs B;
    ForceCoeffs C;
    ReversionCoeffs D;
    KappaCoeffs Kp;
    VarpiCoeffs E;
};

inline ExpansionCoeffs expansion_coeffs(double lambda, double a0, double a1) {
    return {radius_coeffs(lambda, a0, a1), force_coeffs(lambda, a0, a1),
            reversion_coeffs(lambda, a0, a1), kappa_coeffs(lambda, a0, a1),
            varpi_coeffs(lambda, a0, a1)};
}

// One point on an indentation curve. eps = a/h; vp and Pt are the normalized
// displacement and force of the power-law model; validity of the asymptotics
// degrades beyond eps ~ 0.5 (reported, not enforced).
struct IndentationState {
    double a = 0.0;
    double w = 0.0;
    double P = 0.0;
    double eps = 0.0;
    double varpi = 0.0;
    double Ptilde = 0.0;

    bool within_validity() const { return eps <= 0.5; }
};

inline double varpi_of_w(double w, const PowerLawShape& s, double h) {
    return std::pow(w / (s.A * shape_factors(s.lambda).F2), 1.0 / s.lambda) / h;
}

inline double ptilde_of_P(double P, const PowerLawShape& s, double theta, double h) {
    const ShapeFactors f = shape_factors(s.lambda);
    return std::pow(P / (theta * s.A * f.F1), 1.0 / (s.lambda + 1.0)) / h;
}

// Forward (parametric in the contact radius) evaluation of the fourth-order
// force and displacement relations.
inline IndentationState parametric_state(double a, const PowerLawShape& s, double theta,
                                         double h, const AsymptoticConstants& c) {
    check_shape(s);
    if (!(a > 0.0)) throw DomainError("parametric_state: contact radius must be positive");
    const double l = s.lambda;
    const double a0 = c.a0(), a1 = c.a1();
    const ShapeFactors f = shape_factors(l);
    const double eps = a / h;
    const double e3 = eps * eps * eps;
    IndentationState st;
    st.a = a;
    st.eps = eps;
    st.P = theta * s.A * f.F1 * std::pow(a, l + 1.0) * (1.0 - e3 * 8.0 * a1 / (3.0 * M_PI));
    st.w = s.A * f.F2 * std::pow(a, l) *
           (1.0 - eps * 2.0 * l * a0 / (M_PI * (l + 1.0)) -
            e3 * 8.0 * l * (2.0 * l + 5.0) * a1 / (3.0 * M_PI * (l + 3.0) * (l + 1.0)) +
            e3 * eps * 16.0 * l * a0 * a1 / (3.0 * M_PI * M_PI * (l + 1.0)));
    if (!(st.w > 0.0) || !(st.P > 0.0))
        throw DomainError("parametric_state: corrections drive w or P non-positive; "
                          "outside the model's validity range (eps = " +
                          std::to_string(eps) + ")");
    st.varpi = varpi_of_w(st.w, s, h);
    st.Ptilde = ptilde_of_P(st.P, s, theta, h);
    return st;
}

inline double radius_from_displacement(double w, const PowerLawShape& s, double /*theta*/,
                                       double h, const AsymptoticConstants& c) {
    check_shape(s);
    if (!(w > 0.0)) throw DomainError("radius_from_displacement: w must be positive");
    const double vp = varpi_of_w(w, s, h);
    const RadiusCoeffs B = radius_coeffs(s.lambda, c.a0(), c.a1());
    return h * vp * (1.0 + vp * (B.B1 + vp * (B.B2 + vp * (B.B3 + vp * B.B4))));
}

inline double force_from_displacement(double w, const PowerLawShape& s, double theta, double h,
                                      const AsymptoticConstants& c) {
    check_shape(s);
    if (!(w > 0.0)) throw DomainError("force_from_displacement: w must be positive");
    const double l = s.lambda;
    const ShapeFactors f = shape_factors(l);
    const double vp = varpi_of_w(w, s, h);
    const ForceCoeffs C = force_coeffs(l, c.a0(), c.a1());
    const double base = theta * f.F3 * std::exp(-std::log(s.A) / l + (l + 1.0) / l * std::log(w));
    return base * (1.0 + vp * (C.C1 + vp * (C.C2 + vp * (C.C3 + vp * C.C4))));
}

inline double displacement_from_force(double P, const PowerLawShape& s, double theta, double h,
                                      const AsymptoticConstants& c) {
    check_shape(s);
    if (!(P > 0.0)) throw DomainError("displacement_from_force: P must be positive");
    const double l = s.lambda;
    const double a0 = c.a0(), a1 = c.a1();
    const ShapeFactors f = shape_factors(l);
    const double pt = ptilde_of_P(P, s, theta, h);
    const double base = std::exp(std::log(s.A) / (l + 1.0) +
                                 l / (l + 1.0) * std::log(P / (theta * f.F3)));
    return base * (1.0 - 2.0 * l * a0 / (M_PI * (l + 1.0)) * pt -
                   8.0 * l * (l + 2.0) * a1 / (3.0 * M_PI * (l + 1.0) * (l + 3.0)) * pt * pt * pt);
}

inline double radius_from_force(double P, const PowerLawShape& s, double theta, double h,
                                const AsymptoticConstants& c) {
    check_shape(s);
    if (!(P > 0.0)) throw DomainError("radius_from_force: P must be positive");
    const double pt = ptilde_of_P(P, s, theta, h);
    return h * pt * (1.0 + 8.0 * c.a1() / (3.0 * M_PI * (s.lambda + 1.0)) * pt * pt * pt);
}

// Incremental stiffness dP/dw in the closed rational form (ratio of the
// parametric derivatives dP/da and dw/da).
inline double stiffness(double a, const PowerLawShape& s, double theta, double h,
                        const AsymptoticConstants& c) {
    check_shape(s);
    if (!(a > 0.0)) throw DomainError("stiffness: contact radius must be positive");
    const double l = s.lambda;
    const double q = 2.0 * c.a0() / M_PI;
    const double r = 8.0 * c.a1() / (3.0 * M_PI);
    const double eps = a / h;
    const double e3 = eps * eps * eps;
    const double num = 1.0 - r * (l + 4.0) / (l + 1.0) * e3;
    const double den = 1.0 - q * eps - r * (2.0 * l + 5.0) / (l + 1.0) * e3 +
                       q * r * (l + 4.0) / (l + 1.0) * e3 * eps;
    return 4.0 * theta * a * num / den;
}

// eps-series coefficients of the rational stiffness form, obtained by
// truncated polynomial division; they are lambda-independent and coincide
// with kappa_inf's coefficients.
inline KappaCoeffs stiffness_series(double lambda, double a0, double a1) {
    const double l = lambda;
    const double q = 2.0 * a0 / M_PI;
    const double r = 8.0 * a1 / (3.0 * M_PI);
    const std::array<double, 5> num = {1.0, 0.0, 0.0, -r * (l + 4.0) / (l + 1.0), 0.0};
    const std::array<double, 5> den = {1.0, -q, 0.0, -r * (2.0 * l + 5.0) / (l + 1.0),
                                       q * r * (l + 4.0) / (l + 1.0)};
    std::array<double, 5> out{};
    for (int n = 0; n <= 4; ++n) {
        double s = num[static_cast<std::size_t>(n)];
        for (int k = 1; k <= n; ++k) s -= den[static_cast<std::size_t>(k)] * out[static_cast<std::size_t>(n - k)];
        out[static_cast<std::size_t>(n)] = s;
    }
    return {out[1], out[2], out[3], out[4]};
}

// Expanded stiffness 4 theta a kappa_inf(eps); equivalent to the series form
// of the rational expression through fourth order.
inline double stiffness_expanded(double a, double theta, double h, const AsymptoticConstants& c) {
    if (!(a > 0.0)) throw DomainError("stiffness_expanded: contact radius must be positive");
    return 4.0 * theta * a * kappa_inf(a / h, c);
}

// Stiffness-from-contact-area form 4 theta sqrt(area/pi) kappa_inf(eps).
inline double bash_stiffness(double contact_area, double theta, double h,
                             const AsymptoticConstants& c) {
    if (!(contact_area > 0.0)) throw DomainError("bash_stiffness: contact area must be positive");
    const double a = std::sqrt(contact_area / M_PI);
    return 4.0 * theta * a * kappa_inf(a / h, c);
}

// Cylindrical flat punch of fixed radius a: P is linear in w at fixed a.
inline double flat_punch_force(double a, double w, double theta, double h,
                               const AsymptoticConstants& c) {
    if (!(a > 0.0) || !(w > 0.0)) throw DomainError("flat_punch_force: a and w must be positive");
    return 4.0 * theta * a * kappa_inf(a / h, c) * w;
}

inline double flat_punch_stiffness(double a, double theta, double h,
                                   const AsymptoticConstants& c) {
    if (!(a > 0.0)) throw DomainError("flat_punch_stiffness: a must be positive");
    return 4.0 * theta * a * kappa_inf(a / h, c);
}

} // namespace layerdent
