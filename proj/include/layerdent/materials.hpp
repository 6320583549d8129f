#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "layerdent/errors.hpp"

namespace layerdent {

// Five-constant description of a transversely isotropic material: E, nu act
// in the isotropy plane (parallel to the surface); E_axial, nu_axial, G_axial
// govern the response along the symmetry axis. One consistent pressure unit
// throughout; the library never converts units.
struct EngineeringConstants {
    double E;
    double E_axial;
    double nu;
    double nu_axial;
    double G_axial;
};

struct StiffnessModuli {
    double A11;
    double A12;
    double A13;
    double A33;
    double A44;
};

// Per-material derived quantities used by the two-medium kernel.
// gamma1 >= gamma2 > 0 by convention; H carries the 1/(2 pi) normalization;
// g1 - g2 = 1 and m1*m2 = 1 are algebraic identities of the theory.
struct MaterialParams {
    double gamma1;
    double gamma2;
    double m1;
    double m2;
    double H;
    double g1;
    double g2;
};

struct LayerSystem {
    MaterialParams layer;
    MaterialParams substrate;
    double h;     // layer thickness
    double theta; // layer contact modulus, 1/(2 pi H_layer)
};

inline StiffnessModuli stiffness_from_engineering(const EngineeringConstants& c) {
    if (!(c.E > 0.0) || !(c.E_axial > 0.0) || !(c.G_axial > 0.0))
        throw StabilityViolation("moduli must be positive (E, E_axial, G_axial)");
    if (!(1.0 + c.nu > 0.0))
        throw StabilityViolation("requires 1 + nu > 0");
    const double ratio = c.E / c.E_axial * c.nu_axial * c.nu_axial;
    const double denom = 1.0 - c.nu - 2.0 * ratio;
    if (!(denom > 0.0))
        throw StabilityViolation("requires 1 - nu - 2(E/E_axial) nu_axial^2 > 0; got " +
                                 std::to_string(denom));
    StiffnessModuli m;
    m.A11 = c.E * (1.0 - ratio) / ((1.0 + c.nu) * denom);
    m.A12 = c.E * (c.nu + ratio) / ((1.0 + c.nu) * denom);
    m.A13 = c.E * c.nu_axial / denom;
    m.A33 = c.E_axial * (1.0 - c.nu) / denom;
    m.A44 = c.G_axial;
    return m;
}

// Positive roots gamma1 >= gamma2 of the characteristic biquadratic
//   A11 A44 g^4 - [A11 A33 - A13 (A13 + 2 A44)] g^2 + A33 A44 = 0,
// solved in closed form (stable Vieta form for the smaller root).
inline std::pair<double, double> gamma_roots(const StiffnessModuli& m) {
    const double a = m.A11 * m.A44;
    const double b = m.A11 * m.A33 - m.A13 * (m.A13 + 2.0 * m.A44);
    const double c = m.A33 * m.A44;
    const double disc = b * b - 4.0 * a * c;
    if (!(disc > 0.0))
        throw DegenerateRoots("characteristic roots are equal or complex (discriminant " +
                              std::to_string(disc) + "); use the isotropic path");
    if (!(b > 0.0))
        throw DegenerateRoots("characteristic equation has no positive real roots");
    const double s1 = (b + std::sqrt(disc)) / (2.0 * a);
    const double s2 = c / (a * s1);
    if (!(s2 > 0.0))
        throw DegenerateRoots("characteristic equation has no positive real roots");
    return {std::sqrt(s1), std::sqrt(s2)};
}

inline MaterialParams material_params(const StiffnessModuli& m) {
    const auto [g1, g2] = gamma_roots(m);
    MaterialParams p;
    p.gamma1 = g1;
    p.gamma2 = g2;
    p.m1 = (m.A11 * g1 * g1 - m.A44) / (m.A13 + m.A44);
    p.m2 = (m.A11 * g2 * g2 - m.A44) / (m.A13 + m.A44);
    p.H = (g1 + g2) * m.A11 / (2.0 * M_PI * (m.A11 * m.A33 - m.A13 * m.A13));
    p.g1 = g1 / (g1 - g2);
    p.g2 = g2 / (g1 - g2);
    if (!(p.H > 0.0)) throw DegenerateRoots("derived compliance parameter H is not positive");
    return p;
}

inline MaterialParams material_params(const EngineeringConstants& c) {
    return material_params(stiffness_from_engineering(c));
}

// Contact modulus of an isotropic half-space surface.
inline double isotropic_theta(double E, double nu) {
    return E / (2.0 * (1.0 - nu * nu));
}

inline LayerSystem build_layer_system(const EngineeringConstants& layer,
                                      const EngineeringConstants& substrate, double h) {
    if (!(h > 0.0)) throw DomainError("layer thickness must be positive");
    LayerSystem sys;
    try {
        sys.layer = material_params(layer);
    } catch (const Error& e) {
        throw DegenerateRoots(std::string("layer material: ") + e.what());
    }
    try {
        sys.substrate = material_params(substrate);
    } catch (const Error& e) {
        throw DegenerateRoots(std::string("substrate material: ") + e.what());
    }
    sys.h = h;
    sys.theta = 1.0 / (2.0 * M_PI * sys.layer.H);
    return sys;
}

inline LayerSystem build_layer_system(const MaterialParams& layer,
                                      const MaterialParams& substrate, double h) {
    if (!(h > 0.0)) throw DomainError("layer thickness must be positive");
    LayerSystem sys{layer, substrate, h, 1.0 / (2.0 * M_PI * layer.H)};
    return sys;
}

} // namespace layerdent
