#pragma once

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "layerdent/errors.hpp"
#include "layerdent/hemisphere.hpp"
#include "layerdent/kernel.hpp"
#include "layerdent/materials.hpp"
#include "layerdent/oracle.hpp"
#include "layerdent/powerlaw.hpp"

// Batch-run configuration: JSON with one section per concern (materials,
// geometry, sweep, tolerances, output). All quantities are plain numbers in
// the user's consistent unit system.

namespace layerdent::cli {

using nlohmann::json;

enum class IndenterKind { PowerLaw, Cone, Paraboloid, Hemisphere, FlatPunch };
enum class SweepVariable { Displacement, Force, Radius };

struct MaterialBlock {
    std::optional<EngineeringConstants> engineering;
    std::optional<std::pair<double, double>> isotropic; // (E, nu)
    std::optional<MaterialParams> params;
    std::optional<IsotropicKernelCoeffs> d; // isotropic kernel coefficients
};

struct SweepBlock {
    SweepVariable variable = SweepVariable::Displacement;
    double min = 0.0;
    double max = 0.0;
    int count = 1;
    bool log_spacing = false;
};

struct RunConfig {
    MaterialBlock layer;
    MaterialBlock substrate;
    double h = 0.0;
    IndenterKind kind = IndenterKind::Paraboloid;
    double lambda = 2.0;    // powerlaw
    double amplitude = 0.0; // powerlaw A
    double cone_gamma = 0.0;
    double R = 0.0;           // paraboloid / hemisphere tip radius
    double punch_radius = 0.0;
    std::optional<SweepBlock> sweep;
    double quad_tol = 1e-10;
    double root_tol = 1e-12;
    std::string out_path;          // empty = stdout
    std::string out_format = "csv"; // csv | json
};

namespace detail {

inline double require_number(const json& j, const std::string& section, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ConfigError(section + ": missing or non-numeric field '" + key + "'");
    return j[key].get<double>();
}

inline MaterialBlock parse_material(const json& j, const std::string& section) {
    if (!j.is_object()) throw ConfigError(section + ": must be an object");
    MaterialBlock b;
    int reprs = 0;
    if (j.contains("engineering")) {
        const json& e = j["engineering"];
        b.engineering = EngineeringConstants{
            require_number(e, section + ".engineering", "E"),
            require_number(e, section + ".engineering", "E_axial"),
            require_number(e, section + ".engineering", "nu"),
            require_number(e, section + ".engineering", "nu_axial"),
            require_number(e, section + ".engineering", "G_axial")};
        ++reprs;
    }
    if (j.contains("isotropic")) {
        const json& e = j["isotropic"];
        b.isotropic = {require_number(e, section + ".isotropic", "E"),
                       require_number(e, section + ".isotropic", "nu")};
        ++reprs;
    }
    if (j.contains("params")) {
        const json& e = j["params"];
        MaterialParams p{};
        p.gamma1 = require_number(e, section + ".params", "gamma1");
        p.gamma2 = require_number(e, section + ".params", "gamma2");
        p.m1 = require_number(e, section + ".params", "m1");
        p.H = require_number(e, section + ".params", "H");
        if (!(p.gamma1 > p.gamma2) || !(p.gamma2 > 0.0))
            throw ConfigError(section + ".params: requires gamma1 > gamma2 > 0");
        if (!(p.H > 0.0)) throw ConfigError(section + ".params: requires H > 0");
        if (p.m1 == 0.0) throw ConfigError(section + ".params: m1 must be nonzero");
        p.m2 = 1.0 / p.m1;
        p.g1 = p.gamma1 / (p.gamma1 - p.gamma2);
        p.g2 = p.gamma2 / (p.gamma1 - p.gamma2);
        b.params = p;
        ++reprs;
    }
    if (reprs != 1)
        throw ConfigError(section +
                          ": exactly one of 'engineering', 'isotropic', 'params' is required");
    if (j.contains("d")) {
        const json& d = j["d"];
        if (!d.is_array() || d.size() != 3)
            throw ConfigError(section + ".d: must be an array [d1, d2, d3]");
        b.d = IsotropicKernelCoeffs{d[0].get<double>(), d[1].get<double>(), d[2].get<double>()};
    }
    return b;
}

} // namespace detail

inline RunConfig parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    RunConfig c;
    if (!j.contains("layer") || !j.contains("substrate"))
        throw ConfigError("config: 'layer' and 'substrate' material blocks are required");
    c.layer = detail::parse_material(j["layer"], "layer");
    c.substrate = detail::parse_material(j["substrate"], "substrate");
    c.h = detail::require_number(j, "config", "h");
    if (!(c.h > 0.0)) throw ConfigError("config: h must be positive");

    if (!j.contains("indenter") || !j["indenter"].is_object())
        throw ConfigError("config: 'indenter' block is required");
    const json& ind = j["indenter"];
    const std::string kind = ind.value("kind", "");
    if (kind == "powerlaw") {
        c.kind = IndenterKind::PowerLaw;
        c.lambda = detail::require_number(ind, "indenter", "lambda");
        c.amplitude = detail::require_number(ind, "indenter", "A");
        if (!(c.lambda >= 1.0)) throw ConfigError("indenter: lambda must satisfy lambda >= 1");
        if (!(c.amplitude > 0.0)) throw ConfigError("indenter: A must be positive");
    } else if (kind == "cone") {
        c.kind = IndenterKind::Cone;
        c.cone_gamma = detail::require_number(ind, "indenter", "gamma");
        if (!(c.cone_gamma > 0.0) || !(c.cone_gamma < M_PI / 2.0))
            throw ConfigError("indenter: cone angle gamma must lie in (0, pi/2)");
    } else if (kind == "paraboloid") {
        c.kind = IndenterKind::Paraboloid;
        c.R = detail::require_number(ind, "indenter", "R");
        if (!(c.R > 0.0)) throw ConfigError("indenter: R must be positive");
    } else if (kind == "hemisphere") {
        c.kind = IndenterKind::Hemisphere;
        c.R = detail::require_number(ind, "indenter", "R");
        if (!(c.R > 0.0)) throw ConfigError("indenter: R must be positive");
    } else if (kind == "flatpunch") {
        c.kind = IndenterKind::FlatPunch;
        c.punch_radius = detail::require_number(ind, "indenter", "a");
        if (!(c.punch_radius > 0.0)) throw ConfigError("indenter: punch radius a must be positive");
    } else {
        throw ConfigError("indenter: kind must be one of powerlaw|cone|paraboloid|hemisphere|flatpunch");
    }

    if (j.contains("sweep")) {
        const json& s = j["sweep"];
        SweepBlock sw;
        const std::string var = s.value("variable", "");
        if (var == "w")
            sw.variable = SweepVariable::Displacement;
        else if (var == "P")
            sw.variable = SweepVariable::Force;
        else if (var == "a")
            sw.variable = SweepVariable::Radius;
        else
            throw ConfigError("sweep: variable must be one of w|P|a");
        sw.min = detail::require_number(s, "sweep", "min");
        sw.max = detail::require_number(s, "sweep", "max");
        sw.count = s.value("count", 1);
        if (!(sw.min > 0.0) || !(sw.min < sw.max))
            throw ConfigError("sweep: requires 0 < min < max");
        if (sw.count < 1) throw ConfigError("sweep: count must be >= 1");
        const std::string spacing = s.value("spacing", "linear");
        if (spacing == "log")
            sw.log_spacing = true;
        else if (spacing != "linear")
            throw ConfigError("sweep: spacing must be linear|log");
        c.sweep = sw;
    }

    if (j.contains("tolerances")) {
        const json& t = j["tolerances"];
        c.quad_tol = t.value("quadrature", 1e-10);
        c.root_tol = t.value("root", 1e-12);
        if (!(c.quad_tol > 0.0) || !(c.root_tol > 0.0))
            throw ConfigError("tolerances: must be positive");
    }
    if (j.contains("output")) {
        const json& o = j["output"];
        c.out_path = o.value("path", "");
        c.out_format = o.value("format", "csv");
        if (c.out_format != "csv" && c.out_format != "json")
            throw ConfigError("output: format must be csv|json");
    }
    return c;
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return parse_config(j);
}

// Resolved physical system: the kernel, its constants, and the contact modulus.
struct Medium {
    Kernel kernel = IsotropicKernelCoeffs{};
    double theta = 0.0;
    double h = 0.0;
    AsymptoticConstants consts;
    std::optional<LayerSystem> system; // present on the anisotropic path
};

inline Medium build_medium(const RunConfig& c, int order = 1) {
    Medium m;
    m.h = c.h;
    const bool iso_pair = c.layer.isotropic.has_value() && c.substrate.isotropic.has_value();
    if (iso_pair) {
        const auto [El, nul] = *c.layer.isotropic;
        const auto [Es, nus] = *c.substrate.isotropic;
        if (!(El > 0.0) || !(1.0 - nul * nul > 0.0))
            throw ConfigError("layer.isotropic: requires E > 0 and |nu| < 1");
        IsotropicKernelCoeffs d;
        if (c.substrate.d) {
            d = *c.substrate.d;
        } else if (El == Es && nul == nus) {
            d = IsotropicKernelCoeffs{0.0, 0.0, 0.0}; // identical media, Q vanishes
        } else {
            throw ConfigError("substrate: an isotropic layer/substrate pair requires the kernel "
                              "coefficients d = [d1, d2, d3] on the substrate block");
        }
        m.kernel = d;
        m.theta = isotropic_theta(El, nul);
    } else {
        auto resolve = [](const MaterialBlock& b, const char* which) -> MaterialParams {
            if (b.params) return *b.params;
            if (b.engineering) {
                try {
                    return material_params(*b.engineering);
                } catch (const Error& e) {
                    throw ConfigError(std::string(which) + ": " + e.what());
                }
            }
            // isotropic block on the anisotropic path has degenerate roots by
            // construction
            throw ConfigError(std::string(which) +
                              ": isotropic material in a transversely isotropic pair; use the "
                              "isotropic path (both blocks isotropic, with substrate d "
                              "coefficients) instead");
        };
        const MaterialParams lay = resolve(c.layer, "layer");
        const MaterialParams sub = resolve(c.substrate, "substrate");
        const LayerSystem sys = build_layer_system(lay, sub, c.h);
        m.system = sys;
        m.theta = sys.theta;
        m.kernel = build_kernel_ti(sys);
    }
    m.consts = asymptotic_constants(m.kernel, order, c.quad_tol);
    return m;
}

// One output row; rows that fail row-level domain checks carry NaNs and the
// error message instead of aborting the sweep.
struct CurveRow {
    double a = std::nan("");
    double w = std::nan("");
    double P = std::nan("");
    double eps = std::nan("");
    double varpi = std::nan("");
    double kappa = std::nan("");
    double dPdw = std::nan("");
    bool valid = false;
    std::string error;
};

inline std::vector<double> sweep_values(const SweepBlock& s) {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(s.count));
    if (s.count == 1) {
        v.push_back(s.min);
        return v;
    }
    for (int i = 0; i < s.count; ++i) {
        const double t = static_cast<double>(i) / (s.count - 1);
        v.push_back(s.log_spacing ? s.min * std::pow(s.max / s.min, t)
                                  : s.min + (s.max - s.min) * t);
    }
    return v;
}

inline PowerLawShape power_shape(const RunConfig& c) {
    switch (c.kind) {
        case IndenterKind::PowerLaw: return {c.lambda, c.amplitude};
        case IndenterKind::Cone: return PowerLawShape::cone(c.cone_gamma);
        case IndenterKind::Paraboloid: return PowerLawShape::paraboloid(c.R);
        default: throw ConfigError("indenter kind is not a power-law profile");
    }
}

inline CurveRow curve_row(const RunConfig& c, const Medium& m, double value) {
    CurveRow row;
    try {
        switch (c.kind) {
            case IndenterKind::PowerLaw:
            case IndenterKind::Cone:
            case IndenterKind::Paraboloid: {
                const PowerLawShape s = power_shape(c);
                IndentationState st;
                if (!c.sweep) throw ConfigError("sweep block is required");
                switch (c.sweep->variable) {
                    case SweepVariable::Radius:
                        st = parametric_state(value, s, m.theta, m.h, m.consts);
                        break;
                    case SweepVariable::Displacement: {
                        st.w = value;
                        st.a = radius_from_displacement(value, s, m.theta, m.h, m.consts);
                        st.P = force_from_displacement(value, s, m.theta, m.h, m.consts);
                        st.eps = st.a / m.h;
                        st.varpi = varpi_of_w(st.w, s, m.h);
                        st.Ptilde = ptilde_of_P(st.P, s, m.theta, m.h);
                        break;
                    }
                    case SweepVariable::Force: {
                        st.P = value;
                        st.w = displacement_from_force(value, s, m.theta, m.h, m.consts);
                        st.a = radius_from_force(value, s, m.theta, m.h, m.consts);
                        st.eps = st.a / m.h;
                        st.varpi = varpi_of_w(st.w, s, m.h);
                        st.Ptilde = ptilde_of_P(st.P, s, m.theta, m.h);
                        break;
                    }
                }
                row.a = st.a;
                row.w = st.w;
                row.P = st.P;
                row.eps = st.eps;
                row.varpi = st.varpi;
                row.kappa = kappa(s.lambda, st.eps, m.consts);
                row.dPdw = stiffness(st.a, s, m.theta, m.h, m.consts);
                break;
            }
            case IndenterKind::Hemisphere: {
                double alpha = 0.0;
                double P = 0.0, w = 0.0;
                const double mu = c.R / m.h;
                switch (c.sweep->variable) {
                    case SweepVariable::Radius: {
                        alpha = value / c.R;
                        auto [Pv, wv] = hemi_parametric(alpha, mu, m.theta, c.R, m.consts);
                        P = Pv;
                        w = wv;
                        break;
                    }
                    case SweepVariable::Force: {
                        const double alpha0 = alpha0_from_force(value, m.theta, c.R, c.root_tol);
                        const EnglandResult er = england_expansion(alpha0, mu, c.R, m.consts);
                        alpha = er.state.alpha;
                        P = value;
                        w = er.w;
                        break;
                    }
                    case SweepVariable::Displacement: {
                        alpha = oracle::bracket_invert(
                            [&](double al) {
                                return hemi_parametric(al, mu, m.theta, c.R, m.consts).second;
                            },
                            value, 1e-9, hemi_alpha_limit, c.root_tol);
                        auto [Pv, wv] = hemi_parametric(alpha, mu, m.theta, c.R, m.consts);
                        P = Pv;
                        w = wv;
                        break;
                    }
                }
                row.a = alpha * c.R;
                row.w = w;
                row.P = P;
                row.eps = row.a / m.h;
                row.varpi = alpha; // natural dimensionless radius for this profile
                row.kappa = kappa_inf(row.eps, m.consts);
                row.dPdw = 4.0 * m.theta * row.a * row.kappa;
                break;
            }
            case IndenterKind::FlatPunch: {
                const double a = c.punch_radius;
                switch (c.sweep->variable) {
                    case SweepVariable::Radius:
                        throw ConfigError("flat punch: the radius is fixed; sweep w or P");
                    case SweepVariable::Displacement:
                        row.w = value;
                        row.P = flat_punch_force(a, value, m.theta, m.h, m.consts);
                        break;
                    case SweepVariable::Force:
                        row.P = value;
                        row.w = value / flat_punch_stiffness(a, m.theta, m.h, m.consts);
                        break;
                }
                row.a = a;
                row.eps = a / m.h;
                row.varpi = row.eps;
                row.kappa = kappa_inf(row.eps, m.consts);
                row.dPdw = flat_punch_stiffness(a, m.theta, m.h, m.consts);
                break;
            }
        }
        row.valid = row.eps <= 0.5;
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        row.error = e.what();
        row.valid = false;
    }
    return row;
}

inline std::vector<CurveRow> run_curve(const RunConfig& c, const Medium& m) {
    if (!c.sweep) throw ConfigError("this command requires a 'sweep' block");
    std::vector<CurveRow> rows;
    for (double v : sweep_values(*c.sweep)) rows.push_back(curve_row(c, m, v));
    return rows;
}

} // namespace layerdent::cli
