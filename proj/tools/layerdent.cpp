// layerdent - batch front end for layered-medium indentation curves.
//
// Subcommands:
//   coeffs     material constants, kernel coupling coefficients, a_m, K0/K1
//   curve      force/displacement/contact-radius sweep (CSV or JSON)
//   invert     force- or displacement-driven sweep (inverse relations only)
//   stiffness  incremental stiffness and contact-area form vs contact radius
//   validate   internal consistency suite; nonzero exit on failure
//
// Exit codes: 0 success, 1 validation failure, 2 config error, 3 numeric
// non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "layerdent/config.hpp"
#include "layerdent/layerdent.hpp"

namespace {

using namespace layerdent;
using cli::CurveRow;
using cli::Medium;
using cli::RunConfig;
using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

struct Output {
    std::unique_ptr<std::ofstream> file;
    std::ostream* os = &std::cout;

    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) throw ConfigError("cannot open output file: " + path);
            os = file.get();
        }
    }
    std::ostream& stream() { return *os; }
};

void write_rows_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
    os << "a,w,P,eps,varpi,kappa,dPdw,valid\n";
    for (const auto& r : rows) {
        os << fmt(r.a) << ',' << fmt(r.w) << ',' << fmt(r.P) << ',' << fmt(r.eps) << ','
           << fmt(r.varpi) << ',' << fmt(r.kappa) << ',' << fmt(r.dPdw) << ','
           << (r.valid ? "true" : "false") << '\n';
        if (!r.error.empty()) std::cerr << "row skipped: " << r.error << '\n';
    }
}

void write_rows_json(std::ostream& os, const std::vector<CurveRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json o = {{"a", r.a},         {"w", r.w},       {"P", r.P},   {"eps", r.eps},
                  {"varpi", r.varpi}, {"kappa", r.kappa}, {"dPdw", r.dPdw}, {"valid", r.valid}};
        if (!r.error.empty()) o["error"] = r.error;
        arr.push_back(o);
    }
    os << arr.dump(2) << '\n';
}

json material_report(const MaterialParams& p) {
    return {{"gamma1", p.gamma1}, {"gamma2", p.gamma2}, {"m1", p.m1},
            {"m2", p.m2},         {"H", p.H}};
}

int cmd_coeffs(const RunConfig& cfg, int order) {
    std::vector<QuadratureReport> reports;
    Medium m = cli::build_medium(cfg, order);
    // re-run the moment integrals to surface their error estimates
    const TailBound tb = fit_tail(m.kernel);
    reports.reserve(m.consts.a.size());
    for (std::size_t i = 0; i < m.consts.a.size(); ++i) {
        auto integrand = [&](double u) {
            double w = 1.0 - eval_L(m.kernel, u);
            for (std::size_t j = 0; j < 2 * i; ++j) w *= u;
            return w;
        };
        reports.push_back(tb.null_kernel
                              ? QuadratureReport{0.0, 0.0, 0, true}
                              : integrate(integrand, 0.0, tb.cutoff(1e-13), cfg.quad_tol));
    }

    json out;
    out["theta"] = m.theta;
    out["h"] = m.h;
    if (m.system) {
        out["layer"] = material_report(m.system->layer);
        out["substrate"] = material_report(m.system->substrate);
        const KernelModel& k = std::get<KernelModel>(m.kernel);
        out["kernel"] = {{"a11", k.a11}, {"a12", k.a12}, {"a21", k.a21}, {"a22", k.a22},
                         {"Z", k.Z},     {"g", k.g},     {"Hratio", k.Hratio}};
    } else {
        const IsotropicKernelCoeffs& k = std::get<IsotropicKernelCoeffs>(m.kernel);
        out["kernel"] = {{"d1", k.d1}, {"d2", k.d2}, {"d3", k.d3}};
    }
    json am = json::array();
    for (std::size_t i = 0; i < m.consts.a.size(); ++i) {
        am.push_back({{"m", i},
                      {"value", m.consts.a[i]},
                      {"quad_error_estimate", reports[i].est_error},
                      {"panels", reports[i].panels}});
    }
    out["a"] = am;
    out["K0"] = m.consts.K0;
    out["K1"] = m.consts.K1;

    Output sink(cfg.out_path);
    if (cfg.out_format == "json") {
        sink.stream() << out.dump(2) << '\n';
    } else {
        auto& os = sink.stream();
        os << "theta = " << fmt(m.theta) << "\nh     = " << fmt(m.h) << '\n';
        if (m.system) {
            for (const char* which : {"layer", "substrate"}) {
                const json& mp = out[which];
                os << which << ": gamma1 = " << fmt(mp["gamma1"]) << "  gamma2 = "
                   << fmt(mp["gamma2"]) << "  m1 = " << fmt(mp["m1"]) << "  H = "
                   << fmt(mp["H"]) << '\n';
            }
            const json& k = out["kernel"];
            os << "kernel: a11 = " << fmt(k["a11"]) << "  a12 = " << fmt(k["a12"])
               << "  a21 = " << fmt(k["a21"]) << "  a22 = " << fmt(k["a22"]) << '\n'
               << "        Z = " << fmt(k["Z"]) << "  g = " << fmt(k["g"])
               << "  Hratio = " << fmt(k["Hratio"]) << '\n';
        } else {
            const json& k = out["kernel"];
            os << "kernel: d1 = " << fmt(k["d1"]) << "  d2 = " << fmt(k["d2"])
               << "  d3 = " << fmt(k["d3"]) << '\n';
        }
        for (const auto& e : out["a"]) {
            os << "a_" << e["m"] << " = " << fmt(e["value"])
               << "   (quadrature error estimate " << fmt(e["quad_error_estimate"]) << ")\n";
        }
        os << "K0  = " << fmt(m.consts.K0) << "\nK1  = " << fmt(m.consts.K1) << '\n';
    }
    return 0;
}

int cmd_curve(const RunConfig& cfg, bool invert_only) {
    if (!cfg.sweep) throw ConfigError("curve/invert: config must contain a 'sweep' block");
    if (invert_only && cfg.sweep->variable == cli::SweepVariable::Radius)
        throw ConfigError("invert: sweep variable must be w or P (inverse-direction only)");
    Medium m = cli::build_medium(cfg);
    const auto rows = cli::run_curve(cfg, m);
    Output sink(cfg.out_path);
    if (cfg.out_format == "json")
        write_rows_json(sink.stream(), rows);
    else
        write_rows_csv(sink.stream(), rows);
    return 0;
}

int cmd_stiffness(const RunConfig& cfg) {
    if (!cfg.sweep) throw ConfigError("stiffness: config must contain a 'sweep' block");
    if (cfg.sweep->variable != cli::SweepVariable::Radius)
        throw ConfigError("stiffness: sweep variable must be the contact radius a");
    Medium m = cli::build_medium(cfg);
    Output sink(cfg.out_path);
    auto& os = sink.stream();
    json arr = json::array();
    if (cfg.out_format == "csv") os << "a,area,eps,kappa,dPdw,valid\n";
    for (double a : cli::sweep_values(*cfg.sweep)) {
        const double eps = a / m.h;
        const double kinf = kappa_inf(eps, m.consts);
        const double S = 4.0 * m.theta * a * kinf;
        const double area = M_PI * a * a;
        const bool valid = eps <= 0.5;
        if (cfg.out_format == "csv") {
            os << fmt(a) << ',' << fmt(area) << ',' << fmt(eps) << ',' << fmt(kinf) << ','
               << fmt(S) << ',' << (valid ? "true" : "false") << '\n';
        } else {
            arr.push_back({{"a", a},
                           {"area", area},
                           {"eps", eps},
                           {"kappa", kinf},
                           {"dPdw", S},
                           {"valid", valid}});
        }
    }
    if (cfg.out_format == "json") os << arr.dump(2) << '\n';
    return 0;
}

int cmd_validate(const RunConfig& cfg) {
    Medium m = cli::build_medium(cfg);
    const auto checks = validate::run_validation(m.kernel, m.theta, m.h, m.consts);
    Output sink(cfg.out_path);
    auto& os = sink.stream();
    bool ok = true;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  measured=" << fmt(c.measured)
           << "  (" << c.detail << ")\n";
        ok = ok && c.passed;
    }
    os << (ok ? "all checks passed\n" : "one or more checks FAILED\n");
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"indentation of a coated elastic half-space: curves, inversions, stiffness"};
    app.require_subcommand(1);

    std::string config_path, out_path, format;
    double tol = 0.0;
    int order = 1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON configuration file")->required();
        sub->add_option("--out", out_path, "output path (default stdout)");
        sub->add_option("--format", format, "output format: csv|json");
        sub->add_option("--tol", tol, "override quadrature tolerance");
        return sub;
    };

    auto* coeffs = add_common(app.add_subcommand("coeffs", "kernel and asymptotic constants"));
    coeffs->add_option("--order", order, "highest moment index m (0..3)")
        ->check(CLI::Range(0, 3));
    auto* curve = add_common(app.add_subcommand("curve", "sweep force-displacement curve"));
    auto* invert = add_common(app.add_subcommand("invert", "force/displacement-driven inversion"));
    auto* stiffness = add_common(app.add_subcommand("stiffness", "incremental stiffness sweep"));
    auto* validate_cmd = add_common(app.add_subcommand("validate", "internal consistency suite"));

    CLI11_PARSE(app, argc, argv);

    try {
        layerdent::cli::RunConfig cfg = layerdent::cli::load_config(config_path);
        if (!out_path.empty()) cfg.out_path = out_path;
        if (!format.empty()) {
            if (format != "csv" && format != "json")
                throw layerdent::ConfigError("--format must be csv or json");
            cfg.out_format = format;
        }
        if (tol > 0.0) cfg.quad_tol = tol;

        if (coeffs->parsed()) return cmd_coeffs(cfg, order);
        if (curve->parsed()) return cmd_curve(cfg, false);
        if (invert->parsed()) return cmd_curve(cfg, true);
        if (stiffness->parsed()) return cmd_stiffness(cfg);
        if (validate_cmd->parsed()) return cmd_validate(cfg);
    } catch (const layerdent::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const layerdent::QuadratureNotConverged& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    } catch (const layerdent::NoBracket& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    } catch (const layerdent::Error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
