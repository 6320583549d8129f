#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "layerdent/materials.hpp"
#include "fixtures.hpp"

using namespace layerdent;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

EngineeringConstants isotropic(double E, double nu) {
    return {E, E, nu, nu, E / (2.0 * (1.0 + nu))};
}

} // namespace

TEST_CASE("isotropic engineering constants reduce to the Lame form") {
    const double E = 2.6, nu = 0.3;
    const StiffnessModuli m = stiffness_from_engineering(isotropic(E, nu));
    CHECK_THAT(m.A11, WithinRel(E * (1 - nu) / ((1 + nu) * (1 - 2 * nu)), 1e-14));
    CHECK_THAT(m.A12, WithinRel(E * nu / ((1 + nu) * (1 - 2 * nu)), 1e-14));
    CHECK_THAT(m.A13, WithinRel(E * nu / ((1 + nu) * (1 - 2 * nu)), 1e-14));
    CHECK_THAT(m.A33, WithinRel(m.A11, 1e-14));
    CHECK_THAT(m.A44, WithinRel(E / (2 * (1 + nu)), 1e-14));
}

TEST_CASE("fixture moduli match the high-precision conversion") {
    const StiffnessModuli l = stiffness_from_engineering(fixtures::layer_eng());
    CHECK_THAT(l.A11, WithinRel(fixtures::layer_A11, 1e-15));
    CHECK_THAT(l.A12, WithinRel(fixtures::layer_A12, 1e-15));
    CHECK_THAT(l.A13, WithinRel(fixtures::layer_A13, 1e-15));
    CHECK_THAT(l.A33, WithinRel(fixtures::layer_A33, 1e-15));
    CHECK_THAT(l.A44, WithinRel(fixtures::layer_A44, 1e-15));
    const StiffnessModuli s = stiffness_from_engineering(fixtures::substrate_eng());
    CHECK_THAT(s.A11, WithinRel(fixtures::sub_A11, 1e-15));
    CHECK_THAT(s.A12, WithinRel(fixtures::sub_A12, 1e-15));
    CHECK_THAT(s.A13, WithinRel(fixtures::sub_A13, 1e-15));
    CHECK_THAT(s.A33, WithinRel(fixtures::sub_A33, 1e-15));
    CHECK_THAT(s.A44, WithinRel(fixtures::sub_A44, 1e-15));
}

TEST_CASE("stability violation is rejected with the offending quantity") {
    EngineeringConstants bad{1.0, 1.0, 0.4, 0.6, 0.4}; // 1 - 0.4 - 2*0.36 < 0
    CHECK_THROWS_AS(stiffness_from_engineering(bad), StabilityViolation);
    CHECK_THROWS_AS(stiffness_from_engineering({-1.0, 1.0, 0.2, 0.2, 0.5}), StabilityViolation);
}

TEST_CASE("characteristic roots: analytic biquadratic") {
    // A11=2, A44=1/2, A33=8, A13=(sqrt(41)-1)/2 gives g^4 - 6 g^2 + 4 = 0,
    // so g^2 = 3 +- sqrt(5).
    StiffnessModuli m{2.0, 0.0, (std::sqrt(41.0) - 1.0) / 2.0, 8.0, 0.5};
    const auto [g1, g2] = gamma_roots(m);
    CHECK_THAT(g1 * g1, WithinRel(3.0 + std::sqrt(5.0), 1e-12));
    CHECK_THAT(g2 * g2, WithinRel(3.0 - std::sqrt(5.0), 1e-12));
    // residual of the defining equation, relative to A11 A44 g^4
    for (double g : {g1, g2}) {
        const double res = m.A11 * m.A44 * std::pow(g, 4) -
                           (m.A11 * m.A33 - m.A13 * (m.A13 + 2 * m.A44)) * g * g +
                           m.A33 * m.A44;
        CHECK(std::fabs(res) <= 1e-12 * m.A11 * m.A44 * std::pow(g, 4));
    }
}

TEST_CASE("characteristic roots: degenerate cases are rejected") {
    // isotropic moduli force a double root g = 1
    CHECK_THROWS_AS(gamma_roots(stiffness_from_engineering(isotropic(5.0, 0.25))),
                    DegenerateRoots);
    // A11=A44=1, A33=4, A13=0 gives (g^2 - 2)^2 = 0: also degenerate
    CHECK_THROWS_AS(gamma_roots(StiffnessModuli{1.0, 0.0, 0.0, 4.0, 1.0}), DegenerateRoots);
}

TEST_CASE("fixture material parameters") {
    const MaterialParams l = material_params(stiffness_from_engineering(fixtures::layer_eng()));
    CHECK_THAT(l.gamma1, WithinRel(fixtures::layer_gamma1, 1e-13));
    CHECK_THAT(l.gamma2, WithinRel(fixtures::layer_gamma2, 1e-13));
    CHECK_THAT(l.m1, WithinRel(fixtures::layer_m1, 1e-13));
    CHECK_THAT(l.m2, WithinRel(fixtures::layer_m2, 1e-13));
    CHECK_THAT(l.H, WithinRel(fixtures::layer_H, 1e-13));
    const MaterialParams s =
        material_params(stiffness_from_engineering(fixtures::substrate_eng()));
    CHECK_THAT(s.gamma1, WithinRel(fixtures::sub_gamma1, 1e-13));
    CHECK_THAT(s.gamma2, WithinRel(fixtures::sub_gamma2, 1e-13));
    CHECK_THAT(s.m1, WithinRel(fixtures::sub_m1, 1e-13));
    CHECK_THAT(s.H, WithinRel(fixtures::sub_H, 1e-13));
    CHECK_THAT(l.g1 - l.g2, WithinAbs(1.0, 1e-14));
    CHECK_THAT(l.m1 * l.m2, WithinAbs(1.0, 1e-12));
}

TEST_CASE("randomized valid materials satisfy the algebraic identities") {
    // m1*m2 = 1 follows from Vieta (gamma1^2 gamma2^2 = A33/A11 and
    // gamma1^2 + gamma2^2 = [A11 A33 - A13(A13+2A44)]/(A11 A44));
    // A11 - A12 = E/(1+nu) is an identity of the conversion.
    std::mt19937_64 rng(0xc0ffee);
    std::uniform_real_distribution<double> uE(0.5, 50.0), uratio(0.3, 3.0), unu(0.0, 0.45),
        unua(0.0, 0.45), uG(0.2, 0.8);
    int accepted = 0, tried = 0;
    while (accepted < 1000 && tried < 200000) {
        ++tried;
        EngineeringConstants c{uE(rng), 0.0, unu(rng), unua(rng), 0.0};
        c.E_axial = c.E * uratio(rng);
        c.G_axial = c.E * uG(rng);
        try {
            const StiffnessModuli m = stiffness_from_engineering(c);
            CHECK_THAT(m.A11 - m.A12, WithinRel(c.E / (1.0 + c.nu), 1e-12));
            const MaterialParams p = material_params(m);
            CHECK(std::fabs(p.m1 * p.m2 - 1.0) <= 1e-12);
            CHECK(p.g1 - p.g2 == 1.0);
            const double res = m.A11 * m.A44 * std::pow(p.gamma1, 4) -
                               (m.A11 * m.A33 - m.A13 * (m.A13 + 2 * m.A44)) * p.gamma1 * p.gamma1 +
                               m.A33 * m.A44;
            CHECK(std::fabs(res) <= 1e-12 * m.A11 * m.A44 * std::pow(p.gamma1, 4));
            ++accepted;
        } catch (const Error&) {
            // invalid draw (unstable or degenerate); keep sampling
        }
    }
    REQUIRE(accepted == 1000);
}

TEST_CASE("layer system: theta and error attribution") {
    const LayerSystem sys =
        build_layer_system(fixtures::layer_eng(), fixtures::substrate_eng(), 1.0);
    CHECK_THAT(sys.theta, WithinRel(fixtures::theta, 1e-13));
    CHECK_THAT(sys.theta * 2.0 * M_PI * sys.layer.H, WithinAbs(1.0, 1e-14));
    CHECK_THROWS_AS(build_layer_system(fixtures::layer_eng(), fixtures::substrate_eng(), 0.0),
                    DomainError);
    try {
        build_layer_system(fixtures::layer_eng(), isotropic(3.0, 0.3), 1.0);
        FAIL("expected DegenerateRoots");
    } catch (const DegenerateRoots& e) {
        CHECK(std::string(e.what()).find("substrate") != std::string::npos);
    }
}

TEST_CASE("theta converges to the isotropic contact modulus as anisotropy vanishes") {
    const double E = 10.0, nu = 0.3;
    const double target = isotropic_theta(E, nu);
    auto theta_of = [&](double delta) {
        EngineeringConstants c = isotropic(E, nu);
        c.E_axial = E * (1.0 + delta); // keeps the characteristic roots real and distinct
        return 1.0 / (2.0 * M_PI * material_params(c).H);
    };
    const double e2 = std::fabs(theta_of(1e-2) - target);
    const double e3 = std::fabs(theta_of(1e-3) - target);
    const double e4 = std::fabs(theta_of(1e-4) - target);
    CHECK(e2 > e3);
    CHECK(e3 > e4);
    // first-order convergence: Richardson over the ratio-10 sequence improves
    const double extrap = (10.0 * theta_of(1e-3) - theta_of(1e-2)) / 9.0;
    CHECK(std::fabs(extrap - target) < 0.1 * e3);
}
