#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lckv/quadrature.hpp"
#include "lckv/models.hpp"

using namespace lckv;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const double kA = std::exp(2 * kPi);

ModelDescriptor deformed_desc() {
    ModelDescriptor d;
    d.model = "hopf-deformed";
    d.n = 2;
    d.a = kA;
    d.amplitude = 0.5;
    d.has_profile = true;
    d.lee_nonzero = true;
    return d;
}

} // namespace

TEST_CASE("euclidean annulus measure is reproduced within 1e-10 relative") {
    for (double a : {2.0, kA}) {
        const QuadratureGrid grid(16, 6, a);
        const double measure = grid.euclidean_volume();
        const double exact = kPi * kPi / 2.0 * (a * a * a * a - 1.0);  // vol(S^3)/4 * (a^4 - 1)
        CHECK(std::abs(measure - exact) <= 1e-10 * exact);
    }
}

TEST_CASE("euclidean weights integrate a radial polynomial accurately") {
    // integral of r^2 over the annulus: 2 pi^2 (a^6 - 1)/6; midpoint sampling of
    // h = r^2 against exact cell masses is second order in the radial step
    const double a = 2.0;
    const double exact = 2.0 * kPi * kPi * (std::pow(a, 6.0) - 1.0) / 6.0;
    double prev = 0.0;
    for (int nr : {16, 32}) {
        const QuadratureGrid grid(nr, 6, a);
        const double got =
            grid.integrate_euclidean([](const ChartPoint& p) { return p.radius2(); });
        const double err = std::abs(got - exact);
        if (prev > 0.0) CHECK(err <= prev / 3.5);  // order >= 2 in the radial direction
        prev = err;
    }
}

TEST_CASE("model volume: 32 pi^2 ln a at machine accuracy on the pinned grid") {
    for (double a : {2.0, kA}) {
        const LckStructure hopf = hopf_structure(2, a);
        const QuadratureGrid grid(16, 6, a);
        const double vol = integrate(hopf, quantity_by_name("volume"), grid);
        const double ref = 32.0 * kPi * kPi * std::log(a);
        CHECK(std::abs(vol - ref) <= 1e-10 * ref);
    }
}

TEST_CASE("deformed-model volume equals the base volume (profile integrates to zero)") {
    const LckStructure s = make_model(deformed_desc());
    const QuadratureGrid grid(16, 6, kA);
    const double vol = integrate(s, quantity_by_name("volume"), grid);
    const double ref = 32.0 * kPi * kPi * std::log(kA);
    CHECK(std::abs(vol - ref) <= 1e-9 * ref);
}

TEST_CASE("divergence of the Lee field integrates to zero") {
    SUBCASE("hopf: the integrand is identically zero") {
        const LckStructure hopf = hopf_structure(2, 2.0);
        const QuadratureGrid grid(8, 4, 2.0);
        CHECK(std::abs(integrate(hopf, quantity_by_name("div-lee"), grid)) <= 1e-12);
    }
    SUBCASE("deformed: nonzero integrand, vanishing integral") {
        const LckStructure s = make_model(deformed_desc());
        const QuadratureGrid grid(16, 6, kA);
        const double vol_ref = 32.0 * kPi * kPi * std::log(kA);
        CHECK(std::abs(integrate(s, quantity_by_name("div-lee"), grid)) <= 1e-3 * vol_ref);
        // the integrand itself is far from zero
        const ChartPoint p{1.0 + 1e-3, 1e-3, 1e-3, 1e-3};
        const QuadPointData d = build_quad_point(s, p.scaled(1.0 / p.radius()));
        CHECK(std::abs(d.div_lee) > 0.2);
    }
}

TEST_CASE("integration by parts: T(h) vs h delta(theta) for h = |theta|^2") {
    const LckStructure s = make_model(deformed_desc());
    const QuadratureGrid grid(16, 6, kA);
    const double vol_ref = 32.0 * kPi * kPi * std::log(kA);
    CHECK(std::abs(integrate(s, quantity_by_name("ibp-defect"), grid)) <= 1e-3 * vol_ref);
}

TEST_CASE("check_integral_identities passes on hopf and deformed") {
    for (const char* name : {"hopf", "hopf-deformed"}) {
        ModelDescriptor d = deformed_desc();
        d.model = name;
        d.has_profile = (d.model == "hopf-deformed");
        const LckStructure s = make_model(d);
        const QuadratureGrid grid(16, 6, kA);
        const std::vector<IntegralCheck> checks = check_integral_identities(s, grid);
        CHECK(checks.size() >= 4);
        for (const IntegralCheck& c : checks) {
            INFO(c.id);
            CHECK(c.pass);
        }
        // |nabla theta|^2 identity only applies to parallel-Lee models
        bool has_grad = false;
        for (const IntegralCheck& c : checks) has_grad = has_grad || c.id == "q_grad_lee_norm2";
        CHECK(has_grad == (std::string(name) == "hopf"));
    }
}

TEST_CASE("integral errors halve (or better) under grid doubling") {
    const LckStructure s = make_model(deformed_desc());
    const double vol_ref = 32.0 * kPi * kPi * std::log(kA);
    const double floor = 1e-9 * vol_ref;
    for (const char* q : {"div-lee", "ibp-defect"}) {
        const QuadratureGrid coarse(8, 4, kA);
        const QuadratureGrid fine(16, 8, kA);
        const double e1 = std::abs(integrate(s, quantity_by_name(q), coarse));
        const double e2 = std::abs(integrate(s, quantity_by_name(q), fine));
        CHECK(e2 <= std::max(e1 / 2.0, floor));
    }
}

TEST_CASE("quadrature is seedless and deterministic") {
    const LckStructure s = make_model(deformed_desc());
    const QuadratureGrid grid(8, 4, kA);
    const double a = integrate(s, quantity_by_name("div-lee"), grid);
    const double b = integrate(s, quantity_by_name("div-lee"), grid);
    CHECK(a == b);
}

TEST_CASE("grid weights are positive") {
    const QuadratureGrid grid(8, 6, 2.0);
    double min_weight = 1e300;
    grid.for_each_node([&](const ChartPoint&, double ds, double r4, double w_ang) {
        min_weight = std::min(min_weight, ds * r4 * w_ang);
    });
    CHECK(min_weight > 0.0);
}

TEST_CASE("desk-scale guard: n != 2 is rejected") {
    const LckStructure hopf3 = hopf_structure(3, 2.0);
    const QuadratureGrid grid(8, 4, 2.0);
    CHECK_THROWS_AS(integrate(hopf3, quantity_by_name("volume"), grid), UnsupportedError);
}

TEST_CASE("unknown integrand names are rejected") {
    CHECK_THROWS_AS(quantity_by_name("curvature"), StructuralError);
}

TEST_CASE("integrate_many shares geometry consistently") {
    const LckStructure s = make_model(deformed_desc());
    const QuadratureGrid grid(8, 4, kA);
    const std::vector<double> many =
        integrate_many(s, {quantity_by_name("volume"), quantity_by_name("div-lee")}, grid);
    CHECK(many[0] == integrate(s, quantity_by_name("volume"), grid));
    CHECK(many[1] == integrate(s, quantity_by_name("div-lee"), grid));
}
