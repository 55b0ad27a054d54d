#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lckv/models.hpp"
#include "lckv/residuals.hpp"

using namespace lckv;

namespace {

const double kA = std::exp(2 * 3.14159265358979324);
const ChartPoint kP0{1.0, 0.0, 0.0, 0.0};

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

TEST_CASE("fundamental form") {
    SUBCASE("flat C^2: omega = dx1^dy1 + dx2^dy2") {
        const LckStructure flat = flat_kahler(2);
        const JForm2 w = flat.omega.eval({0.7, 0.1, -0.4, 0.9});
        CHECK(w.value(0, 1).value() == doctest::Approx(1.0));
        CHECK(w.value(2, 3).value() == doctest::Approx(1.0));
        CHECK(w.value(0, 2).value() == doctest::Approx(0.0));
        CHECK(w.value(0, 3).value() == doctest::Approx(0.0));
    }

    SUBCASE("Hopf base point: omega = 4(dx1^dy1 + dx2^dy2)") {
        const LckStructure hopf = hopf_structure(2, kA);
        const JForm2 w = hopf.omega.eval(kP0);
        CHECK(w.value(0, 1).value() == doctest::Approx(4.0));
        CHECK(w.value(2, 3).value() == doctest::Approx(4.0));
        CHECK(w.value(1, 2).value() == doctest::Approx(0.0));
    }

    SUBCASE("omega agrees with g(J., .) within 1e-12") {
        const LckStructure s = make_model(deformed_desc());
        for (const ChartPoint& p : sample_points(s.desc, 32, 3)) {
            const PointGeometry geo = build_point_geometry(s, p);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    double gj = 0.0;
                    for (int k = 0; k < 4; ++k) gj += geo.J_v.at(k, i) * geo.g_v.at(k, j);
                    CHECK(std::abs(geo.omega_full.at(i, j) - gj) < 1e-12);
                }
        }
    }

    SUBCASE("deformed: omega_bar = omega + f theta ^ J theta within 1e-10") {
        const LckStructure base = hopf_structure(2, kA);
        const LckStructure s = make_model(deformed_desc());
        for (const ChartPoint& p : sample_points(s.desc, 32, 5)) {
            const PointGeometry bg = build_point_geometry(base, p);
            const PointGeometry dg = build_point_geometry(s, p);
            const double f = dg.f.value();
            const DForm2 tjt = wedge11(bg.theta_v, bg.Jtheta_v);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    CHECK(std::abs(dg.omega_full.at(i, j) -
                                   (bg.omega_full.at(i, j) + f * tjt.value(i, j))) < 1e-10);
        }
    }

    SUBCASE("incompatible (g, J) is a structural error") {
        const int dim = 4;
        MetricField bad(dim, [](std::span<const Jet2> x) {
            const int jd = x.empty() ? 0 : x[0].dim();
            JMat g(4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    g.at(i, j) = Jet2::constant(jd, i == j ? (i == 0 ? 2.0 : 1.0) : 0.0);
            return g;
        });
        const TwoFormField w = fundamental_form(bad, standard_complex_structure_field(dim));
        CHECK_THROWS_AS(w.eval({0.4, 0.2, 0.6, 0.8}), StructuralError);
    }
}

TEST_CASE("lee form recovery") {
    SUBCASE("Hopf: theta = -2 dr / r, components (-2, 0, 0, 0) at the base point") {
        const LckStructure hopf = hopf_structure(2, kA);
        const OneFormField rec = lee_form(hopf.g, hopf.J, hopf.n);
        const JVec t0 = rec.eval(kP0);
        CHECK(t0[0].value() == doctest::Approx(-2.0));
        CHECK(t0[1].value() == doctest::Approx(0.0));
        CHECK(t0[2].value() == doctest::Approx(0.0));
        CHECK(t0[3].value() == doctest::Approx(0.0));
    }

    SUBCASE("recovery matches the analytic Lee form within 1e-9 on each model") {
        for (const char* name : {"flat", "hopf", "hopf-deformed"}) {
            ModelDescriptor d = deformed_desc();
            d.model = name;
            d.has_profile = (d.model == "hopf-deformed");
            const LckStructure s = make_model(d);
            const OneFormField rec = lee_form(s.g, s.J, s.n);
            for (const ChartPoint& p : sample_points(s.desc, 32, 7)) {
                const JVec got = rec.eval(p);
                const JVec want = s.theta.eval(p);
                for (int i = 0; i < 4; ++i)
                    CHECK(std::abs(got[i].value() - want[i].value()) <= 1e-9);
            }
        }
    }

    SUBCASE("deformed: recovered theta_bar = (1+f) theta within 1e-9") {
        const LckStructure base = hopf_structure(2, kA);
        const LckStructure s = make_model(deformed_desc());
        const OneFormField rec = lee_form(s.g, s.J, s.n);
        for (const ChartPoint& p : sample_points(s.desc, 32, 11)) {
            const JVec got = rec.eval(p);
            const JVec base_theta = base.theta.eval(p);
            const Jet2 f = s.profile.eval(p);
            for (int i = 0; i < 4; ++i)
                CHECK(std::abs(got[i].value() - (1.0 + f.value()) * base_theta[i].value()) <= 1e-9);
        }
    }

    SUBCASE("n = 1 is rejected") {
        const LckStructure flat = flat_kahler(1);
        CHECK_THROWS_AS(lee_form(flat.g, flat.J, 1), StructuralError);
    }
}

TEST_CASE("predicate checkers over the zoo") {
    const EvalParams params;

    SUBCASE("hopf: lcK, vaisman, gauduchon, potential all pass") {
        const LckStructure hopf = hopf_structure(2, kA);
        const std::vector<ChartPoint> pts = sample_points(hopf.desc, 64, 42);
        CHECK(check_lck(hopf, pts, params).pass);
        CHECK(check_vaisman(hopf, pts, params).pass);
        CHECK(check_gauduchon(hopf, pts, params).pass);
        CHECK(check_potential(hopf, pts, params).pass);
    }

    SUBCASE("deformed: lcK passes; vaisman, gauduchon, potential fail decisively") {
        const LckStructure s = make_model(deformed_desc());
        const std::vector<ChartPoint> pts = sample_points(s.desc, 64, 42);
        CHECK(check_lck(s, pts, params).pass);
        const CheckVerdict v = check_vaisman(s, pts, params);
        CHECK(!v.pass);
        CHECK(v.max_residual > 0.01);
        const CheckVerdict g = check_gauduchon(s, pts, params);
        CHECK(!g.pass);
        CHECK(g.max_residual > 0.01);
        const CheckVerdict q = check_potential(s, pts, params);
        CHECK(!q.pass);
        CHECK(q.max_residual > 0.01);
    }

    SUBCASE("flat: lcK with theta = 0 and vaisman pass") {
        const LckStructure flat = flat_kahler(2);
        const std::vector<ChartPoint> pts = sample_points(flat.desc, 64, 42);
        CHECK(check_lck(flat, pts, params).pass);
        CHECK(check_vaisman(flat, pts, params).pass);
        CHECK(check_gauduchon(flat, pts, params).pass);
    }

    SUBCASE("verdict bookkeeping: pass iff max <= tolerance, witness recorded") {
        const LckStructure s = make_model(deformed_desc());
        const std::vector<ChartPoint> pts = sample_points(s.desc, 32, 19);
        const CheckVerdict v = check_vaisman(s, pts, params);
        CHECK(v.pass == (v.max_residual <= v.tolerance));
        CHECK(v.witness.dim == 4);
        CHECK(v.mean_residual <= v.max_residual);
        // the witness point reproduces the max residual
        const PointGeometry geo = build_point_geometry(s, v.witness, params);
        CHECK(residual::vaisman(geo) == doctest::Approx(v.max_residual));
    }
}

TEST_CASE("holomorphy and Killing checkers") {
    const EvalParams params;

    SUBCASE("hopf: T is holomorphic and Killing") {
        const LckStructure hopf = hopf_structure(2, kA);
        const std::vector<ChartPoint> pts = sample_points(hopf.desc, 64, 42);
        CHECK(check_holomorphic_lee(hopf, pts, params).pass);
        CHECK(check_killing_lee(hopf, pts, params).pass);
        CHECK(check_killing_antilee(hopf, pts, params).pass);
    }

    SUBCASE("deformed: T holomorphic, not Killing; JT Killing for g_bar") {
        const LckStructure s = make_model(deformed_desc());
        const std::vector<ChartPoint> pts = sample_points(s.desc, 64, 42);
        CHECK(check_holomorphic_lee(s, pts, params).pass);
        const CheckVerdict k = check_killing_lee(s, pts, params);
        CHECK(!k.pass);
        CHECK(k.max_residual > 0.01);
        CHECK(check_killing_antilee(s, pts, params).pass);

        // Killing failure equals 2 max ||S|| pointwise
        for (const ChartPoint& p : sample_points(s.desc, 16, 43)) {
            const PointGeometry geo = build_point_geometry(s, p);
            CHECK(std::abs(residual::killing_lee(geo) - 2.0 * residual::vaisman(geo)) <= 1e-9);
        }
    }

    SUBCASE("the two holomorphy formulas agree within 1e-9 pointwise") {
        for (const char* name : {"flat", "hopf", "hopf-deformed"}) {
            ModelDescriptor d = deformed_desc();
            d.model = name;
            d.has_profile = (d.model == "hopf-deformed");
            const LckStructure s = make_model(d);
            for (const ChartPoint& p : sample_points(s.desc, 32, 47)) {
                const PointGeometry geo = build_point_geometry(s, p);
                CHECK(holomorphy_formulas_gap(geo) <= 1e-9);
            }
        }
    }

    SUBCASE("holomorphy of T is metric-independent across the base and deformed metrics") {
        const LckStructure base = hopf_structure(2, kA);
        const LckStructure s = make_model(deformed_desc());
        // T_bar = T, J unchanged: the residual is identical on shared points
        for (const ChartPoint& p : sample_points(s.desc, 32, 53)) {
            const PointGeometry a = build_point_geometry(base, p);
            const PointGeometry b = build_point_geometry(s, p);
            CHECK(std::abs(residual::holomorphic_lee(a) - residual::holomorphic_lee(b)) <= 1e-12);
        }
    }

    SUBCASE("generic vector-field checkers") {
        const LckStructure hopf = hopf_structure(2, kA);
        const std::vector<ChartPoint> pts = sample_points(hopf.desc, 16, 59);
        // X = T as an explicit field: T = -x/2 on the Hopf chart
        const VectorField lee_field(4, [](std::span<const Jet2> x) {
            JVec t(static_cast<int>(x.size()));
            for (int i = 0; i < t.dim; ++i) t[i] = x[static_cast<size_t>(i)] * -0.5;
            return t;
        });
        CHECK(check_holomorphic(hopf, lee_field, pts, params).pass);
        CHECK(check_killing(hopf, lee_field, pts, params).pass);

        // a rotation that is Killing but tilts the complex structure pairing:
        // X = (-y1, x1, 0, 0) is Killing for the conformal metric and holomorphic
        const VectorField rot(4, [](std::span<const Jet2> x) {
            JVec t(static_cast<int>(x.size()));
            t[0] = -x[1];
            t[1] = x[0];
            t[2] = x[2] * 0.0;
            t[3] = x[3] * 0.0;
            return t;
        });
        CHECK(check_killing(hopf, rot, pts, params).pass);

        // a shear is neither
        const VectorField shear(4, [](std::span<const Jet2> x) {
            JVec t(static_cast<int>(x.size()));
            t[0] = x[1];
            t[1] = x[1] * 0.0;
            t[2] = x[2] * 0.0;
            t[3] = x[3] * 0.0;
            return t;
        });
        CHECK(!check_killing(hopf, shear, pts, params).pass);
    }
}
