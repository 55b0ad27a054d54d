#include "lckv/checks.hpp"

#include <algorithm>

namespace lckv {

namespace {

bool any_model(const ModelDescriptor&) { return true; }
bool has_profile(const ModelDescriptor& d) { return d.has_profile; }
bool unit_lee_vaisman(const ModelDescriptor& d) { return d.expect_vaisman && d.unit_lee; }
bool lee_nonzero(const ModelDescriptor& d) { return d.lee_nonzero; }

std::vector<IdentityCheck> build_registry() {
    std::vector<IdentityCheck> r;

    auto add = [&r](std::string id, std::string description, std::string anchor, double tol_ad,
                    double tol_fd, std::function<bool(const ModelDescriptor&)> applicable,
                    std::string skip_reason, std::function<double(const PointGeometry&)> res) {
        IdentityCheck c;
        c.id = std::move(id);
        c.description = std::move(description);
        c.anchor = std::move(anchor);
        c.tol_ad = tol_ad;
        c.tol_fd = tol_fd;
        c.applicable = std::move(applicable);
        c.skip_reason = std::move(skip_reason);
        c.residual = std::move(res);
        r.push_back(std::move(c));
    };

    // first-derivative identities: 1e-9 (ad), x100 under finite differences
    add("id_lck", "lcK structure equation with closed Lee form",
        "d(omega) = theta ^ omega, d(theta) = 0", 1e-9, 1e-7, any_model, "", residual::lck);
    add("id_naj", "covariant derivative of J on an lcK chart",
        "nabla_X J = 1/2 (X ^ J theta + J X ^ theta)", 1e-9, 1e-7, any_model, "", residual::naj);
    add("id_cgnt", "frame contractions of nabla J",
        "sum_i (nabla_{e_i} J)(e_i) = (n-1) J T; sum_i (nabla_{J e_i} J)(e_i) = -(n-1) T", 1e-9,
        1e-7, any_model, "", residual::cgnt);
    add("id_doi", "Lie derivative of g along the Lee field", "L_T g = 2 S", 1e-9, 1e-7, any_model,
        "", residual::doi);
    add("id_e3", "Lie derivative of omega along the Lee field", "L_T omega = 2 omega(F., .)", 1e-9,
        1e-7, any_model, "", residual::e3);
    add("id_e4", "exterior derivative of J theta",
        "d(J theta) = 2 omega(F., .) - |theta|^2 omega + theta ^ J theta", 1e-9, 1e-7, any_model,
        "", residual::e4);
    add("id_lie_jtheta", "Lie derivative of J theta along the Lee field",
        "L_T (J theta) = J d|theta|^2", 1e-9, 1e-7, any_model, "", residual::lie_jtheta);
    // second-derivative identities: 1e-7 (ad), x100 under finite differences
    add("id_djd", "second-order identity for d J d|theta|^2",
        "d J d|theta|^2 = 4 omega(F^2.,.) + 2 omega(L_T F.,.) - T(|theta|^2) omega "
        "- 2|theta|^2 omega(F.,.) + d|theta|^2 ^ J theta + theta ^ J d|theta|^2",
        1e-7, 1e-5, any_model, "", residual::djd);
    add("id_tr_i", "omega-trace of omega(A., .)", "Tr_omega(omega(A., .)) = Tr A, A in {F, F^2, J}",
        1e-9, 1e-7, any_model, "", residual::tr_i);
    add("id_tr_ii", "omega-trace of a wedge of 1-forms",
        "Tr_omega(alpha ^ beta) = 2 g(J alpha, beta)", 1e-9, 1e-7, any_model, "", residual::tr_ii);
    add("id_tr_iii", "omega-trace of d J d h",
        "Tr_omega(d J d h) = -2 Delta h + 2(1-n) T(h), h in {|theta|^2, ln r}", 1e-7, 1e-5,
        any_model, "", residual::tr_iii);
    add("id_cinci", "scalar consequence of the trace identities",
        "Delta|theta|^2 + T(|theta|^2) + |theta|^2 delta(theta) + 2|nabla theta|^2 "
        "- T(delta theta) = 0",
        1e-7, 1e-5, any_model, "", residual::cinci);
    add("id_trF", "traces of F against delta(theta) and |nabla theta|^2",
        "Tr F = -delta(theta), Tr F^2 = |nabla theta|^2", 1e-9, 1e-7, any_model, "",
        residual::tr_f);
    add("id_omegavais", "potential identity on parallel-Lee models",
        "omega = theta ^ J theta - d J theta", 1e-9, 1e-7, unit_lee_vaisman,
        "needs a parallel unit-norm Lee form", residual::potential);
    add("id_deform_lck", "lcK equation of the deformed structure",
        "d(omega_bar) = (1+f) theta ^ omega_bar", 1e-9, 1e-7, has_profile,
        "needs the deformation profile", residual::deform_lck);
    add("id_norm_T", "norm of the deformed Lee field", "g_bar(T_bar, T_bar) = 1 + f", 1e-9, 1e-9,
        has_profile, "needs the deformation profile", residual::norm_lee);
    add("id_holo", "holomorphy of the Lee field", "L_T J = 0 (equivalently [F, J] = 0)", 1e-9,
        1e-7, any_model, "", residual::holomorphic_lee);
    add("id_killing_T", "Killing property of the Lee field", "L_T g = 0", 1e-9, 1e-7, any_model,
        "", residual::killing_lee);
    add("id_killing_JT", "Killing property of the anti-Lee field", "L_{JT} g = 0", 1e-9, 1e-7,
        any_model, "", residual::killing_antilee);
    add("id_vaisman", "parallel Lee form", "nabla theta = 0", 1e-9, 1e-7, any_model, "",
        residual::vaisman);
    add("id_gauduchon", "co-closed Lee form", "delta(theta) = 0", 1e-9, 1e-7, any_model, "",
        residual::gauduchon);
    add("id_potential", "existence of a potential", "omega = theta ^ J theta - d J theta", 1e-9,
        1e-7, lee_nonzero, "needs a non-vanishing Lee form", residual::potential);
    return r;
}

} // namespace

const std::vector<IdentityCheck>& check_registry() {
    static const std::vector<IdentityCheck> registry = build_registry();
    return registry;
}

std::vector<std::string> expected_failures(const ModelDescriptor& desc) {
    if (desc.model == "hopf-deformed")
        return {"id_vaisman", "id_gauduchon", "id_potential", "id_killing_T"};
    return {};
}

double check_tolerance(const IdentityCheck& check, Engine engine,
                       const std::vector<std::pair<std::string, double>>& overrides) {
    for (const auto& [id, tol] : overrides)
        if (id == check.id) return tol;
    return check.tolerance(engine);
}

CheckVerdict run_check(const IdentityCheck& check, const LckStructure& s,
                       std::span<const ChartPoint> samples, const EvalParams& params) {
    if (!check.applicable(s.desc))
        throw StructuralError("check " + check.id + " is not applicable to model '" +
                              s.desc.model + "': " + check.skip_reason);
    std::vector<double> r;
    r.reserve(samples.size());
    for (const ChartPoint& p : samples) {
        const PointGeometry geo = build_point_geometry(s, p, params);
        r.push_back(check.residual(geo));
    }
    return reduce_residuals(check.id, check.tolerance(params.engine), samples, r);
}

SuiteReport run_suite(const ModelDescriptor& desc, Engine engine, int samples,
                      unsigned long long seed,
                      const std::vector<std::pair<std::string, double>>& tol_overrides,
                      double fd_step) {
    const LckStructure s = make_model(desc);
    const std::vector<ChartPoint> pts = sample_points(s.desc, samples, seed);
    const EvalParams params{engine, fd_step};

    SuiteReport report;
    report.model = s.desc;
    report.engine = engine;
    report.seed = seed;
    report.samples = samples;
    report.fd_step = fd_step;
    report.expected_failure_ids = expected_failures(s.desc);

    const std::vector<IdentityCheck>& registry = check_registry();
    std::vector<const IdentityCheck*> active;
    for (const IdentityCheck& c : registry) {
        if (c.applicable(s.desc)) {
            active.push_back(&c);
        } else {
            report.skipped.push_back({c.id, c.skip_reason});
        }
    }

    std::vector<std::vector<double>> residuals(active.size());
    for (auto& v : residuals) v.reserve(pts.size());

    // one geometry per point, shared across all checks
    for (const ChartPoint& p : pts) {
        const PointGeometry geo = build_point_geometry(s, p, params);
        for (size_t c = 0; c < active.size(); ++c) residuals[c].push_back(active[c]->residual(geo));
    }

    bool ok = true;
    for (size_t c = 0; c < active.size(); ++c) {
        const IdentityCheck& check = *active[c];
        CheckVerdict v = reduce_residuals(check.id, check_tolerance(check, engine, tol_overrides),
                                          pts, residuals[c]);
        const bool expected_fail =
            std::find(report.expected_failure_ids.begin(), report.expected_failure_ids.end(),
                      check.id) != report.expected_failure_ids.end();
        if (expected_fail) {
            // the counterexample property: the check must fail decisively
            if (v.pass || v.max_residual <= kExpectedFailureFloor) ok = false;
        } else if (!v.pass) {
            ok = false;
        }
        report.checks.push_back(std::move(v));
        report.anchors.push_back(check.anchor);
    }
    report.overall_pass = ok;
    return report;
}

} // namespace lckv
