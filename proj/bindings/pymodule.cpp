#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lckv/report.hpp"

namespace py = pybind11;

namespace {

lckv::ModelDescriptor make_descriptor(const std::string& model, int n, double a, double amplitude) {
    lckv::ModelDescriptor d;
    d.model = model;
    d.n = n;
    d.a = a;
    d.amplitude = amplitude;
    if (model == "hopf-deformed") d.has_profile = true;
    return d;
}

py::list witness_list(const lckv::ChartPoint& p) {
    py::list out;
    for (int i = 0; i < p.dim; ++i) out.append(p[i]);
    return out;
}

py::dict report_to_dict(const lckv::SuiteReport& r) {
    py::dict model;
    model["model"] = r.model.model;
    model["n"] = r.model.n;
    model["a"] = r.model.a;
    model["amplitude"] = r.model.amplitude;

    py::list checks;
    for (size_t i = 0; i < r.checks.size(); ++i) {
        const lckv::CheckVerdict& v = r.checks[i];
        py::dict c;
        c["id"] = v.name;
        c["paper_anchor"] = r.anchors[i];
        c["max_residual"] = v.max_residual;
        c["mean_residual"] = v.mean_residual;
        c["tolerance"] = v.tolerance;
        c["pass"] = v.pass;
        c["witness"] = witness_list(v.witness);
        checks.append(std::move(c));
    }
    py::list skipped;
    for (const lckv::SkippedCheck& s : r.skipped) {
        py::dict e;
        e["id"] = s.id;
        e["reason"] = s.reason;
        skipped.append(std::move(e));
    }

    py::dict out;
    out["model"] = std::move(model);
    out["engine"] = std::string(lckv::engine_name(r.engine));
    out["seed"] = r.seed;
    out["samples"] = r.samples;
    out["checks"] = std::move(checks);
    out["expected_failures"] = r.expected_failure_ids;
    out["skipped"] = std::move(skipped);
    out["overall_pass"] = r.overall_pass;
    return out;
}

py::dict run_suite_py(const std::string& model, int n, double a, double amplitude, int samples,
                      unsigned long long seed, const std::string& engine) {
    const lckv::Engine e = engine == "fd" ? lckv::Engine::fd : lckv::Engine::ad;
    return report_to_dict(lckv::run_suite(make_descriptor(model, n, a, amplitude), e, samples, seed));
}

py::list integral_checks_py(const std::string& model, int n, double a, double amplitude, int grid_r,
                            int grid_ang) {
    const lckv::LckStructure s = lckv::make_model(make_descriptor(model, n, a, amplitude));
    const lckv::QuadratureGrid grid(grid_r, grid_ang, a);
    py::list out;
    for (const lckv::IntegralCheck& c : lckv::check_integral_identities(s, grid)) {
        py::dict e;
        e["id"] = c.id;
        e["value"] = c.value;
        e["reference"] = c.reference;
        e["tolerance"] = c.tolerance;
        e["pass"] = c.pass;
        out.append(std::move(e));
    }
    return out;
}

double integrate_py(const std::string& model, const std::string& quantity, int n, double a,
                    double amplitude, int grid_r, int grid_ang) {
    const lckv::LckStructure s = lckv::make_model(make_descriptor(model, n, a, amplitude));
    const lckv::QuadratureGrid grid(grid_r, grid_ang, a);
    return lckv::integrate(s, lckv::quantity_by_name(quantity), grid);
}

py::list list_checks_py() {
    py::list out;
    for (const lckv::IdentityCheck& c : lckv::check_registry()) {
        py::dict e;
        e["id"] = c.id;
        e["anchor"] = c.anchor;
        e["description"] = c.description;
        out.append(std::move(e));
    }
    return out;
}

py::list lee_form_at(const std::string& model, int n, double a, double amplitude,
                     const std::vector<double>& coords) {
    const lckv::LckStructure s = lckv::make_model(make_descriptor(model, n, a, amplitude));
    lckv::ChartPoint p;
    p.dim = static_cast<int>(coords.size());
    for (int i = 0; i < p.dim; ++i) p[i] = coords[static_cast<size_t>(i)];
    const lckv::JVec t = s.theta.eval(p);
    py::list out;
    for (int i = 0; i < p.dim; ++i) out.append(t[i].value());
    return out;
}

py::list christoffel_at(const std::string& model, int n, double a, double amplitude,
                        const std::vector<double>& coords) {
    const lckv::LckStructure s = lckv::make_model(make_descriptor(model, n, a, amplitude));
    lckv::ChartPoint p;
    p.dim = static_cast<int>(coords.size());
    for (int i = 0; i < p.dim; ++i) p[i] = coords[static_cast<size_t>(i)];
    const lckv::PointGeometry geo = lckv::build_point_geometry(s, p);
    py::list out;
    for (int k = 0; k < p.dim; ++k) {
        py::list rows;
        for (int i = 0; i < p.dim; ++i) {
            py::list row;
            for (int j = 0; j < p.dim; ++j) row.append(geo.gamma_v.at(k, i, j));
            rows.append(std::move(row));
        }
        out.append(std::move(rows));
    }
    return out;
}

double trace_omega_omega(const std::string& model, int n, double a, double amplitude,
                         const std::vector<double>& coords) {
    const lckv::LckStructure s = lckv::make_model(make_descriptor(model, n, a, amplitude));
    lckv::ChartPoint p;
    p.dim = static_cast<int>(coords.size());
    for (int i = 0; i < p.dim; ++i) p[i] = coords[static_cast<size_t>(i)];
    const lckv::PointGeometry geo = lckv::build_point_geometry(s, p);
    return lckv::trace_omega_bilinear(geo.omega_full, geo.g_v, geo.ginv_v, geo.J_v).contraction;
}

} // namespace

PYBIND11_MODULE(_lckv, m) {
    m.doc() = "Numerical verification workbench for locally conformally Kahler structures";

    const double default_a = 535.4916555247646;  // e^(2 pi)

    m.def("run_suite", &run_suite_py, py::arg("model"), py::arg("n") = 2, py::arg("a") = default_a,
          py::arg("amplitude") = 0.5, py::arg("samples") = 256, py::arg("seed") = 42,
          py::arg("engine") = "ad",
          "Run the identity suite; returns the report as a dict.");
    m.def("integral_checks", &integral_checks_py, py::arg("model"), py::arg("n") = 2,
          py::arg("a") = default_a, py::arg("amplitude") = 0.5, py::arg("grid_r") = 64,
          py::arg("grid_ang") = 16, "Fundamental-domain integral identities (n = 2).");
    m.def("integrate", &integrate_py, py::arg("model"), py::arg("quantity"), py::arg("n") = 2,
          py::arg("a") = default_a, py::arg("amplitude") = 0.5, py::arg("grid_r") = 64,
          py::arg("grid_ang") = 16, "Integral of a named quantity over the fundamental domain.");
    m.def("list_checks", &list_checks_py, "Registry ids with anchors.");
    m.def("lee_form_at", &lee_form_at, py::arg("model"), py::arg("n"), py::arg("a"),
          py::arg("amplitude"), py::arg("coords"), "Lee form components at a chart point.");
    m.def("christoffel_at", &christoffel_at, py::arg("model"), py::arg("n"), py::arg("a"),
          py::arg("amplitude"), py::arg("coords"),
          "Christoffel symbols Gamma[k][i][j] at a chart point.");
    m.def("trace_omega_omega", &trace_omega_omega, py::arg("model"), py::arg("n"), py::arg("a"),
          py::arg("amplitude"), py::arg("coords"),
          "Trace of the fundamental form against itself (2n on every model).");

    py::register_exception<lckv::DomainViolation>(m, "DomainViolation");
    py::register_exception<lckv::NumericalDegeneracy>(m, "NumericalDegeneracy");
    py::register_exception<lckv::StructuralError>(m, "StructuralError");
    py::register_exception<lckv::UnsupportedError>(m, "UnsupportedError");
}
