#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "lckv/report.hpp"

namespace {

struct RunConfig {
    std::string model = "hopf";
    int n = 2;
    double a = 535.4916555247646;  // e^(2 pi)
    double amplitude = 0.5;
    int samples = 256;
    unsigned long long seed = 42;
    std::string engine = "ad";
    int grid_r = 64;
    int grid_ang = 16;
    std::string format = "text";
    std::string out;
    std::string tol_overrides_path;
    std::string quantity;
};

lckv::ModelDescriptor descriptor_of(const RunConfig& cfg) {
    lckv::ModelDescriptor d;
    d.model = cfg.model;
    d.n = cfg.n;
    d.a = cfg.a;
    d.amplitude = cfg.amplitude;
    if (cfg.model == "hopf-deformed") d.has_profile = true;
    return d;
}

std::vector<std::pair<std::string, std::string>> load_key_values(const std::string& path) {
    std::vector<std::pair<std::string, std::string>> out;
    std::ifstream in(path);
    if (!in) throw lckv::StructuralError("cannot open config file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            const size_t b = s.find_first_not_of(" \t\r");
            const size_t e = s.find_last_not_of(" \t\r");
            s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(val);
        if (!key.empty() && !val.empty()) out.emplace_back(key, val);
    }
    return out;
}

/// Flat key=value config mirroring RunConfig; values apply only where the
/// command line did not set the flag.
void apply_config_file(const CLI::App* sub, const std::string& path, RunConfig& cfg) {
    if (path.empty()) return;
    auto flag_given = [sub](const std::string& name) {
        const CLI::Option* opt = sub->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    for (const auto& [key, val] : load_key_values(path)) {
        if (key == "model" && !flag_given("--model")) cfg.model = val;
        else if (key == "n" && !flag_given("--n")) cfg.n = std::stoi(val);
        else if (key == "a" && !flag_given("--a")) cfg.a = std::stod(val);
        else if (key == "amplitude" && !flag_given("--amplitude")) cfg.amplitude = std::stod(val);
        else if (key == "samples" && !flag_given("--samples")) cfg.samples = std::stoi(val);
        else if (key == "seed" && !flag_given("--seed")) cfg.seed = std::stoull(val);
        else if (key == "engine" && !flag_given("--engine")) cfg.engine = val;
        else if (key == "grid-r" && !flag_given("--grid-r")) cfg.grid_r = std::stoi(val);
        else if (key == "grid-ang" && !flag_given("--grid-ang")) cfg.grid_ang = std::stoi(val);
        else if (key == "format" && !flag_given("--format")) cfg.format = val;
        else if (key == "out" && !flag_given("--out")) cfg.out = val;
        else if (key == "tol-overrides" && !flag_given("--tol-overrides")) cfg.tol_overrides_path = val;
        else if (key == "quantity" && !flag_given("--quantity")) cfg.quantity = val;
    }
}

std::vector<std::pair<std::string, double>> load_tol_overrides(const std::string& path) {
    std::vector<std::pair<std::string, double>> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) throw lckv::StructuralError("cannot open tolerance override file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            const size_t b = s.find_first_not_of(" \t\r");
            const size_t e = s.find_last_not_of(" \t\r");
            s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(val);
        if (key.empty() || val.empty()) continue;
        out.emplace_back(key, std::stod(val));
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw lckv::StructuralError("cannot open output file '" + out_path + "'");
    os << text;
}

int cmd_verify(const RunConfig& cfg) {
    const lckv::Engine engine =
        cfg.engine == "fd" ? lckv::Engine::fd : lckv::Engine::ad;
    if (cfg.engine != "ad" && cfg.engine != "fd")
        throw lckv::StructuralError("unknown engine '" + cfg.engine + "' (expected ad | fd)");
    const auto overrides = load_tol_overrides(cfg.tol_overrides_path);
    const lckv::SuiteReport report =
        lckv::run_suite(descriptor_of(cfg), engine, cfg.samples, cfg.seed, overrides);
    emit(lckv::render_suite_report(report, lckv::report_format_from_string(cfg.format)), cfg.out);
    return report.overall_pass ? 0 : 1;
}

int cmd_integrate(const RunConfig& cfg) {
    const lckv::LckStructure s = lckv::make_model(descriptor_of(cfg));
    const lckv::QuadratureGrid grid(cfg.grid_r, cfg.grid_ang, cfg.a);
    std::vector<lckv::IntegralCheck> checks;
    if (cfg.quantity.empty()) {
        checks = lckv::check_integral_identities(s, grid);
    } else {
        const lckv::ScalarQuantity q = lckv::quantity_by_name(cfg.quantity);
        const double v = lckv::integrate(s, q, grid);
        const double vol_ref = 32.0 * 9.869604401089358 * std::log(cfg.a);  // 32 pi^2 ln a
        if (cfg.quantity == "volume") {
            checks.push_back({q.name, v, vol_ref, 1e-6 * vol_ref, std::abs(v - vol_ref) <= 1e-6 * vol_ref});
        } else {
            const double tol = 1e-3 * vol_ref;
            checks.push_back({q.name, v, 0.0, tol, std::abs(v) <= tol});
        }
    }
    bool all = true;
    for (const lckv::IntegralCheck& c : checks) all = all && c.pass;
    emit(lckv::render_integral_report(descriptor_of(cfg), cfg.grid_r, cfg.grid_ang, checks,
                                      lckv::report_format_from_string(cfg.format)),
         cfg.out);
    return all ? 0 : 1;
}

int cmd_list_checks() {
    for (const lckv::IdentityCheck& c : lckv::check_registry())
        std::cout << c.id << "  " << c.anchor << "\n";
    return 0;
}

/// Convention anchors: wedge normalization, Laplacian sign, J on 1-forms,
/// engine agreement. Fast and self-contained.
int cmd_selftest() {
    using namespace lckv;
    int failures = 0;
    auto expect = [&failures](bool ok, const char* what) {
        std::cout << (ok ? "  ok    " : "  FAIL  ") << what << "\n";
        if (!ok) ++failures;
    };

    // wedge normalization: (dx1 ^ dx2)(d1, d2) = 1
    {
        DVec a(4), b(4);
        a[0] = 1.0;
        b[1] = 1.0;
        const DForm2 w = wedge11(a, b);
        expect(w.value(0, 1) == 1.0 && w.value(1, 0) == -1.0, "wedge normalization (dx1^dx2)(d1,d2) = 1");
    }

    // Laplacian sign: Delta(x1^2) = -2 on flat space
    {
        const LckStructure flat = flat_kahler(2);
        const ChartPoint p{0.3, 0.7, -0.4, 0.9};
        const PointGeometry geo = build_point_geometry(flat, p);
        Jet2 x0 = Jet2::variable(4, 0, p[0]);
        const Jet2 h = x0 * x0;
        const double lap = laplacian_value(h, geo.ginv_v, geo.gamma_v);
        expect(std::abs(lap + 2.0) < 1e-12, "Laplacian sign Delta(x1^2) = -2");
    }

    // J on 1-forms: J dx1 = dy1 on the flat chart
    {
        const DMat J = standard_complex_structure(4);
        DVec dx1(4);
        dx1[0] = 1.0;
        const DVec jdx1 = j_oneform(J, dx1);
        expect(std::abs(jdx1[1] - 1.0) < 1e-15 && std::abs(jdx1[0]) < 1e-15, "J dx1 = dy1");
    }

    // engine agreement on a curved metric component
    {
        const LckStructure hopf = hopf_structure(2, 2.0);
        const ChartPoint p{1.1, -0.4, 0.3, 0.2};
        const JMat ad = hopf.g.eval(p, {Engine::ad, 1e-4});
        const JMat fd = hopf.g.eval(p, {Engine::fd, 1e-4});
        double worst = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                worst = std::max(worst, std::abs(ad.at(i, j).value() - fd.at(i, j).value()));
                for (int k = 0; k < 4; ++k)
                    worst = std::max(worst, std::abs(ad.at(i, j).grad(k) - fd.at(i, j).grad(k)));
            }
        expect(worst < 1e-8, "ad and fd jets agree on the conformal metric");
    }

    std::cout << (failures == 0 ? "selftest: pass" : "selftest: FAIL") << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification workbench for locally conformally Kahler structures"};

    RunConfig cfg;
    std::string config_path;

    auto add_model_flags = [&cfg, &config_path](CLI::App* c) {
        c->add_option("--config", config_path, "flat key=value config file; flags override the file");
        c->add_option("--model", cfg.model, "flat | hopf | hopf-deformed")
            ->check(CLI::IsMember({"flat", "hopf", "hopf-deformed"}));
        c->add_option("--n", cfg.n, "complex dimension");
        c->add_option("--a", cfg.a, "dilation factor (fundamental domain 1 <= r <= a)");
        c->add_option("--amplitude", cfg.amplitude, "deformation profile amplitude");
        c->add_option("--format", cfg.format, "json | csv | text");
        c->add_option("--out", cfg.out, "output path (default: stdout)");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the identity suite on a model");
    add_model_flags(verify);
    verify->add_option("--samples", cfg.samples, "sample count");
    verify->add_option("--seed", cfg.seed, "sampler seed");
    verify->add_option("--engine", cfg.engine, "ad | fd")->check(CLI::IsMember({"ad", "fd"}));
    verify->add_option("--tol-overrides", cfg.tol_overrides_path, "key=value tolerance overrides");

    CLI::App* integrate = app.add_subcommand("integrate", "fundamental-domain integrals (n = 2)");
    add_model_flags(integrate);
    integrate->add_option("--grid-r", cfg.grid_r, "radial nodes (ln r direction)");
    integrate->add_option("--grid-ang", cfg.grid_ang, "angular nodes per sphere direction");
    integrate->add_option("--quantity", cfg.quantity,
                          "single integrand (default: all integral identity checks)");

    CLI::App* list = app.add_subcommand("list-checks", "list registry ids with their anchors");
    CLI::App* selftest = app.add_subcommand("selftest", "convention anchors");
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) {
            apply_config_file(verify, config_path, cfg);
            return cmd_verify(cfg);
        }
        if (integrate->parsed()) {
            apply_config_file(integrate, config_path, cfg);
            return cmd_integrate(cfg);
        }
        if (list->parsed()) return cmd_list_checks();
        if (selftest->parsed()) return cmd_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
