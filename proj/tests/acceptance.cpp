// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: lckv_acceptance <path-to-cli>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "lckv/quadrature.hpp"
#include "lckv/report.hpp"

using namespace lckv;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const double kE2Pi = std::exp(2 * kPi);

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) ++g_failures;
}

ModelDescriptor desc_of(const std::string& model, int n, double a, double amplitude = 0.5) {
    ModelDescriptor d;
    d.model = model;
    d.n = n;
    d.a = a;
    d.amplitude = amplitude;
    if (model == "hopf-deformed") d.has_profile = true;
    return d;
}

const CheckVerdict* find_check(const SuiteReport& r, const std::string& id) {
    for (const CheckVerdict& v : r.checks)
        if (v.name == id) return &v;
    return nullptr;
}

// criterion 1: the pointwise identity block on four Hopf configurations,
// 256 seeded samples, max residual <= 1e-7, total runtime <= 60 s
void criterion_1() {
    const std::vector<std::string> block = {"id_lck",  "id_naj",    "id_cgnt", "id_doi",
                                            "id_e3",   "id_e4",     "id_lie_jtheta", "id_djd",
                                            "id_tr_i", "id_tr_ii",  "id_tr_iii", "id_cinci",
                                            "id_trF"};
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    double worst = 0.0;
    for (int n : {2, 3}) {
        for (double a : {2.0, kE2Pi}) {
            const SuiteReport r = run_suite(desc_of("hopf", n, a), Engine::ad, 256, 42);
            for (const std::string& id : block) {
                const CheckVerdict* v = find_check(r, id);
                if (v == nullptr) {
                    ok = false;
                    continue;
                }
                worst = std::max(worst, v->max_residual);
                ok = ok && v->max_residual <= 1e-7;
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs <= 60.0;
    std::ostringstream msg;
    msg << "identity block on hopf (n=2,3; a=2,e^2pi), 256 samples: worst residual " << worst
        << " (<= 1e-7), runtime " << secs << " s (<= 60)";
    report(1, ok, msg.str());
}

// criterion 2: the counterexample contract on hopf-deformed (n=2, amplitude 1/2)
void criterion_2() {
    const SuiteReport r = run_suite(desc_of("hopf-deformed", 2, kE2Pi), Engine::ad, 256, 42);
    bool ok = true;
    std::ostringstream msg;

    for (const char* id : {"id_lck", "id_deform_lck", "id_holo", "id_killing_JT", "id_doi",
                           "id_e3", "id_e4", "id_lie_jtheta", "id_djd", "id_cinci"}) {
        const CheckVerdict* v = find_check(r, id);
        const bool good = v != nullptr && v->pass && v->max_residual <= 1e-6;
        if (!good) msg << " " << id << "!";
        ok = ok && good;
    }
    for (const char* id : {"id_vaisman", "id_gauduchon", "id_potential", "id_killing_T"}) {
        const CheckVerdict* v = find_check(r, id);
        const bool good = v != nullptr && !v->pass && v->max_residual > 0.01;
        if (!good) msg << " " << id << " did not fail decisively;";
        ok = ok && good;
    }
    const CheckVerdict* nt = find_check(r, "id_norm_T");
    ok = ok && nt != nullptr && nt->max_residual <= 1e-9;

    // spot value: g_bar(T_bar, T_bar) = 3/2 at r = a^(1/4)
    const LckStructure s = make_model(desc_of("hopf-deformed", 2, kE2Pi));
    const double rq = std::pow(kE2Pi, 0.25);
    const ChartPoint probe = ChartPoint{0.5, 0.5, 0.5, 0.5}.scaled(rq);
    const PointGeometry geo = build_point_geometry(s, probe);
    const double spot = geo.norm2theta.value();
    ok = ok && std::abs(spot - 1.5) <= 1e-9;

    std::ostringstream out;
    out << "deformed contract: identities <= 1e-6, {vaisman, gauduchon, potential, killing_T} "
           "fail > 0.01, g_bar(T,T) at a^(1/4) = "
        << spot << " (3/2 +/- 1e-9)" << msg.str();
    report(2, ok, out.str());
}

// criterion 3: no zoo model satisfies the hypotheses while failing the
// conclusion; the deformed model violates both hypotheses
void criterion_3() {
    const std::vector<ModelDescriptor> zoo = {
        desc_of("flat", 2, 0.0),          desc_of("hopf", 2, 2.0), desc_of("hopf", 2, kE2Pi),
        desc_of("hopf", 3, 2.0),          desc_of("hopf", 3, kE2Pi),
        desc_of("hopf-deformed", 2, kE2Pi),
    };
    bool ok = true;
    double spread = 0.0, div = 0.0;
    for (const ModelDescriptor& d : zoo) {
        const LckStructure s = make_model(d);
        const std::vector<ChartPoint> pts = sample_points(s.desc, 256, 42);
        const bool holo = check_holomorphic_lee(s, pts).pass;
        const bool gauduchon = check_gauduchon(s, pts).pass;
        const bool vaisman = check_vaisman(s, pts).pass;
        double lo = 1e300, hi = -1e300, dv = 0.0;
        for (const ChartPoint& p : pts) {
            const PointGeometry geo = build_point_geometry(s, p);
            const double norm = std::sqrt(std::max(0.0, geo.norm2theta.value()));
            lo = std::min(lo, norm);
            hi = std::max(hi, norm);
            dv = std::max(dv, residual::gauduchon(geo));
        }
        const bool norm_const = (hi - lo) <= 1e-8;
        if (holo && (norm_const || gauduchon)) ok = ok && vaisman;
        if (d.model == "hopf-deformed") {
            spread = hi - lo;
            div = dv;
            ok = ok && holo && !norm_const && !gauduchon && !vaisman;
            ok = ok && spread >= 0.4 && div > 0.01;
        }
    }
    std::ostringstream msg;
    msg << "hypotheses => conclusion over the zoo; deformed violates both: |theta| spread "
        << spread << " (>= 0.4), max |delta theta| " << div << " (> 0.01)";
    report(3, ok, msg.str());
}

// criterion 4: closed-form anchors
void criterion_4(double& vol_64_err) {
    bool ok = true;
    std::ostringstream msg;

    const LckStructure hopf = hopf_structure(2, kE2Pi);
    const ChartPoint p0{1.0, 0.0, 0.0, 0.0};
    const PointGeometry geo = build_point_geometry(hopf, p0);

    // Christoffel anchors at p0
    ok = ok && std::abs(geo.gamma_v.at(0, 0, 0) + 1.0) <= 1e-12;
    ok = ok && std::abs(geo.gamma_v.at(0, 1, 1) - 1.0) <= 1e-12;
    ok = ok && std::abs(geo.gamma_v.at(1, 0, 1) + 1.0) <= 1e-12;

    // Delta ln r = 0 +/- 1e-9
    const double lap = laplacian_value(geo.log_r, geo.ginv_v, geo.gamma_v);
    ok = ok && std::abs(lap) <= 1e-9;

    // Tr_omega(d J d ln r) = 1 +/- 1e-7 (n = 2)
    JVec jdh(4);
    for (int i = 0; i < 4; ++i) {
        Jet2 s = partial(geo.log_r, 0) * geo.J.at(0, i);
        for (int k = 1; k < 4; ++k) s += partial(geo.log_r, k) * geo.J.at(k, i);
        jdh[i] = -s;
    }
    DMat djdh(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) djdh.at(i, j) = jdh[j].grad(i) - jdh[i].grad(j);
    const double tr = trace_omega_bilinear(djdh, geo.g_v, geo.ginv_v, geo.J_v).contraction;
    ok = ok && std::abs(tr - 1.0) <= 1e-7;

    // Tr_omega omega = 2n to 1e-12 (n = 2 and 3)
    for (int n : {2, 3}) {
        const LckStructure h = hopf_structure(n, 2.0);
        const std::vector<ChartPoint> pts = sample_points(h.desc, 8, 3);
        for (const ChartPoint& p : pts) {
            const PointGeometry g2 = build_point_geometry(h, p);
            const double t = trace_omega_bilinear(g2.omega_full, g2.g_v, g2.ginv_v, g2.J_v).contraction;
            ok = ok && std::abs(t - 2.0 * n) <= 1e-12;
        }
    }

    // volume anchor at (64, 16^3) with observed order >= 2 convergence
    const double ref = 32.0 * kPi * kPi * std::log(kE2Pi);
    double prev_err = -1.0;
    bool conv_ok = true;
    double err64 = 0.0;
    for (int k : {16, 32, 64}) {
        const QuadratureGrid grid(k, k / 4, kE2Pi);
        const double vol = integrate(hopf, quantity_by_name("volume"), grid);
        const double err = std::abs(vol - ref);
        if (prev_err >= 0.0) {
            // quadratic decay or the roundoff floor
            conv_ok = conv_ok && (err <= prev_err / 4.0 || err <= 1e-10 * ref);
        }
        prev_err = err;
        err64 = err;
    }
    ok = ok && conv_ok && err64 <= 1e-6 * ref;
    vol_64_err = err64 / ref;

    msg << "anchors: Gamma(-1,+1,-1), Delta ln r = " << lap << ", Tr_omega(dJd ln r) = " << tr
        << ", Tr_omega(omega) = 2n, volume rel. err " << err64 / ref
        << " at (64,16^3) with order >= 2 (or roundoff floor)";
    report(4, ok, msg.str());
}

// criterion 5: global integral checks on the deformed model, halving under
// grid doubling
void criterion_5() {
    const LckStructure s = make_model(desc_of("hopf-deformed", 2, kE2Pi));
    const double vol_ref = 32.0 * kPi * kPi * std::log(kE2Pi);
    const double floor = 1e-9 * vol_ref;

    const QuadratureGrid base(64, 16, kE2Pi);
    const QuadratureGrid fine(128, 32, kE2Pi);
    const std::vector<ScalarQuantity> qs = {quantity_by_name("div-lee"),
                                            quantity_by_name("ibp-defect")};
    const std::vector<double> at_base = integrate_many(s, qs, base);
    const std::vector<double> at_fine = integrate_many(s, qs, fine);

    bool ok = true;
    std::ostringstream msg;
    msg << "deformed integrals:";
    const char* names[2] = {"div-lee", "ibp-defect"};
    for (int i = 0; i < 2; ++i) {
        const double e1 = std::abs(at_base[static_cast<size_t>(i)]);
        const double e2 = std::abs(at_fine[static_cast<size_t>(i)]);
        ok = ok && e1 <= 1e-3 * vol_ref;
        ok = ok && (e2 <= std::max(e1 / 2.0, floor));
        msg << " |" << names[i] << "| = " << e1 << " -> " << e2;
    }
    msg << " (<= 1e-3 vol, halving or roundoff floor under doubling)";
    report(5, ok, msg.str());
}

// criterion 6: engine cross-validation
void criterion_6() {
    const std::vector<ModelDescriptor> zoo = {
        desc_of("flat", 2, 0.0),
        desc_of("hopf", 2, 2.0),
        desc_of("hopf", 3, 2.0),
        desc_of("hopf-deformed", 2, kE2Pi),
    };
    bool ok = true;
    double worst_gap = 0.0;
    for (const ModelDescriptor& d : zoo) {
        const SuiteReport ad = run_suite(d, Engine::ad, 64, 42);
        const SuiteReport fd = run_suite(d, Engine::fd, 64, 42);
        ok = ok && ad.checks.size() == fd.checks.size();
        for (size_t i = 0; i < ad.checks.size() && i < fd.checks.size(); ++i) {
            ok = ok && ad.checks[i].name == fd.checks[i].name;
            ok = ok && ad.checks[i].pass == fd.checks[i].pass;
            // first-order checks: residual agreement within 1e-4 absolute
            if (ad.checks[i].tolerance <= 1e-8) {
                const double gap = std::abs(ad.checks[i].max_residual - fd.checks[i].max_residual);
                worst_gap = std::max(worst_gap, gap);
                ok = ok && gap <= 1e-4;
            }
        }
    }
    std::ostringstream msg;
    msg << "ad/fd verdicts identical on every (model, check); worst first-order residual gap "
        << worst_gap << " (<= 1e-4)";
    report(6, ok, msg.str());
}

// criterion 7: byte-identical reports for identical configs
void criterion_7(const std::string& cli) {
    auto run_to = [&cli](const std::string& path) {
        const std::string cmd = cli +
                                " verify --model hopf-deformed --n 2 --samples 128 --seed 42 "
                                "--format json --out " +
                                path;
        return std::system(cmd.c_str());
    };
    const int rc1 = run_to("acceptance_run_1.json");
    const int rc2 = run_to("acceptance_run_2.json");

    auto slurp = [](const char* path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = slurp("acceptance_run_1.json");
    const std::string b = slurp("acceptance_run_2.json");
    std::remove("acceptance_run_1.json");
    std::remove("acceptance_run_2.json");

    const bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    std::ostringstream msg;
    msg << "two identical CLI runs produce byte-identical JSON (" << a.size() << " bytes)";
    report(7, ok, msg.str());
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "./lckv";
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        double vol_err = 0.0;
        criterion_4(vol_err);
        criterion_5();
        criterion_6();
        criterion_7(cli);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance aborted: %s\n", e.what());
        return 64;
    }
    std::printf("%s\n", g_failures == 0 ? "acceptance: all criteria pass"
                                        : "acceptance: FAILURES present");
    return g_failures;
}
