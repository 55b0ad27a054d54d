#include "lckv/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace lckv {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json witness_json(const ChartPoint& p) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < p.dim; ++i) arr.push_back(p[i]);
    return arr;
}

ordered_json model_json(const ModelDescriptor& d, int samples, unsigned long long seed) {
    ordered_json m;
    m["model"] = d.model;
    m["n"] = d.n;
    m["a"] = d.a;
    m["amplitude"] = d.amplitude;
    m["samples"] = samples;
    m["seed"] = seed;
    return m;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string fmt_double(double v) {
    // shortest round-trip representation, same as the JSON writer
    ordered_json j = v;
    return j.dump();
}

} // namespace

ReportFormat report_format_from_string(const std::string& s) {
    if (s == "json") return ReportFormat::json;
    if (s == "csv") return ReportFormat::csv;
    if (s == "text") return ReportFormat::text;
    throw StructuralError("unknown report format '" + s + "' (expected json | csv | text)");
}

std::string render_suite_report(const SuiteReport& report, ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json j;
        j["model"] = model_json(report.model, report.samples, report.seed);
        j["engine"] = engine_name(report.engine);
        j["seed"] = report.seed;
        j["samples"] = report.samples;
        ordered_json checks = ordered_json::array();
        for (size_t i = 0; i < report.checks.size(); ++i) {
            const CheckVerdict& v = report.checks[i];
            ordered_json c;
            c["id"] = v.name;
            c["paper_anchor"] = report.anchors[i];
            c["max_residual"] = v.max_residual;
            c["mean_residual"] = v.mean_residual;
            c["tolerance"] = v.tolerance;
            c["pass"] = v.pass;
            c["witness"] = witness_json(v.witness);
            checks.push_back(std::move(c));
        }
        j["checks"] = std::move(checks);
        j["expected_failures"] = report.expected_failure_ids;
        ordered_json skipped = ordered_json::array();
        for (const SkippedCheck& s : report.skipped) {
            ordered_json e;
            e["id"] = s.id;
            e["reason"] = s.reason;
            skipped.push_back(std::move(e));
        }
        j["skipped"] = std::move(skipped);
        j["overall_pass"] = report.overall_pass;
        return j.dump(2) + "\n";
    }

    if (format == ReportFormat::csv) {
        std::ostringstream os;
        os << "model,n,a,amplitude,engine,seed,samples,id,paper_anchor,max_residual,mean_residual,"
              "tolerance,pass,witness\n";
        for (size_t i = 0; i < report.checks.size(); ++i) {
            const CheckVerdict& v = report.checks[i];
            std::ostringstream w;
            for (int k = 0; k < v.witness.dim; ++k) w << (k ? " " : "") << fmt_double(v.witness[k]);
            os << report.model.model << ',' << report.model.n << ',' << fmt_double(report.model.a)
               << ',' << fmt_double(report.model.amplitude) << ',' << engine_name(report.engine)
               << ',' << report.seed << ',' << report.samples << ',' << v.name << ','
               << csv_escape(report.anchors[i]) << ',' << fmt_double(v.max_residual) << ','
               << fmt_double(v.mean_residual) << ',' << fmt_double(v.tolerance) << ','
               << (v.pass ? "true" : "false") << ',' << csv_escape(w.str()) << '\n';
        }
        return os.str();
    }

    std::ostringstream os;
    os << "model " << report.model.model << " (n=" << report.model.n << ", a=" << report.model.a;
    if (report.model.has_profile) os << ", amplitude=" << report.model.amplitude;
    os << "), engine " << engine_name(report.engine) << ", samples " << report.samples << ", seed "
       << report.seed << "\n";
    for (size_t i = 0; i < report.checks.size(); ++i) {
        const CheckVerdict& v = report.checks[i];
        const bool expected_fail =
            std::find(report.expected_failure_ids.begin(), report.expected_failure_ids.end(),
                      v.name) != report.expected_failure_ids.end();
        os << (v.pass ? "  pass  " : (expected_fail ? "  xfail " : "  FAIL  ")) << v.name
           << "  max=" << fmt_double(v.max_residual) << "  tol=" << fmt_double(v.tolerance) << "\n";
    }
    for (const SkippedCheck& s : report.skipped)
        os << "  skip  " << s.id << "  (" << s.reason << ")\n";
    os << (report.overall_pass ? "overall: pass" : "overall: FAIL") << "\n";
    return os.str();
}

std::string render_integral_report(const ModelDescriptor& desc, int grid_r, int grid_ang,
                                   const std::vector<IntegralCheck>& checks, ReportFormat format) {
    bool all = true;
    for (const IntegralCheck& c : checks) all = all && c.pass;

    if (format == ReportFormat::json) {
        ordered_json j;
        j["model"] = model_json(desc, 0, 0);
        j["grid"] = {{"r", grid_r}, {"ang", grid_ang}};
        ordered_json arr = ordered_json::array();
        for (const IntegralCheck& c : checks) {
            ordered_json e;
            e["id"] = c.id;
            e["value"] = c.value;
            e["reference"] = c.reference;
            e["tolerance"] = c.tolerance;
            e["pass"] = c.pass;
            arr.push_back(std::move(e));
        }
        j["checks"] = std::move(arr);
        j["overall_pass"] = all;
        return j.dump(2) + "\n";
    }

    if (format == ReportFormat::csv) {
        std::ostringstream os;
        os << "model,n,a,amplitude,grid_r,grid_ang,id,value,reference,tolerance,pass\n";
        for (const IntegralCheck& c : checks)
            os << desc.model << ',' << desc.n << ',' << fmt_double(desc.a) << ','
               << fmt_double(desc.amplitude) << ',' << grid_r << ',' << grid_ang << ',' << c.id
               << ',' << fmt_double(c.value) << ',' << fmt_double(c.reference) << ','
               << fmt_double(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
        return os.str();
    }

    std::ostringstream os;
    os << "model " << desc.model << " (n=" << desc.n << ", a=" << desc.a << "), grid (" << grid_r
       << ", " << grid_ang << "^3)\n";
    for (const IntegralCheck& c : checks)
        os << (c.pass ? "  pass  " : "  FAIL  ") << c.id << "  value=" << fmt_double(c.value)
           << "  reference=" << fmt_double(c.reference) << "  tol=" << fmt_double(c.tolerance)
           << "\n";
    os << (all ? "overall: pass" : "overall: FAIL") << "\n";
    return os.str();
}

} // namespace lckv
