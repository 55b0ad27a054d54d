#pragma once

#include <ostream>
#include <string>

#include "lckv/checks.hpp"
#include "lckv/quadrature.hpp"

namespace lckv {

enum class ReportFormat { json, csv, text };

ReportFormat report_format_from_string(const std::string& s);

/// Serialized suite report. Field order is fixed; identical (config, build)
/// pairs produce byte-identical output.
///
/// JSON schema:
///   { "model": {"model", "n", "a", "amplitude", "samples", "seed"},
///     "engine", "seed", "samples",
///     "checks": [ {"id", "paper_anchor", "max_residual", "mean_residual",
///                  "tolerance", "pass", "witness"} ],
///     "expected_failures": [ids], "skipped": [{"id", "reason"}],
///     "overall_pass" }
std::string render_suite_report(const SuiteReport& report, ReportFormat format);

/// Integral checks in the same three formats.
std::string render_integral_report(const ModelDescriptor& desc, int grid_r, int grid_ang,
                                   const std::vector<IntegralCheck>& checks, ReportFormat format);

} // namespace lckv
