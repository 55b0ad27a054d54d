#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lckv/models.hpp"
#include "lckv/residuals.hpp"

namespace lckv {

/// One named identity of the suite: a pointwise residual with tolerances per
/// engine and an applicability predicate over models.
struct IdentityCheck {
    std::string id;
    std::string description;
    std::string anchor;  // the identity in formula form, echoed in reports
    double tol_ad = 1e-9;
    double tol_fd = 1e-7;
    std::function<bool(const ModelDescriptor&)> applicable;
    std::string skip_reason;  // reported when not applicable
    std::function<double(const PointGeometry&)> residual;

    double tolerance(Engine e) const { return e == Engine::ad ? tol_ad : tol_fd; }
};

/// The registry, in stable report order.
const std::vector<IdentityCheck>& check_registry();

/// Checks that must fail on a model (the counterexample contract), together
/// with the residual floor a genuine failure must exceed.
std::vector<std::string> expected_failures(const ModelDescriptor& desc);
inline constexpr double kExpectedFailureFloor = 0.01;

struct SkippedCheck {
    std::string id;
    std::string reason;
};

struct SuiteReport {
    ModelDescriptor model;
    Engine engine = Engine::ad;
    unsigned long long seed = 0;
    int samples = 0;
    double fd_step = 0.0;
    std::vector<CheckVerdict> checks;          // applicable checks, registry order
    std::vector<std::string> anchors;          // parallel to checks
    std::vector<SkippedCheck> skipped;
    std::vector<std::string> expected_failure_ids;
    bool overall_pass = false;
};

/// Max/mean residual of one check over samples, with the witness point of the
/// max. Deterministic for a fixed sample sequence.
CheckVerdict run_check(const IdentityCheck& check, const LckStructure& s,
                       std::span<const ChartPoint> samples, const EvalParams& params = {});

/// Runs every applicable registry check over a fresh deterministic sample set.
/// overall_pass requires every ordinary check to pass and every expected
/// failure to fail with residual > kExpectedFailureFloor.
SuiteReport run_suite(const ModelDescriptor& desc, Engine engine, int samples,
                      unsigned long long seed,
                      const std::vector<std::pair<std::string, double>>& tol_overrides = {},
                      double fd_step = 1e-4);

/// Tolerance overrides as "id=value" pairs applied on top of the registry.
double check_tolerance(const IdentityCheck& check, Engine engine,
                       const std::vector<std::pair<std::string, double>>& overrides);

} // namespace lckv
