#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lckv/connection.hpp"
#include "lckv/fields.hpp"

namespace lckv {

struct ModelDescriptor {
    std::string model = "flat";  // "flat" | "hopf" | "hopf-deformed"
    int n = 2;
    double a = 2.0;
    double amplitude = 0.5;

    // capability tags consumed by check applicability predicates
    bool has_profile = false;    // carries the radial deformation profile
    bool expect_vaisman = false; // parallel Lee form by construction
    bool unit_lee = false;       // |theta| = 1 everywhere
    bool lee_nonzero = false;    // theta not identically zero
};

/// A Hermitian bundle (g, J, omega, theta) over one chart, with the analytic
/// Lee form carried by the model. omega is always the fundamental form of
/// (g, J); theta_base and profile are populated for deformed models.
struct LckStructure {
    int n = 2;
    int dim = 4;
    MetricField g;
    ComplexStructureField J;
    TwoFormField omega;
    OneFormField theta;

    // deformation extras (valid when desc.has_profile)
    OneFormField theta_base;
    ScalarField profile;

    ModelDescriptor desc;
};

/// Everything the identity checks need at one point, evaluated once and
/// shared: order-2 jets for the primitive fields and their algebraic
/// composites, order-1 jets for once-differentiated objects, value caches
/// for the residual assembly.
struct PointGeometry {
    ChartPoint p;
    int dim = 0;
    int n = 0;

    JMat g, J, ginv;
    JVec theta;
    JForm2 omega;

    JVec T;           // Lee vector field theta^sharp
    JVec Jtheta;      // J theta = T . omega
    Jet2 norm2theta;  // |theta|^2 = g(theta, theta)
    Jet2 log_r;       // ln r, scalar anchor for the trace identities

    bool has_profile = false;
    Jet2 f;           // profile value
    JVec theta_base;  // undeformed Lee form (deformed models)

    ChristoffelJets gamma{0};
    JMat S;           // (nabla theta)_{ij}, first-order jets
    JMat F;           // nabla T = g^{-1} S, first-order jets

    DMat g_v, ginv_v, J_v, S_v, F_v;
    DVec theta_v, T_v, Jtheta_v;
    DMat omega_full;  // omega_{ij} expanded to a full matrix (values)
    Christoffel gamma_v{0};
};

PointGeometry build_point_geometry(const LckStructure& s, const ChartPoint& p,
                                   const EvalParams& params = {});

/// omega(X, Y) = g(JX, Y), stored antisymmetrically; throws StructuralError
/// when (g, J) fail the compatibility bound ||g(J., J.) - g|| > 1e-8.
TwoFormField fundamental_form(const MetricField& g, const ComplexStructureField& J);

/// Lee form recovered by contracting d(omega):
///   theta(X) = 1/(2n-2) sum_i d(omega)(X, e_i, J e_i).
/// Exact on lcK inputs; on arbitrary Hermitian inputs it is only the
/// contraction (no lcK guarantee). Requires n >= 2.
OneFormField lee_form(const MetricField& g, const ComplexStructureField& J, int n);

struct CheckVerdict {
    std::string name;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    ChartPoint witness;
};

CheckVerdict reduce_residuals(const std::string& name, double tolerance,
                              std::span<const ChartPoint> samples,
                              std::span<const double> residuals);

// Predicate checkers. Residuals are g-norms; verdicts carry the witness point
// of the max residual.
CheckVerdict check_lck(const LckStructure& s, std::span<const ChartPoint> samples,
                       const EvalParams& params = {}, double tolerance = 1e-9);
CheckVerdict check_vaisman(const LckStructure& s, std::span<const ChartPoint> samples,
                           const EvalParams& params = {}, double tolerance = 1e-9);
CheckVerdict check_gauduchon(const LckStructure& s, std::span<const ChartPoint> samples,
                             const EvalParams& params = {}, double tolerance = 1e-9);
CheckVerdict check_potential(const LckStructure& s, std::span<const ChartPoint> samples,
                             const EvalParams& params = {}, double tolerance = 1e-9);

/// Holomorphy of an arbitrary vector field: max ||L_X J||.
CheckVerdict check_holomorphic(const LckStructure& s, const VectorField& x,
                               std::span<const ChartPoint> samples,
                               const EvalParams& params = {}, double tolerance = 1e-9);
/// Holomorphy of the Lee field: max of both ||L_T J|| and ||FJ - JF||
/// (the two characterizations must agree; see holomorphy_formulas_gap).
CheckVerdict check_holomorphic_lee(const LckStructure& s, std::span<const ChartPoint> samples,
                                   const EvalParams& params = {}, double tolerance = 1e-9);
CheckVerdict check_killing(const LckStructure& s, const VectorField& x,
                           std::span<const ChartPoint> samples,
                           const EvalParams& params = {}, double tolerance = 1e-9);
CheckVerdict check_killing_lee(const LckStructure& s, std::span<const ChartPoint> samples,
                               const EvalParams& params = {}, double tolerance = 1e-9);
CheckVerdict check_killing_antilee(const LckStructure& s, std::span<const ChartPoint> samples,
                                   const EvalParams& params = {}, double tolerance = 1e-9);

/// Pointwise gap |  ||L_T J|| - ||FJ - JF||  | between the two holomorphy
/// characterizations (internal cross-check, expected <= 1e-9).
double holomorphy_formulas_gap(const PointGeometry& geo);

} // namespace lckv
