#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "lckv/lck.hpp"

namespace lckv {

/// Lean per-node data for integrands over the fundamental domain: metric and
/// Lee-form jets plus the derived first-order quantities, values where one
/// derivative suffices.
struct QuadPointData {
    ChartPoint p;
    int dim = 0;
    DMat g_v, ginv_v;
    double sqrt_det_g = 0.0;
    Jet2 norm2theta;   // |theta|^2 with exact gradient and Hessian
    DVec T_v;          // Lee vector field values
    double div_lee = 0.0;      // delta(theta)
    double laplace_norm2 = 0.0;  // Delta |theta|^2
    double nabla_theta_norm2 = 0.0;  // |nabla theta|^2
};

struct ScalarQuantity {
    std::string name;
    bool needs_derivatives = true;  // false: only the point and metric values are filled
    std::function<double(const QuadPointData&)> fn;
};

/// Product grid over the fundamental domain {1 <= r <= a} in coordinates
/// (ln r, S^3 angles), n = 2 only. The ln r direction uses midpoints of a
/// uniform grid (all model integrands are a-periodic in ln r, so the rule is
/// spectrally accurate there); the sphere uses Gauss-Legendre in sin^2(eta)
/// times uniform grids in the two periodic angles. Euclidean radial masses
/// are kept as exact per-cell integrals of r^3 dr. Deterministic, seedless.
class QuadratureGrid {
public:
    QuadratureGrid(int n_r, int n_ang, double a);

    int n_r() const { return n_r_; }
    int n_ang() const { return n_ang_; }
    double a() const { return a_; }

    /// Sum of h over the grid against the Euclidean volume of the annulus
    /// (exact for h = 1).
    double integrate_euclidean(const std::function<double(const ChartPoint&)>& h) const;
    double euclidean_volume() const;

    /// For each node: point, radial log-weight ds, Euclidean radial factor
    /// r^4 at the node, angular weight.
    template <class Visit>
    void for_each_node(Visit&& visit) const {
        for (int ir = 0; ir < n_r_; ++ir) {
            const double s = (ir + 0.5) * ds_;
            const double r = std::exp(s);
            for (const AngularNode& an : angular_) {
                ChartPoint p;
                p.dim = 4;
                p[0] = r * an.dir[0];
                p[1] = r * an.dir[1];
                p[2] = r * an.dir[2];
                p[3] = r * an.dir[3];
                visit(p, ds_, r * r * r * r, an.weight);
            }
        }
    }

private:
    struct AngularNode {
        std::array<double, 4> dir;  // point on the unit S^3
        double weight;              // includes the S^3 measure
    };

    int n_r_;
    int n_ang_;
    double a_;
    double ds_;
    std::vector<AngularNode> angular_;
    std::vector<double> radial_euclid_mass_;  // exact integral of r^3 dr over each ln r cell
};

/// Integral of h against the model's own Riemannian volume over the
/// fundamental domain. n = 2 only; other n are rejected rather than
/// approximated.
double integrate(const LckStructure& s, const ScalarQuantity& h, const QuadratureGrid& grid);

/// Several integrands in one sweep (shares the per-node geometry).
std::vector<double> integrate_many(const LckStructure& s, const std::vector<ScalarQuantity>& hs,
                                   const QuadratureGrid& grid);

QuadPointData build_quad_point(const LckStructure& s, const ChartPoint& p,
                               bool needs_derivatives = true);

struct IntegralCheck {
    std::string id;
    double value = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// The global (compactness) identities at desk scale:
///   volume = 32 pi^2 ln a;  integral of delta(theta) = 0;
///   integral of Delta|theta|^2 = 0;
///   integration by parts: integral of T(h) - h delta(theta) = 0, h = |theta|^2;
///   on parallel-Lee models, integral of |nabla theta|^2 = 0.
std::vector<IntegralCheck> check_integral_identities(const LckStructure& s,
                                                     const QuadratureGrid& grid);

/// Named quantities for the CLI.
ScalarQuantity quantity_by_name(const std::string& name);
std::vector<std::string> quantity_names();

} // namespace lckv
