#pragma once

#include <vector>

#include "lckv/lck.hpp"

namespace lckv {

/// a-periodic radial profile f(r) = amplitude * sin(2 pi ln(r) / ln(a)).
/// f(ar) = f(r) for all r > 0 and |f| <= amplitude.
struct RadialProfile {
    double amplitude = 0.5;
    double a = 0.0;

    Jet2 eval(const Jet2& r2) const {
        // ln r = ln(r^2) / 2, smooth on the punctured chart
        const double two_pi = 6.283185307179586476925286766559;
        return amplitude * sin(log(r2) * (two_pi / (2.0 * std::log(a))));
    }
    double value(double r) const {
        const double two_pi = 6.283185307179586476925286766559;
        return amplitude * std::sin(two_pi * std::log(r) / std::log(a));
    }
};

/// Standard constant complex structure on interleaved coordinates:
/// J d/dx_k = d/dy_k.
DMat standard_complex_structure(int dim);
ComplexStructureField standard_complex_structure_field(int dim);

/// Flat Kahler C^n: g = delta, theta = 0. Baseline where every identity
/// degenerates to 0 = 0.
LckStructure flat_kahler(int n);

/// Hopf chart model on R^2n \ {0}: g = 4 r^-2 delta, theta = -2 dr / r,
/// dilation-invariant under x -> a x. n >= 2, a > 1.
LckStructure hopf_structure(int n, double a);

/// Deformation of a unit-Lee-norm parallel-Lee base:
/// omega_bar = omega + f theta ^ J theta, equivalently
/// g_bar = g + f (theta (x) theta + J theta (x) J theta), theta_bar = (1+f) theta.
/// Preconditions (validated on a deterministic sample set, rejected with a
/// diagnostic): base has parallel theta of unit norm, f > -1, df ^ theta = 0.
LckStructure deform(const LckStructure& base, const RadialProfile& profile);

/// Model zoo by descriptor name.
LckStructure make_model(const ModelDescriptor& desc);

/// Deterministic low-discrepancy samples for a model: annulus 1 <= r <= a for
/// Hopf charts, a box for flat models. Points with any |x_i| < 1e-6 are
/// rejected. Same (model, count, seed) always yields the same points.
std::vector<ChartPoint> sample_points(const ModelDescriptor& desc, int count, unsigned long long seed);

} // namespace lckv
