#include "lckv/lck.hpp"

#include <cmath>

#include "lckv/residuals.hpp"

namespace lckv {

namespace {

JForm2 fundamental_form_components(const JMat& g, const JMat& J) {
    const int dim = g.dim;
    const int jdim = g.at(0, 0).dim();

    // compatibility gate: g(J., J.) = g
    double worst = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            double s = 0.0;
            for (int k = 0; k < dim; ++k)
                for (int l = 0; l < dim; ++l)
                    s += g.at(k, l).value() * J.at(k, i).value() * J.at(l, j).value();
            worst = std::max(worst, std::abs(s - g.at(i, j).value()));
        }
    if (worst > 1e-8)
        throw StructuralError("(g, J) not compatible: ||g(J.,J.) - g|| = " + std::to_string(worst));

    JForm2 w(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            // omega_{ij} = g(J d_i, d_j), antisymmetrized so the canonical
            // storage is exact
            Jet2 a = Jet2::constant(jdim, 0.0);
            Jet2 b = a;
            for (int k = 0; k < dim; ++k) {
                a += J.at(k, i) * g.at(k, j);
                b += J.at(k, j) * g.at(k, i);
            }
            w.ordered(i, j) = (a - b) * 0.5;
        }
    return w;
}

JVec lee_form_components(const JMat& g, const JMat& J, int n) {
    const int dim = g.dim;
    const JForm2 omega = fundamental_form_components(g, J);
    const JForm3 dw = exterior_d2(omega);
    const JMat ginv = spd_inverse(g);

    // theta_x = 1/(2n-2) (d omega)_{xab} g^{ac} J^b_c
    JVec theta(dim);
    const int jdim = g.at(0, 0).dim();
    for (int x = 0; x < dim; ++x) {
        Jet2 s = Jet2::constant(jdim, 0.0);
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
                for (int c = 0; c < dim; ++c) s += dw.value(x, a, b) * ginv.at(a, c) * J.at(b, c);
        theta[x] = s / (2.0 * n - 2.0);
    }
    return theta;
}

} // namespace

TwoFormField fundamental_form(const MetricField& g, const ComplexStructureField& J) {
    const int dim = g.dim();
    return TwoFormField(dim, [g, J](std::span<const Jet2> x) {
        return fundamental_form_components(g.call(x), J.call(x));
    });
}

OneFormField lee_form(const MetricField& g, const ComplexStructureField& J, int n) {
    if (n < 2) throw StructuralError("Lee form recovery needs n >= 2");
    const int dim = g.dim();
    return OneFormField(
        dim, [g, J, n](std::span<const Jet2> x) { return lee_form_components(g.call(x), J.call(x), n); },
        /*jet_order=*/1);
}

PointGeometry build_point_geometry(const LckStructure& s, const ChartPoint& p,
                                   const EvalParams& params) {
    PointGeometry geo;
    geo.p = p;
    geo.dim = s.dim;
    geo.n = s.n;

    geo.g = s.g.eval(p, params);
    geo.J = s.J.eval(p, params);
    geo.omega = s.omega.eval(p, params);
    geo.theta = s.theta.eval(p, params);

    geo.ginv = spd_inverse(geo.g);
    geo.T = sharp(geo.ginv, geo.theta);
    geo.Jtheta = j_oneform(geo.J, geo.theta);
    geo.norm2theta = interior1(geo.T, geo.theta);

    {
        Jet2 r2 = Jet2::constant(geo.theta[0].dim(), 0.0);
        std::array<Jet2, kMaxDim> coords;
        for (int i = 0; i < geo.dim; ++i) {
            coords[static_cast<size_t>(i)] = Jet2::variable(geo.dim, i, p[i]);
            r2 += coords[static_cast<size_t>(i)] * coords[static_cast<size_t>(i)];
        }
        geo.log_r = log(r2) * 0.5;
    }

    geo.has_profile = s.desc.has_profile && s.profile.valid();
    if (geo.has_profile) {
        geo.f = s.profile.eval(p, params);
        geo.theta_base = s.theta_base.eval(p, params);
    }

    geo.gamma = christoffel_jets(geo.g, geo.ginv);
    geo.S = covd_oneform_jets(geo.theta, geo.gamma);
    geo.F = JMat(geo.dim);
    for (int i = 0; i < geo.dim; ++i)
        for (int j = 0; j < geo.dim; ++j) {
            Jet2 t = geo.ginv.at(i, 0) * geo.S.at(0, j);
            for (int k = 1; k < geo.dim; ++k) t += geo.ginv.at(i, k) * geo.S.at(k, j);
            geo.F.at(i, j) = t;
        }

    geo.g_v = values_of(geo.g);
    geo.ginv_v = values_of(geo.ginv);
    geo.J_v = values_of(geo.J);
    geo.S_v = values_of(geo.S);
    geo.F_v = values_of(geo.F);
    geo.theta_v = values_of(geo.theta);
    geo.T_v = values_of(geo.T);
    geo.Jtheta_v = values_of(geo.Jtheta);
    geo.omega_full = form2_to_full(geo.omega);
    geo.gamma_v = geo.gamma.values();
    return geo;
}

CheckVerdict reduce_residuals(const std::string& name, double tolerance,
                              std::span<const ChartPoint> samples,
                              std::span<const double> residuals) {
    CheckVerdict v;
    v.name = name;
    v.tolerance = tolerance;
    double sum = 0.0;
    for (size_t i = 0; i < residuals.size(); ++i) {
        sum += residuals[i];
        if (i == 0 || residuals[i] > v.max_residual) {
            v.max_residual = residuals[i];
            v.witness = samples[i];
        }
    }
    v.mean_residual = residuals.empty() ? 0.0 : sum / static_cast<double>(residuals.size());
    v.pass = v.max_residual <= tolerance;
    return v;
}

namespace {

template <class Residual>
CheckVerdict run_pointwise(const std::string& name, double tolerance, const LckStructure& s,
                           std::span<const ChartPoint> samples, const EvalParams& params,
                           Residual&& residual) {
    std::vector<double> r;
    r.reserve(samples.size());
    for (const ChartPoint& p : samples) {
        const PointGeometry geo = build_point_geometry(s, p, params);
        r.push_back(residual(geo));
    }
    return reduce_residuals(name, tolerance, samples, r);
}

} // namespace

CheckVerdict check_lck(const LckStructure& s, std::span<const ChartPoint> samples,
                       const EvalParams& params, double tolerance) {
    return run_pointwise("lck", tolerance, s, samples, params, residual::lck);
}

CheckVerdict check_vaisman(const LckStructure& s, std::span<const ChartPoint> samples,
                           const EvalParams& params, double tolerance) {
    return run_pointwise("vaisman", tolerance, s, samples, params, residual::vaisman);
}

CheckVerdict check_gauduchon(const LckStructure& s, std::span<const ChartPoint> samples,
                             const EvalParams& params, double tolerance) {
    return run_pointwise("gauduchon", tolerance, s, samples, params, residual::gauduchon);
}

CheckVerdict check_potential(const LckStructure& s, std::span<const ChartPoint> samples,
                             const EvalParams& params, double tolerance) {
    return run_pointwise("potential", tolerance, s, samples, params, residual::potential);
}

CheckVerdict check_holomorphic(const LckStructure& s, const VectorField& x,
                               std::span<const ChartPoint> samples, const EvalParams& params,
                               double tolerance) {
    return run_pointwise("holomorphic", tolerance, s, samples, params,
                         [&x, &params](const PointGeometry& geo) {
                             const JVec xj = x.eval(geo.p, params);
                             DMat lie(geo.dim);
                             // (L_X J)^i_j = -J^k_j d_k X^i + J^i_k d_j X^k for constant-J charts,
                             // assembled generically from jets
                             for (int i = 0; i < geo.dim; ++i)
                                 for (int j = 0; j < geo.dim; ++j) {
                                     double t = 0.0;
                                     for (int k = 0; k < geo.dim; ++k)
                                         t += xj[k].value() * geo.J.at(i, j).grad(k) -
                                              geo.J_v.at(k, j) * xj[i].grad(k) +
                                              geo.J_v.at(i, k) * xj[k].grad(j);
                                     lie.at(i, j) = t;
                                 }
                             return std::sqrt(std::max(0.0, norm2_endo(geo.g_v, geo.ginv_v, lie)));
                         });
}

CheckVerdict check_holomorphic_lee(const LckStructure& s, std::span<const ChartPoint> samples,
                                   const EvalParams& params, double tolerance) {
    return run_pointwise("holomorphic_lee", tolerance, s, samples, params, residual::holomorphic_lee);
}

CheckVerdict check_killing(const LckStructure& s, const VectorField& x,
                           std::span<const ChartPoint> samples, const EvalParams& params,
                           double tolerance) {
    return run_pointwise("killing", tolerance, s, samples, params,
                         [&x, &params](const PointGeometry& geo) {
                             const JVec xj = x.eval(geo.p, params);
                             const DMat lie = lie_metric_values(xj, geo.g);
                             return std::sqrt(std::max(0.0, norm2_bilinear(geo.ginv_v, lie)));
                         });
}

CheckVerdict check_killing_lee(const LckStructure& s, std::span<const ChartPoint> samples,
                               const EvalParams& params, double tolerance) {
    return run_pointwise("killing_lee", tolerance, s, samples, params, residual::killing_lee);
}

CheckVerdict check_killing_antilee(const LckStructure& s, std::span<const ChartPoint> samples,
                                   const EvalParams& params, double tolerance) {
    return run_pointwise("killing_antilee", tolerance, s, samples, params, residual::killing_antilee);
}

} // namespace lckv
