#include "lckv/residuals.hpp"

#include <cmath>

namespace lckv {
namespace residual {

namespace {

double norm_bilinear(const PointGeometry& geo, const DMat& b) {
    return std::sqrt(std::max(0.0, norm2_bilinear(geo.ginv_v, b)));
}

double norm_endo(const PointGeometry& geo, const DMat& a) {
    return std::sqrt(std::max(0.0, norm2_endo(geo.g_v, geo.ginv_v, a)));
}

double norm_vec(const PointGeometry& geo, const DVec& x) {
    return std::sqrt(std::max(0.0, norm2_vector(geo.g_v, x)));
}

double norm_1form(const PointGeometry& geo, const DVec& a) {
    return std::sqrt(std::max(0.0, norm2_oneform(geo.ginv_v, a)));
}

DForm2 d_of_oneform_values(const JVec& a) {
    const int dim = a.dim;
    DForm2 r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) r.ordered(i, j) = a[j].grad(i) - a[i].grad(j);
    return r;
}

DForm3 d_of_form2_values(const JForm2& w) {
    const int dim = w.dim;
    DForm3 r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k)
                r.ordered(i, j, k) =
                    w.value(j, k).grad(i) + w.value(k, i).grad(j) + w.value(i, j).grad(k);
    return r;
}

/// omega(A., .)_{ij} = A^k_i omega_{kj}
DMat omega_of_endo(const PointGeometry& geo, const DMat& a) {
    DMat r(geo.dim);
    for (int i = 0; i < geo.dim; ++i)
        for (int j = 0; j < geo.dim; ++j) {
            double s = 0.0;
            for (int k = 0; k < geo.dim; ++k) s += a.at(k, i) * geo.omega_full.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

/// (J dh)_i = -(d h)_k J^k_i with exact first derivatives.
JVec j_dh_jets(const PointGeometry& geo, const Jet2& h) {
    JVec r(geo.dim);
    for (int i = 0; i < geo.dim; ++i) {
        Jet2 s = partial(h, 0) * geo.J.at(0, i);
        for (int k = 1; k < geo.dim; ++k) s += partial(h, k) * geo.J.at(k, i);
        r[i] = -s;
    }
    return r;
}

DMat d_jdh_full(const PointGeometry& geo, const Jet2& h) {
    const JVec jdh = j_dh_jets(geo, h);
    DMat r(geo.dim);
    for (int i = 0; i < geo.dim; ++i)
        for (int j = 0; j < geo.dim; ++j) r.at(i, j) = jdh[j].grad(i) - jdh[i].grad(j);
    return r;
}

double directional(const PointGeometry& geo, const Jet2& h) {
    double s = 0.0;
    for (int k = 0; k < geo.dim; ++k) s += geo.T_v[k] * h.grad(k);
    return s;
}

DMat full_of(const DForm2& w) {
    DMat m(w.dim);
    for (int i = 0; i < w.dim; ++i)
        for (int j = 0; j < w.dim; ++j) m.at(i, j) = w.value(i, j);
    return m;
}

/// Endomorphism (X ^ Y) Z := g(X, Z) Y - g(Y, Z) X, which reads
/// (X ^ Y)^i_j = X_j Y^i - Y_j X^i with the flats taken by g.
DMat wedge_endo(const PointGeometry& geo, const DVec& x_up, const DVec& y_up) {
    const DVec x_lo = mat_vec(geo.g_v, x_up);
    const DVec y_lo = mat_vec(geo.g_v, y_up);
    DMat r(geo.dim);
    for (int i = 0; i < geo.dim; ++i)
        for (int j = 0; j < geo.dim; ++j) r.at(i, j) = x_lo[j] * y_up[i] - y_lo[j] * x_up[i];
    return r;
}

struct HoloNorms {
    double lie;   // ||L_T J||
    double comm;  // ||FJ - JF||
};

HoloNorms holo_norms(const PointGeometry& geo) {
    DMat lie(geo.dim), comm(geo.dim);
    for (int i = 0; i < geo.dim; ++i)
        for (int j = 0; j < geo.dim; ++j) {
            double tl = 0.0, tc = 0.0;
            for (int k = 0; k < geo.dim; ++k) {
                tl += geo.T_v[k] * geo.J.at(i, j).grad(k) - geo.J_v.at(k, j) * geo.T[i].grad(k) +
                      geo.J_v.at(i, k) * geo.T[k].grad(j);
                tc += geo.F_v.at(i, k) * geo.J_v.at(k, j) - geo.J_v.at(i, k) * geo.F_v.at(k, j);
            }
            lie.at(i, j) = tl;
            comm.at(i, j) = tc;
        }
    return {norm_endo(geo, lie), norm_endo(geo, comm)};
}

} // namespace

double lck(const PointGeometry& geo) {
    const DForm3 dw = d_of_form2_values(geo.omega);
    const DForm3 tw = wedge12(geo.theta_v, values_of(geo.omega));
    DForm3 r(geo.dim);
    for (int i = 0; i < r.size(); ++i) r.data()[i] = dw.data()[i] - tw.data()[i];
    const DForm2 dtheta = d_of_oneform_values(geo.theta);
    return std::sqrt(std::max(0.0, norm2_form3(geo.ginv_v, r))) +
           std::sqrt(std::max(0.0, norm2_form2(geo.ginv_v, dtheta)));
}

double naj(const PointGeometry& geo) {
    const std::vector<DMat> nablaJ = covd_endo_values(geo.J, geo.gamma_v);
    const DVec JT = mat_vec(geo.J_v, geo.T_v);

    double worst = 0.0;
    DMat nabla_T_J(geo.dim);
    for (int k = 0; k < geo.dim; ++k) {
        DVec ek(geo.dim), jek(geo.dim);
        ek[k] = 1.0;
        for (int i = 0; i < geo.dim; ++i) jek[i] = geo.J_v.at(i, k);

        const DMat w1 = wedge_endo(geo, ek, JT);
        const DMat w2 = wedge_endo(geo, jek, geo.T_v);
        DMat r(geo.dim);
        for (int i = 0; i < geo.dim; ++i)
            for (int j = 0; j < geo.dim; ++j) {
                r.at(i, j) = nablaJ[static_cast<size_t>(k)].at(i, j) - 0.5 * (w1.at(i, j) + w2.at(i, j));
                nabla_T_J.at(i, j) += geo.T_v[k] * nablaJ[static_cast<size_t>(k)].at(i, j);
            }
        worst = std::max(worst, norm_endo(geo, r));
    }
    worst = std::max(worst, norm_endo(geo, nabla_T_J));
    return worst;
}

double cgnt(const PointGeometry& geo) {
    const std::vector<DMat> nablaJ = covd_endo_values(geo.J, geo.gamma_v);
    const DVec JT = mat_vec(geo.J_v, geo.T_v);
    const double c = static_cast<double>(geo.n) - 1.0;

    DVec v1(geo.dim), v2(geo.dim);
    for (int m = 0; m < geo.dim; ++m) {
        double s1 = 0.0, s2 = 0.0;
        for (int k = 0; k < geo.dim; ++k)
            for (int j = 0; j < geo.dim; ++j) {
                s1 += geo.ginv_v.at(k, j) * nablaJ[static_cast<size_t>(k)].at(m, j);
                for (int a = 0; a < geo.dim; ++a)
                    s2 += geo.J_v.at(k, a) * geo.ginv_v.at(a, j) * nablaJ[static_cast<size_t>(k)].at(m, j);
            }
        v1[m] = s1 - c * JT[m];
        v2[m] = s2 + c * geo.T_v[m];
    }
    return std::max(norm_vec(geo, v1), norm_vec(geo, v2));
}

double doi(const PointGeometry& geo) {
    DMat r = lie_metric_values(geo.T, geo.g);
    for (int i = 0; i < geo.dim; ++i)
        for (int j = 0; j < geo.dim; ++j) r.at(i, j) -= 2.0 * geo.S_v.at(i, j);
    return norm_bilinear(geo, r);
}

double e3(const PointGeometry& geo) {
    DMat r = lie_form2_values(geo.T, geo.omega);
    const DMat wf = omega_of_endo(geo, geo.F_v);
    for (int i = 0; i < geo.dim; ++i)
        for (int j = 0; j < geo.dim; ++j) r.at(i, j) -= 2.0 * wf.at(i, j);
    return norm_bilinear(geo, r);
}

double e4(const PointGeometry& geo) {
    const DForm2 djt = d_of_oneform_values(geo.Jtheta);
    const DMat wf = omega_of_endo(geo, geo.F_v);
    const DForm2 tjt = wedge11(geo.theta_v, geo.Jtheta_v);
    const double h = geo.norm2theta.value();
    DMat r(geo.dim);
    for (int i = 0; i < geo.dim; ++i)
        for (int j = 0; j < geo.dim; ++j)
            r.at(i, j) = djt.value(i, j) - 2.0 * wf.at(i, j) + h * geo.omega_full.at(i, j) -
                         tjt.value(i, j);
    return norm_bilinear(geo, r);
}

double lie_jtheta(const PointGeometry& geo) {
    const DVec lhs = lie_oneform_values(geo.T, geo.Jtheta);
    DVec rhs(geo.dim);
    for (int i = 0; i < geo.dim; ++i) {
        double s = 0.0;
        for (int k = 0; k < geo.dim; ++k) s += geo.norm2theta.grad(k) * geo.J_v.at(k, i);
        rhs[i] = -s;
    }
    DVec r(geo.dim);
    for (int i = 0; i < geo.dim; ++i) r[i] = lhs[i] - rhs[i];
    return norm_1form(geo, r);
}

double djd(const PointGeometry& geo) {
    const Jet2& h = geo.norm2theta;
    const DMat lhs = d_jdh_full(geo, h);

    DMat F2(geo.dim);
    for (int i = 0; i < geo.dim; ++i)
        for (int j = 0; j < geo.dim; ++j) {
            double s = 0.0;
            for (int k = 0; k < geo.dim; ++k) s += geo.F_v.at(i, k) * geo.F_v.at(k, j);
            F2.at(i, j) = s;
        }
    const DMat wF2 = omega_of_endo(geo, F2);
    const DMat lieF = lie_endo_values(geo.T, geo.F);
    const DMat wLieF = omega_of_endo(geo, lieF);
    const DMat wF = omega_of_endo(geo, geo.F_v);

    DVec dh(geo.dim), jdh(geo.dim);
    for (int i = 0; i < geo.dim; ++i) dh[i] = h.grad(i);
    for (int i = 0; i < geo.dim; ++i) {
        double s = 0.0;
        for (int k = 0; k < geo.dim; ++k) s += dh[k] * geo.J_v.at(k, i);
        jdh[i] = -s;
    }
    const DForm2 dh_wedge_jt = wedge11(dh, geo.Jtheta_v);
    const DForm2 t_wedge_jdh = wedge11(geo.theta_v, jdh);

    const double Th = directional(geo, h);
    const double h2 = h.value();

    DMat r(geo.dim);
    for (int i = 0; i < geo.dim; ++i)
        for (int j = 0; j < geo.dim; ++j)
            r.at(i, j) = lhs.at(i, j) - 4.0 * wF2.at(i, j) - 2.0 * wLieF.at(i, j) +
                         Th * geo.omega_full.at(i, j) + 2.0 * h2 * wF.at(i, j) -
                         dh_wedge_jt.value(i, j) - t_wedge_jdh.value(i, j);
    return norm_bilinear(geo, r);
}

double tr_i(const PointGeometry& geo) {
    double worst = 0.0;
    DMat F2(geo.dim);
    for (int i = 0; i < geo.dim; ++i)
        for (int j = 0; j < geo.dim; ++j) {
            double s = 0.0;
            for (int k = 0; k < geo.dim; ++k) s += geo.F_v.at(i, k) * geo.F_v.at(k, j);
            F2.at(i, j) = s;
        }
    const DMat* as[3] = {&geo.F_v, &F2, &geo.J_v};
    for (const DMat* a : as) {
        const DMat eta = omega_of_endo(geo, *a);
        const TraceOmega t = trace_omega_bilinear(eta, geo.g_v, geo.ginv_v, geo.J_v);
        double tr = 0.0;
        for (int i = 0; i < geo.dim; ++i) tr += a->at(i, i);
        worst = std::max(worst, std::abs(t.contraction - tr));
    }
    return worst;
}

double tr_ii(const PointGeometry& geo) {
    double worst = 0.0;
    DVec dh(geo.dim);
    for (int i = 0; i < geo.dim; ++i) dh[i] = geo.norm2theta.grad(i);

    const DVec* pairs[2][2] = {{&geo.theta_v, &geo.Jtheta_v}, {&geo.theta_v, &dh}};
    for (auto& pr : pairs) {
        const DVec& alpha = *pr[0];
        const DVec& beta = *pr[1];
        const DMat eta = full_of(wedge11(alpha, beta));
        const TraceOmega t = trace_omega_bilinear(eta, geo.g_v, geo.ginv_v, geo.J_v);
        // g on 1-forms: g(a, b) = g(a#, b#)
        DVec jalpha(geo.dim);
        for (int i = 0; i < geo.dim; ++i) {
            double s = 0.0;
            for (int k = 0; k < geo.dim; ++k) s += alpha[k] * geo.J_v.at(k, i);
            jalpha[i] = -s;
        }
        double gj = 0.0;
        for (int i = 0; i < geo.dim; ++i)
            for (int j = 0; j < geo.dim; ++j) gj += geo.ginv_v.at(i, j) * jalpha[i] * beta[j];
        worst = std::max(worst, std::abs(t.contraction - 2.0 * gj));
    }
    return worst;
}

double tr_iii(const PointGeometry& geo) {
    double worst = 0.0;
    const Jet2* hs[2] = {&geo.norm2theta, &geo.log_r};
    for (const Jet2* h : hs) {
        const DMat djdh = d_jdh_full(geo, *h);
        const TraceOmega t = trace_omega_bilinear(djdh, geo.g_v, geo.ginv_v, geo.J_v);
        const double lap = laplacian_value(*h, geo.ginv_v, geo.gamma_v);
        const double Th = directional(geo, *h);
        worst = std::max(worst,
                         std::abs(t.contraction + 2.0 * lap - 2.0 * (1.0 - geo.n) * Th));
    }
    return worst;
}

double cinci(const PointGeometry& geo) {
    const Jet2& h = geo.norm2theta;
    const Jet2 delta_theta = codifferential_jet(geo.ginv, geo.S);
    const double lap = laplacian_value(h, geo.ginv_v, geo.gamma_v);
    const double Th = directional(geo, h);
    const double nabla2 = std::max(0.0, norm2_bilinear(geo.ginv_v, geo.S_v));
    const double Tdelta = directional(geo, delta_theta);
    return std::abs(lap + Th + h.value() * delta_theta.value() + 2.0 * nabla2 - Tdelta);
}

double tr_f(const PointGeometry& geo) {
    double trF = 0.0, trF2 = 0.0;
    for (int i = 0; i < geo.dim; ++i) {
        trF += geo.F_v.at(i, i);
        for (int j = 0; j < geo.dim; ++j) trF2 += geo.F_v.at(i, j) * geo.F_v.at(j, i);
    }
    const double delta_theta = codifferential_value(geo.ginv_v, geo.S_v);
    const double nabla2 = std::max(0.0, norm2_bilinear(geo.ginv_v, geo.S_v));
    return std::max(std::abs(trF + delta_theta), std::abs(trF2 - nabla2));
}

double potential(const PointGeometry& geo) {
    const DForm2 djt = d_of_oneform_values(geo.Jtheta);
    const DForm2 tjt = wedge11(geo.theta_v, geo.Jtheta_v);
    DMat r(geo.dim);
    for (int i = 0; i < geo.dim; ++i)
        for (int j = 0; j < geo.dim; ++j)
            r.at(i, j) = geo.omega_full.at(i, j) - tjt.value(i, j) + djt.value(i, j);
    return norm_bilinear(geo, r);
}

double deform_lck(const PointGeometry& geo) {
    const DForm3 dw = d_of_form2_values(geo.omega);
    const double scale = 1.0 + geo.f.value();
    DVec tb = values_of(geo.theta_base);
    for (int i = 0; i < geo.dim; ++i) tb[i] *= scale;
    const DForm3 tw = wedge12(tb, values_of(geo.omega));
    DForm3 r(geo.dim);
    for (int i = 0; i < r.size(); ++i) r.data()[i] = dw.data()[i] - tw.data()[i];
    return std::sqrt(std::max(0.0, norm2_form3(geo.ginv_v, r)));
}

double norm_lee(const PointGeometry& geo) {
    return std::abs(geo.norm2theta.value() - (1.0 + geo.f.value()));
}

double holomorphic_lee(const PointGeometry& geo) {
    const HoloNorms h = holo_norms(geo);
    return std::max(h.lie, h.comm);
}

double killing_lee(const PointGeometry& geo) {
    return norm_bilinear(geo, lie_metric_values(geo.T, geo.g));
}

double killing_antilee(const PointGeometry& geo) {
    const JVec JT = j_vector(geo.J, geo.T);
    return norm_bilinear(geo, lie_metric_values(JT, geo.g));
}

double vaisman(const PointGeometry& geo) {
    return norm_bilinear(geo, geo.S_v);
}

double gauduchon(const PointGeometry& geo) {
    return std::abs(codifferential_value(geo.ginv_v, geo.S_v));
}

} // namespace residual

double holomorphy_formulas_gap(const PointGeometry& geo) {
    DMat lie(geo.dim), comm(geo.dim);
    for (int i = 0; i < geo.dim; ++i)
        for (int j = 0; j < geo.dim; ++j) {
            double tl = 0.0, tc = 0.0;
            for (int k = 0; k < geo.dim; ++k) {
                tl += geo.T_v[k] * geo.J.at(i, j).grad(k) - geo.J_v.at(k, j) * geo.T[i].grad(k) +
                      geo.J_v.at(i, k) * geo.T[k].grad(j);
                tc += geo.F_v.at(i, k) * geo.J_v.at(k, j) - geo.J_v.at(i, k) * geo.F_v.at(k, j);
            }
            lie.at(i, j) = tl;
            comm.at(i, j) = tc;
        }
    const double a = std::sqrt(std::max(0.0, norm2_endo(geo.g_v, geo.ginv_v, lie)));
    const double b = std::sqrt(std::max(0.0, norm2_endo(geo.g_v, geo.ginv_v, comm)));
    return std::abs(a - b);
}

} // namespace lckv
