#include "lckv/quadrature.hpp"

#include <cmath>

#include "lckv/calculus.hpp"
#include "lckv/connection.hpp"

namespace lckv {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

/// Gauss-Legendre nodes and weights on [0, 1] (Newton iteration on P_n).
void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<size_t>(n), 0.0);
    weights.assign(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<size_t>(i)] = 0.5 * (1.0 + x);
        weights[static_cast<size_t>(i)] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
}

/// Solve g v = b with jet entries via the Cholesky factor of g.
JVec jet_spd_solve(const JMat& g, const JVec& b) {
    const int dim = g.dim;
    const JMat L = cholesky(g);
    JVec y(dim), v(dim);
    for (int i = 0; i < dim; ++i) {
        Jet2 s = b[i];
        for (int k = 0; k < i; ++k) s -= L.at(i, k) * y[k];
        y[i] = s / L.at(i, i);
    }
    for (int i = dim - 1; i >= 0; --i) {
        Jet2 s = y[i];
        for (int k = i + 1; k < dim; ++k) s -= L.at(k, i) * v[k];
        v[i] = s / L.at(i, i);
    }
    return v;
}

} // namespace

QuadratureGrid::QuadratureGrid(int n_r, int n_ang, double a) : n_r_(n_r), n_ang_(n_ang), a_(a) {
    if (n_r < 1 || n_ang < 1) throw StructuralError("quadrature grid sizes must be positive");
    if (!(a > 1.0)) throw StructuralError("quadrature needs a > 1");
    ds_ = std::log(a) / n_r_;

    radial_euclid_mass_.resize(static_cast<size_t>(n_r_));
    for (int ir = 0; ir < n_r_; ++ir) {
        const double s0 = ir * ds_, s1 = (ir + 1) * ds_;
        // exact integral of r^3 dr = e^{4s} ds over the cell
        radial_euclid_mass_[static_cast<size_t>(ir)] = (std::exp(4.0 * s1) - std::exp(4.0 * s0)) / 4.0;
    }

    std::vector<double> tn, tw;
    gauss_legendre_01(n_ang_, tn, tw);
    const double dxi = 2.0 * kPi / n_ang_;
    angular_.reserve(static_cast<size_t>(n_ang_ * n_ang_ * n_ang_));
    for (int it = 0; it < n_ang_; ++it) {
        const double t = tn[static_cast<size_t>(it)];
        const double ce = std::sqrt(1.0 - t);  // cos(eta)
        const double se = std::sqrt(t);        // sin(eta)
        for (int i1 = 0; i1 < n_ang_; ++i1) {
            const double xi1 = (i1 + 0.5) * dxi;
            for (int i2 = 0; i2 < n_ang_; ++i2) {
                const double xi2 = (i2 + 0.5) * dxi;
                AngularNode node;
                node.dir = {ce * std::cos(xi1), ce * std::sin(xi1), se * std::cos(xi2),
                            se * std::sin(xi2)};
                // S^3 measure cos(eta) sin(eta) d(eta) dxi1 dxi2 = 1/2 dt dxi1 dxi2
                node.weight = 0.5 * tw[static_cast<size_t>(it)] * dxi * dxi;
                angular_.push_back(node);
            }
        }
    }
}

double QuadratureGrid::euclidean_volume() const {
    return integrate_euclidean([](const ChartPoint&) { return 1.0; });
}

double QuadratureGrid::integrate_euclidean(const std::function<double(const ChartPoint&)>& h) const {
    double sum = 0.0;
    for (int ir = 0; ir < n_r_; ++ir) {
        const double s = (ir + 0.5) * ds_;
        const double r = std::exp(s);
        const double mass = radial_euclid_mass_[static_cast<size_t>(ir)];
        double ang = 0.0;
        for (const AngularNode& an : angular_) {
            ChartPoint p;
            p.dim = 4;
            for (int i = 0; i < 4; ++i) p[i] = r * an.dir[static_cast<size_t>(i)];
            ang += h(p) * an.weight;
        }
        sum += mass * ang;
    }
    return sum;
}

QuadPointData build_quad_point(const LckStructure& s, const ChartPoint& p, bool needs_derivatives) {
    QuadPointData d;
    d.p = p;
    d.dim = s.dim;

    const JMat g = s.g.eval_ad(p);
    d.g_v = values_of(g);
    d.ginv_v = spd_inverse(d.g_v);
    d.sqrt_det_g = sqrt_det_from_cholesky(cholesky(d.g_v));
    if (!needs_derivatives) return d;

    const JVec theta = s.theta.eval_ad(p);
    const Christoffel gamma = christoffel_values(g, d.ginv_v);
    const DMat S = covd_oneform_values(theta, gamma);
    d.div_lee = codifferential_value(d.ginv_v, S);
    d.nabla_theta_norm2 = std::max(0.0, norm2_bilinear(d.ginv_v, S));
    d.T_v = mat_vec(d.ginv_v, values_of(theta));

    // |theta|^2 as an exact order-2 jet: theta . solve(g, theta)
    const JVec v = jet_spd_solve(g, theta);
    d.norm2theta = interior1(theta, v);
    d.laplace_norm2 = laplacian_value(d.norm2theta, d.ginv_v, gamma);
    return d;
}

double integrate(const LckStructure& s, const ScalarQuantity& h, const QuadratureGrid& grid) {
    return integrate_many(s, {h}, grid)[0];
}

std::vector<double> integrate_many(const LckStructure& s, const std::vector<ScalarQuantity>& hs,
                                   const QuadratureGrid& grid) {
    if (s.n != 2)
        throw UnsupportedError("fundamental-domain quadrature is implemented for n = 2 only");
    bool derivs = false;
    for (const ScalarQuantity& q : hs) derivs = derivs || q.needs_derivatives;

    std::vector<double> sums(hs.size(), 0.0);
    grid.for_each_node([&](const ChartPoint& p, double ds, double r4, double w_ang) {
        const QuadPointData d = build_quad_point(s, p, derivs);
        // model volume element: sqrt(det g) r^4 ds dOmega; the radial factor
        // sqrt(det g) r^4 is a-periodic in ln r, so the midpoint rule in ln r
        // is spectrally accurate for every model integrand
        const double w = d.sqrt_det_g * r4 * ds * w_ang;
        for (size_t i = 0; i < hs.size(); ++i) sums[i] += hs[i].fn(d) * w;
    });
    return sums;
}

ScalarQuantity quantity_by_name(const std::string& name) {
    if (name == "volume")
        return {"volume", false, [](const QuadPointData&) { return 1.0; }};
    if (name == "div-lee")
        return {"div-lee", true, [](const QuadPointData& d) { return d.div_lee; }};
    if (name == "ibp-defect")
        return {"ibp-defect", true, [](const QuadPointData& d) {
                    double Th = 0.0;
                    for (int k = 0; k < d.dim; ++k) Th += d.T_v[k] * d.norm2theta.grad(k);
                    return Th - d.norm2theta.value() * d.div_lee;
                }};
    if (name == "lap-norm2-lee")
        return {"lap-norm2-lee", true, [](const QuadPointData& d) { return d.laplace_norm2; }};
    if (name == "grad-lee-norm2")
        return {"grad-lee-norm2", true, [](const QuadPointData& d) { return d.nabla_theta_norm2; }};
    throw StructuralError("unknown integrand '" + name + "'");
}

std::vector<std::string> quantity_names() {
    return {"volume", "div-lee", "ibp-defect", "lap-norm2-lee", "grad-lee-norm2"};
}

std::vector<IntegralCheck> check_integral_identities(const LckStructure& s,
                                                     const QuadratureGrid& grid) {
    std::vector<ScalarQuantity> qs = {quantity_by_name("volume"), quantity_by_name("div-lee"),
                                      quantity_by_name("ibp-defect"),
                                      quantity_by_name("lap-norm2-lee")};
    const bool parallel_lee = s.desc.expect_vaisman;
    if (parallel_lee) qs.push_back(quantity_by_name("grad-lee-norm2"));

    const std::vector<double> vals = integrate_many(s, qs, grid);
    const double vol_ref = 32.0 * kPi * kPi * std::log(grid.a());
    const double vol = vals[0];

    std::vector<IntegralCheck> out;
    out.push_back({"q_volume", vol, vol_ref, 1e-6 * vol_ref, std::abs(vol - vol_ref) <= 1e-6 * vol_ref});
    const double tol = 1e-3 * vol_ref;
    out.push_back({"q_div_lee", vals[1], 0.0, tol, std::abs(vals[1]) <= tol});
    out.push_back({"q_ibp_defect", vals[2], 0.0, tol, std::abs(vals[2]) <= tol});
    out.push_back({"q_lap_norm2_lee", vals[3], 0.0, tol, std::abs(vals[3]) <= tol});
    if (parallel_lee)
        out.push_back({"q_grad_lee_norm2", vals[4], 0.0, 1e-8, std::abs(vals[4]) <= 1e-8});
    return out;
}

} // namespace lckv
