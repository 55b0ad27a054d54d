#include "lckv/models.hpp"

#include <cmath>

#include "lckv/calculus.hpp"
#include "lckv/connection.hpp"

namespace lckv {

namespace {

int jet_dim_of(std::span<const Jet2> x) { return x.empty() ? 0 : x[0].dim(); }

Jet2 radius2_of(std::span<const Jet2> x) {
    Jet2 r2 = x[0] * x[0];
    for (size_t i = 1; i < x.size(); ++i) r2 += x[i] * x[i];
    return r2;
}

// --- deterministic low-discrepancy sequence (Kronecker / additive) ---------

uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double unit_double(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Generalized golden ratio: the root > 1 of x^(d+1) = x + 1.
double harmonious(int d) {
    double x = 1.5;
    for (int it = 0; it < 80; ++it) {
        const double f = std::pow(x, d + 1) - x - 1.0;
        const double df = (d + 1) * std::pow(x, d) - 1.0;
        x -= f / df;
    }
    return x;
}

struct Kronecker {
    std::vector<double> alpha, state;

    Kronecker(int dims, uint64_t seed) {
        const double phi = harmonious(dims);
        alpha.resize(static_cast<size_t>(dims));
        state.resize(static_cast<size_t>(dims));
        uint64_t s = seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL;
        double p = 1.0;
        for (int j = 0; j < dims; ++j) {
            p /= phi;
            alpha[static_cast<size_t>(j)] = p;
            state[static_cast<size_t>(j)] = unit_double(splitmix64(s));
        }
    }

    void next(std::span<double> u) {
        for (size_t j = 0; j < alpha.size(); ++j) {
            state[j] += alpha[j];
            state[j] -= std::floor(state[j]);
            u[j] = state[j];
        }
    }
};

/// Inverse standard normal CDF (Acklam's rational approximation).
double inv_norm_cdf(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1 - plow;
    double q, r;
    if (p < plow) {
        q = std::sqrt(-2 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    if (p > phigh) {
        q = std::sqrt(-2 * std::log(1 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    q = p - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

} // namespace

DMat standard_complex_structure(int dim) {
    DMat J(dim);
    for (int k = 0; k + 1 < dim; k += 2) {
        J.at(k + 1, k) = 1.0;   // J d/dx_k = d/dy_k
        J.at(k, k + 1) = -1.0;  // J d/dy_k = -d/dx_k
    }
    return J;
}

ComplexStructureField standard_complex_structure_field(int dim) {
    return ComplexStructureField(dim, [](std::span<const Jet2> x) {
        const int dim2 = static_cast<int>(x.size());
        const int jd = jet_dim_of(x);
        JMat J(dim2);
        for (int i = 0; i < dim2; ++i)
            for (int j = 0; j < dim2; ++j) J.at(i, j) = Jet2::constant(jd, 0.0);
        for (int k = 0; k + 1 < dim2; k += 2) {
            J.at(k + 1, k) = Jet2::constant(jd, 1.0);
            J.at(k, k + 1) = Jet2::constant(jd, -1.0);
        }
        return J;
    });
}

LckStructure flat_kahler(int n) {
    if (n < 1) throw StructuralError("flat model needs n >= 1");
    const int dim = 2 * n;
    LckStructure s;
    s.n = n;
    s.dim = dim;
    s.g = MetricField(dim, [](std::span<const Jet2> x) {
        const int dim2 = static_cast<int>(x.size());
        const int jd = jet_dim_of(x);
        JMat g(dim2);
        for (int i = 0; i < dim2; ++i)
            for (int j = 0; j < dim2; ++j) g.at(i, j) = Jet2::constant(jd, i == j ? 1.0 : 0.0);
        return g;
    });
    s.J = standard_complex_structure_field(dim);
    s.omega = fundamental_form(s.g, s.J);
    s.theta = OneFormField(dim, [](std::span<const Jet2> x) {
        const int dim2 = static_cast<int>(x.size());
        const int jd = jet_dim_of(x);
        JVec t(dim2);
        for (int i = 0; i < dim2; ++i) t[i] = Jet2::constant(jd, 0.0);
        return t;
    });
    s.desc.model = "flat";
    s.desc.n = n;
    s.desc.a = 0.0;
    s.desc.amplitude = 0.0;
    s.desc.expect_vaisman = true;
    s.desc.unit_lee = false;
    s.desc.lee_nonzero = false;
    return s;
}

LckStructure hopf_structure(int n, double a) {
    if (n < 2) throw StructuralError("Hopf model needs n >= 2");
    if (!(a > 1.0)) throw StructuralError("Hopf dilation factor must satisfy a > 1");
    const int dim = 2 * n;
    if (dim > kMaxDim) throw UnsupportedError("chart dimension exceeds the built-in limit");

    LckStructure s;
    s.n = n;
    s.dim = dim;
    s.g = MetricField(dim, [](std::span<const Jet2> x) {
        require_punctured(x);
        const int dim2 = static_cast<int>(x.size());
        const int jd = jet_dim_of(x);
        const Jet2 conf = 4.0 / radius2_of(x);
        JMat g(dim2);
        for (int i = 0; i < dim2; ++i)
            for (int j = 0; j < dim2; ++j) g.at(i, j) = (i == j) ? conf : Jet2::constant(jd, 0.0);
        return g;
    });
    s.J = standard_complex_structure_field(dim);
    s.omega = fundamental_form(s.g, s.J);
    s.theta = OneFormField(dim, [](std::span<const Jet2> x) {
        require_punctured(x);
        const int dim2 = static_cast<int>(x.size());
        const Jet2 c = -2.0 / radius2_of(x);
        JVec t(dim2);
        for (int i = 0; i < dim2; ++i) t[i] = c * x[i];  // theta = -2 dr / r
        return t;
    });
    s.desc.model = "hopf";
    s.desc.n = n;
    s.desc.a = a;
    s.desc.amplitude = 0.0;
    s.desc.expect_vaisman = true;
    s.desc.unit_lee = true;
    s.desc.lee_nonzero = true;
    return s;
}

LckStructure deform(const LckStructure& base, const RadialProfile& profile) {
    if (!(profile.amplitude < 1.0))
        throw StructuralError("deformation rejected: profile amplitude must be < 1 so that f > -1");
    if (!(profile.a > 1.0)) throw StructuralError("deformation rejected: profile needs a > 1");

    // validate the base on a deterministic sample set
    ModelDescriptor sample_desc = base.desc;
    const std::vector<ChartPoint> probe = sample_points(sample_desc, 64, 20230901ULL);
    for (const ChartPoint& p : probe) {
        const PointGeometry geo = build_point_geometry(base, p);
        const double unit_gap = std::abs(geo.norm2theta.value() - 1.0);
        if (unit_gap > 1e-8)
            throw StructuralError("deformation rejected: base Lee form is not unit-norm (| |theta|^2 - 1 | = " +
                                  std::to_string(unit_gap) + ")");
        const double vaisman_res = std::sqrt(std::max(0.0, norm2_bilinear(geo.ginv_v, geo.S_v)));
        if (vaisman_res > 1e-8)
            throw StructuralError("deformation rejected: base Lee form is not parallel (||nabla theta|| = " +
                                  std::to_string(vaisman_res) + ")");
        // f > -1 and df ^ theta = 0 at the probe points
        Jet2 r2 = Jet2::constant(geo.dim, 0.0);
        for (int i = 0; i < geo.dim; ++i) {
            const Jet2 xi = Jet2::variable(geo.dim, i, p[i]);
            r2 += xi * xi;
        }
        const Jet2 f = profile.eval(r2);
        if (!(f.value() > -1.0))
            throw StructuralError("deformation rejected: profile reaches f <= -1");
        DVec df(geo.dim);
        for (int i = 0; i < geo.dim; ++i) df[i] = f.grad(i);
        const DForm2 dft = wedge11(df, geo.theta_v);
        const double dft_norm = std::sqrt(std::max(0.0, norm2_form2(geo.ginv_v, dft)));
        if (dft_norm > 1e-11)
            throw StructuralError("deformation rejected: df ^ theta != 0 (gradient of f not collinear to T)");
    }

    const MetricField base_g = base.g;
    const OneFormField base_theta = base.theta;
    const ComplexStructureField base_J = base.J;
    const RadialProfile prof = profile;

    LckStructure s;
    s.n = base.n;
    s.dim = base.dim;
    s.g = MetricField(base.dim, [base_g, base_theta, base_J, prof](std::span<const Jet2> x) {
        const JMat g = base_g.call(x);
        const JVec theta = base_theta.call(x);
        const JMat J = base_J.call(x);
        const JVec jtheta = j_oneform(J, theta);
        const Jet2 f = prof.eval(radius2_of(x));
        JMat gbar = g;
        for (int i = 0; i < g.dim; ++i)
            for (int j = 0; j < g.dim; ++j)
                gbar.at(i, j) += f * (theta[i] * theta[j] + jtheta[i] * jtheta[j]);
        return gbar;
    });
    s.J = base.J;
    s.omega = fundamental_form(s.g, s.J);
    s.theta = OneFormField(base.dim, [base_theta, prof](std::span<const Jet2> x) {
        const JVec theta = base_theta.call(x);
        const Jet2 scale = 1.0 + prof.eval(radius2_of(x));
        JVec t = theta;
        for (int i = 0; i < t.dim; ++i) t[i] = scale * theta[i];
        return t;
    });
    s.theta_base = base.theta;
    s.profile = ScalarField(base.dim, [prof](std::span<const Jet2> x) {
        require_punctured(x);
        return prof.eval(radius2_of(x));
    });
    s.desc.model = "hopf-deformed";
    s.desc.n = base.n;
    s.desc.a = profile.a;
    s.desc.amplitude = profile.amplitude;
    s.desc.has_profile = true;
    s.desc.expect_vaisman = false;
    s.desc.unit_lee = false;
    s.desc.lee_nonzero = true;
    return s;
}

LckStructure make_model(const ModelDescriptor& desc) {
    if (desc.model == "flat") return flat_kahler(desc.n);
    if (desc.model == "hopf") return hopf_structure(desc.n, desc.a);
    if (desc.model == "hopf-deformed") {
        LckStructure base = hopf_structure(desc.n, desc.a);
        return deform(base, RadialProfile{desc.amplitude, desc.a});
    }
    throw StructuralError("unknown model '" + desc.model + "' (expected flat | hopf | hopf-deformed)");
}

std::vector<ChartPoint> sample_points(const ModelDescriptor& desc, int count, unsigned long long seed) {
    const int dim = 2 * desc.n;
    if (dim > kMaxDim) throw UnsupportedError("chart dimension exceeds the built-in limit");
    const bool annulus = desc.model != "flat";

    std::vector<ChartPoint> pts;
    pts.reserve(static_cast<size_t>(count));
    Kronecker seq(dim + 1, seed);
    std::vector<double> u(static_cast<size_t>(dim + 1));

    int guard = 0;
    while (static_cast<int>(pts.size()) < count && guard++ < 100 * count + 1000) {
        seq.next(u);
        ChartPoint p;
        p.dim = dim;
        if (annulus) {
            const double r = std::exp(u[0] * std::log(desc.a));
            double z[kMaxDim];
            double zn = 0.0;
            for (int i = 0; i < dim; ++i) {
                z[i] = inv_norm_cdf(std::min(1.0 - 1e-12, std::max(1e-12, u[static_cast<size_t>(i + 1)])));
                zn += z[i] * z[i];
            }
            zn = std::sqrt(zn);
            if (zn < 1e-3) continue;
            for (int i = 0; i < dim; ++i) p[i] = r * z[i] / zn;
        } else {
            for (int i = 0; i < dim; ++i) p[i] = -1.5 + 3.0 * u[static_cast<size_t>(i + 1)];
        }
        bool degenerate = false;
        for (int i = 0; i < dim; ++i)
            if (std::abs(p[i]) < 1e-6) degenerate = true;
        if (degenerate) continue;
        pts.push_back(p);
    }
    if (static_cast<int>(pts.size()) < count)
        throw StructuralError("sampler failed to produce the requested number of points");
    return pts;
}

} // namespace lckv
