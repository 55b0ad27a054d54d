#pragma once

#include <vector>

#include "lckv/calculus.hpp"
#include "lckv/fields.hpp"
#include "lckv/linalg.hpp"
#include "lckv/tensor.hpp"

namespace lckv {

/// Christoffel symbols of the second kind at a point, symmetric in the lower
/// pair by packed storage (torsion-free by construction).
struct Christoffel {
    int dim = 0;
    // Gamma^k_{ij} with (i <= j) packed; index k * packed_count(dim) + packed_index(i,j,dim)
    std::vector<double> v;

    explicit Christoffel(int d) : dim(d), v(static_cast<size_t>(d * packed_count(d)), 0.0) {}
    double at(int k, int i, int j) const {
        if (i > j) std::swap(i, j);
        return v[static_cast<size_t>(k * packed_count(dim) + packed_index(i, j, dim))];
    }
    double& ref(int k, int i, int j) {
        if (i > j) std::swap(i, j);
        return v[static_cast<size_t>(k * packed_count(dim) + packed_index(i, j, dim))];
    }
};

/// Same layout, entries as first-order jets (value and gradient exact).
struct ChristoffelJets {
    int dim = 0;
    std::vector<Jet2> v;

    explicit ChristoffelJets(int d) : dim(d), v(static_cast<size_t>(d * packed_count(d))) {}
    const Jet2& at(int k, int i, int j) const {
        if (i > j) std::swap(i, j);
        return v[static_cast<size_t>(k * packed_count(dim) + packed_index(i, j, dim))];
    }
    Jet2& ref(int k, int i, int j) {
        if (i > j) std::swap(i, j);
        return v[static_cast<size_t>(k * packed_count(dim) + packed_index(i, j, dim))];
    }

    Christoffel values() const {
        Christoffel g(dim);
        for (size_t t = 0; t < v.size(); ++t) g.v[t] = v[t].value();
        return g;
    }
};

/// Gamma^k_{ij} = 1/2 g^{kl} (d_i g_{jl} + d_j g_{il} - d_l g_{ij}),
/// as first-order jets so once-differentiated consumers stay exact.
inline ChristoffelJets christoffel_jets(const MatT<Jet2>& g, const MatT<Jet2>& ginv) {
    const int dim = g.dim;
    ChristoffelJets out(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            for (int k = 0; k < dim; ++k) {
                Jet2 s = Jet2::constant(dim, 0.0);
                for (int l = 0; l < dim; ++l) {
                    const Jet2 term = partial(g.at(j, l), i) + partial(g.at(i, l), j) - partial(g.at(i, j), l);
                    s += ginv.at(k, l) * term;
                }
                out.ref(k, i, j) = s * 0.5;
            }
        }
    }
    return out;
}

/// Value-only Christoffels straight from the metric jets (hot path).
inline Christoffel christoffel_values(const MatT<Jet2>& g, const DMat& ginv_v) {
    const int dim = g.dim;
    Christoffel out(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                double s = 0.0;
                for (int l = 0; l < dim; ++l)
                    s += ginv_v.at(k, l) *
                         (g.at(j, l).grad(i) + g.at(i, l).grad(j) - g.at(i, j).grad(l));
                out.ref(k, i, j) = 0.5 * s;
            }
    return out;
}

/// (nabla a)_{ij} = d_i a_j - Gamma^k_{ij} a_k, as first-order jets.
inline MatT<Jet2> covd_oneform_jets(const VecT<Jet2>& a, const ChristoffelJets& gamma) {
    const int dim = a.dim;
    MatT<Jet2> s(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Jet2 t = partial(a[j], i);
            for (int k = 0; k < dim; ++k) t -= gamma.at(k, i, j) * a[k];
            s.at(i, j) = t;
        }
    return s;
}

inline DMat covd_oneform_values(const VecT<Jet2>& a, const Christoffel& gamma) {
    const int dim = a.dim;
    DMat s(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            double t = a[j].grad(i);
            for (int k = 0; k < dim; ++k) t -= gamma.at(k, i, j) * a[k].value();
            s.at(i, j) = t;
        }
    return s;
}

/// (nabla X)^i_j = d_j X^i + Gamma^i_{jk} X^k (values).
inline DMat covd_vector_values(const VecT<Jet2>& x, const Christoffel& gamma) {
    const int dim = x.dim;
    DMat f(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            double t = x[i].grad(j);
            for (int k = 0; k < dim; ++k) t += gamma.at(i, j, k) * x[k].value();
            f.at(i, j) = t;
        }
    return f;
}

/// (nabla_k J)^i_j = d_k J^i_j + Gamma^i_{kl} J^l_j - Gamma^l_{kj} J^i_l (values);
/// returned as nabla[k] = endomorphism matrix.
inline std::vector<DMat> covd_endo_values(const MatT<Jet2>& J, const Christoffel& gamma) {
    const int dim = J.dim;
    std::vector<DMat> out(static_cast<size_t>(dim), DMat(dim));
    for (int k = 0; k < dim; ++k) {
        DMat& m = out[static_cast<size_t>(k)];
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                double t = J.at(i, j).grad(k);
                for (int l = 0; l < dim; ++l)
                    t += gamma.at(i, k, l) * J.at(l, j).value() - gamma.at(l, k, j) * J.at(i, l).value();
                m.at(i, j) = t;
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// exterior derivative
//   (d h)_i      = d_i h
//   (d a)_{ij}   = d_i a_j - d_j a_i
//   (d w)_{ijk}  = d_i w_{jk} + d_j w_{ki} + d_k w_{ij}
// ---------------------------------------------------------------------------

inline VecT<Jet2> exterior_d0(const Jet2& h) {
    const int dim = h.dim();
    VecT<Jet2> r(dim);
    for (int i = 0; i < dim; ++i) r[i] = partial(h, i);
    return r;
}

inline Form2T<Jet2> exterior_d1(const VecT<Jet2>& a) {
    const int dim = a.dim;
    Form2T<Jet2> r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            r.ordered(i, j) = partial(a[j], i) - partial(a[i], j);
    return r;
}

inline Form3T<Jet2> exterior_d2(const Form2T<Jet2>& w) {
    const int dim = w.dim;
    Form3T<Jet2> r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k)
                r.ordered(i, j, k) =
                    partial(w.value(j, k), i) + partial(w.value(k, i), j) + partial(w.value(i, j), k);
    return r;
}

// Field-level exterior derivative: the result is itself a field, one jet
// order lower than its input. d on 3-forms is not provided (nothing in the
// suite needs degree 4, and the jets would not carry the third derivatives).

inline OneFormField exterior_d(const ScalarField& h) {
    return OneFormField(
        h.dim(), [h](std::span<const Jet2> x) { return exterior_d0(h.call(x)); },
        h.jet_order() - 1);
}

inline TwoFormField exterior_d(const OneFormField& a) {
    return TwoFormField(
        a.dim(), [a](std::span<const Jet2> x) { return exterior_d1(a.call(x)); },
        a.jet_order() - 1);
}

inline ThreeFormField exterior_d(const TwoFormField& w) {
    return ThreeFormField(
        w.dim(), [w](std::span<const Jet2> x) { return exterior_d2(w.call(x)); },
        w.jet_order() - 1);
}

// ---------------------------------------------------------------------------
// Lie derivatives (coordinate formulas; values)
// ---------------------------------------------------------------------------

inline DMat lie_metric_values(const VecT<Jet2>& x, const MatT<Jet2>& g) {
    const int dim = g.dim;
    DMat r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            double t = 0.0;
            for (int k = 0; k < dim; ++k)
                t += x[k].value() * g.at(i, j).grad(k) + g.at(k, j).value() * x[k].grad(i) +
                     g.at(i, k).value() * x[k].grad(j);
            r.at(i, j) = t;
        }
    return r;
}

inline DVec lie_oneform_values(const VecT<Jet2>& x, const VecT<Jet2>& a) {
    const int dim = a.dim;
    DVec r(dim);
    for (int i = 0; i < dim; ++i) {
        double t = 0.0;
        for (int k = 0; k < dim; ++k) t += x[k].value() * a[i].grad(k) + a[k].value() * x[k].grad(i);
        r[i] = t;
    }
    return r;
}

inline DMat lie_form2_values(const VecT<Jet2>& x, const Form2T<Jet2>& w) {
    const int dim = w.dim;
    DMat r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            double t = 0.0;
            for (int k = 0; k < dim; ++k)
                t += x[k].value() * w.value(i, j).grad(k) + w.value(k, j).value() * x[k].grad(i) +
                     w.value(i, k).value() * x[k].grad(j);
            r.at(i, j) = t;
        }
    return r;
}

/// (L_X F)^i_j for a (1,1)-tensor with first-order jets.
inline DMat lie_endo_values(const VecT<Jet2>& x, const MatT<Jet2>& f) {
    const int dim = f.dim;
    DMat r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            double t = 0.0;
            for (int k = 0; k < dim; ++k)
                t += x[k].value() * f.at(i, j).grad(k) - f.at(k, j).value() * x[i].grad(k) +
                     f.at(i, k).value() * x[k].grad(j);
            r.at(i, j) = t;
        }
    return r;
}

// ---------------------------------------------------------------------------
// codifferential and Laplacian (delta = -trace_g nabla; Delta = delta d,
// so Delta = -sum d^2 on flat space)
// ---------------------------------------------------------------------------

/// delta a = -g^{ij} (nabla a)_{ij}, kept as a first-order jet so directional
/// derivatives of delta a stay exact.
inline Jet2 codifferential_jet(const MatT<Jet2>& ginv, const MatT<Jet2>& nabla_a) {
    const int dim = ginv.dim;
    Jet2 s = Jet2::constant(dim, 0.0);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) s += ginv.at(i, j) * nabla_a.at(i, j);
    return -s;
}

inline double codifferential_value(const DMat& ginv_v, const DMat& nabla_a_v) {
    double s = 0.0;
    for (int i = 0; i < ginv_v.dim; ++i)
        for (int j = 0; j < ginv_v.dim; ++j) s += ginv_v.at(i, j) * nabla_a_v.at(i, j);
    return -s;
}

/// Delta h = -g^{ij} (d_i d_j h - Gamma^k_{ij} d_k h).
inline double laplacian_value(const Jet2& h, const DMat& ginv_v, const Christoffel& gamma) {
    const int dim = ginv_v.dim;
    double s = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            double hij = h.hess(i, j);
            for (int k = 0; k < dim; ++k) hij -= gamma.at(k, i, j) * h.grad(k);
            s += ginv_v.at(i, j) * hij;
        }
    return -s;
}

/// Divergence-form cross-check:
///   Delta h = -(1/sqrt(det g)) d_i ( sqrt(det g) g^{ij} d_j h ).
inline double laplacian_divergence_form(const Jet2& h, const MatT<Jet2>& g, const MatT<Jet2>& ginv) {
    const int dim = g.dim;
    const Jet2 sdet = sqrt_det_from_cholesky(cholesky(g));
    double div = 0.0;
    for (int i = 0; i < dim; ++i) {
        Jet2 wi = Jet2::constant(dim, 0.0);
        for (int j = 0; j < dim; ++j) wi += ginv.at(i, j) * partial(h, j);
        wi = sdet * wi;
        div += wi.grad(i);
    }
    return -div / sdet.value();
}

/// Divergence-form codifferential cross-check for 1-forms:
///   delta a = -(1/sqrt(det g)) d_i ( sqrt(det g) g^{ij} a_j ).
inline double codifferential_divergence_form(const VecT<Jet2>& a, const MatT<Jet2>& g,
                                             const MatT<Jet2>& ginv) {
    const int dim = g.dim;
    const Jet2 sdet = sqrt_det_from_cholesky(cholesky(g));
    double div = 0.0;
    for (int i = 0; i < dim; ++i) {
        Jet2 wi = Jet2::constant(dim, 0.0);
        for (int j = 0; j < dim; ++j) wi += ginv.at(i, j) * a[j];
        wi = sdet * wi;
        div += wi.grad(i);
    }
    return -div / sdet.value();
}

/// Metric compatibility residual: max |(nabla g)_{kij}|.
inline double metricity_residual(const MatT<Jet2>& g, const Christoffel& gamma) {
    const int dim = g.dim;
    double worst = 0.0;
    for (int k = 0; k < dim; ++k)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                double t = g.at(i, j).grad(k);
                for (int m = 0; m < dim; ++m)
                    t -= gamma.at(m, k, i) * g.at(m, j).value() + gamma.at(m, k, j) * g.at(i, m).value();
                worst = std::max(worst, std::abs(t));
            }
    return worst;
}

} // namespace lckv
