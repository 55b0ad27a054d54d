#pragma once

#include <cmath>

#include "lckv/errors.hpp"
#include "lckv/linalg.hpp"
#include "lckv/tensor.hpp"

namespace lckv {

// ---------------------------------------------------------------------------
// wedge products
//
// Pairing conventions (no 1/k! factors):
//   (a ^ b)(X, Y)    = a(X) b(Y) - a(Y) b(X)
//   (a ^ w)(X, Y, Z) = a(X) w(Y, Z) + a(Y) w(Z, X) + a(Z) w(X, Y)
// ---------------------------------------------------------------------------

template <class T>
Form2T<T> wedge11(const VecT<T>& a, const VecT<T>& b) {
    const int dim = a.dim;
    Form2T<T> r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            r.ordered(i, j) = a[i] * b[j] - a[j] * b[i];
    return r;
}

template <class T>
Form3T<T> wedge12(const VecT<T>& a, const Form2T<T>& w) {
    const int dim = a.dim;
    Form3T<T> r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k)
                r.ordered(i, j, k) = a[i] * w.value(j, k) + a[j] * w.value(k, i) + a[k] * w.value(i, j);
    return r;
}

// ---------------------------------------------------------------------------
// interior products  (X . eta)(...) = eta(X, ...)
// ---------------------------------------------------------------------------

template <class T>
T interior1(const VecT<T>& x, const VecT<T>& a) {
    T s = x[0] * a[0];
    for (int i = 1; i < x.dim; ++i) s += x[i] * a[i];
    return s;
}

template <class T>
VecT<T> interior2(const VecT<T>& x, const Form2T<T>& w) {
    const int dim = x.dim;
    VecT<T> r(dim);
    for (int j = 0; j < dim; ++j) {
        T s = x[0] * w.value(0, j);
        for (int i = 1; i < dim; ++i) s += x[i] * w.value(i, j);
        r[j] = s;
    }
    return r;
}

template <class T>
Form2T<T> interior3(const VecT<T>& x, const Form3T<T>& w) {
    const int dim = x.dim;
    Form2T<T> r(dim);
    for (int j = 0; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k) {
            T s = x[0] * w.value(0, j, k);
            for (int i = 1; i < dim; ++i) s += x[i] * w.value(i, j, k);
            r.ordered(j, k) = s;
        }
    return r;
}

// ---------------------------------------------------------------------------
// musical isomorphisms and the action of J
// ---------------------------------------------------------------------------

template <class T>
VecT<T> sharp(const MatT<T>& ginv, const VecT<T>& a) {
    return mat_vec(ginv, a);
}

template <class T>
VecT<T> flat(const MatT<T>& g, const VecT<T>& x) {
    return mat_vec(g, x);
}

/// (J a)(X) = -a(JX), i.e. (J a)_i = -a_k J^k_i.
template <class T>
VecT<T> j_oneform(const MatT<T>& J, const VecT<T>& a) {
    const int dim = a.dim;
    VecT<T> r(dim);
    for (int i = 0; i < dim; ++i) {
        T s = a[0] * J.at(0, i);
        for (int k = 1; k < dim; ++k) s += a[k] * J.at(k, i);
        r[i] = -s;
    }
    return r;
}

template <class T>
VecT<T> j_vector(const MatT<T>& J, const VecT<T>& x) {
    return mat_vec(J, x);
}

// ---------------------------------------------------------------------------
// orthonormal frames and the omega-trace
// ---------------------------------------------------------------------------

/// Gram-Schmidt of the coordinate frame; rows are the frame vectors.
/// Deterministic given coordinate order.
inline DMat orthonormal_frame(const DMat& g) {
    const int dim = g.dim;
    DMat e(dim);
    for (int i = 0; i < dim; ++i) {
        DVec v(dim);
        v[i] = 1.0;
        for (int j = 0; j < i; ++j) {
            // subtract g-projection onto e_j
            double proj = 0.0;
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) proj += g.at(a, b) * v[a] * e.at(j, b);
            for (int a = 0; a < dim; ++a) v[a] -= proj * e.at(j, a);
        }
        double n2 = 0.0;
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) n2 += g.at(a, b) * v[a] * v[b];
        if (!(n2 > 1e-24)) throw NumericalDegeneracy("orthonormal frame lost rank");
        const double inv = 1.0 / std::sqrt(n2);
        for (int a = 0; a < dim; ++a) e.at(i, a) = v[a] * inv;
    }
    return e;
}

struct TraceOmega {
    double frame_sum = 0.0;    // sum_i eta(e_i, J e_i) over a Gram-Schmidt frame
    double contraction = 0.0;  // g^{ac} J^b_c eta_{ab}
};

/// Trace of a bilinear form against omega. Returns both the frame sum and the
/// frame-free contraction; the two agree up to roundoff (frame independence).
inline TraceOmega trace_omega_bilinear(const DMat& eta, const DMat& g, const DMat& ginv, const DMat& J) {
    const int dim = g.dim;
    TraceOmega t;
    const DMat e = orthonormal_frame(g);
    for (int i = 0; i < dim; ++i) {
        DVec ei(dim), jei(dim);
        for (int a = 0; a < dim; ++a) ei[a] = e.at(i, a);
        jei = j_vector(J, ei);
        double s = 0.0;
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) s += eta.at(a, b) * ei[a] * jei[b];
        t.frame_sum += s;
    }
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int c1 = 0; c1 < dim; ++c1)
                t.contraction += ginv.at(a, c1) * J.at(b, c1) * eta.at(a, b);
    return t;
}

template <class T>
MatT<double> form2_to_full(const Form2T<T>& w) {
    const Form2T<double> v = values_of(w);
    DMat m(w.dim);
    for (int i = 0; i < w.dim; ++i)
        for (int j = 0; j < w.dim; ++j) m.at(i, j) = v.value(i, j);
    return m;
}

inline DMat form2d_to_full(const DForm2& w) {
    DMat m(w.dim);
    for (int i = 0; i < w.dim; ++i)
        for (int j = 0; j < w.dim; ++j) m.at(i, j) = w.value(i, j);
    return m;
}

inline TraceOmega trace_omega(const DForm2& eta, const DMat& g, const DMat& ginv, const DMat& J) {
    return trace_omega_bilinear(form2d_to_full(eta), g, ginv, J);
}

// ---------------------------------------------------------------------------
// g-norms (indices raised with g; forms carry the 1/k! normalization)
// ---------------------------------------------------------------------------

inline double norm2_vector(const DMat& g, const DVec& x) {
    double s = 0.0;
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) s += g.at(i, j) * x[i] * x[j];
    return s;
}

inline double norm2_oneform(const DMat& ginv, const DVec& a) {
    double s = 0.0;
    for (int i = 0; i < ginv.dim; ++i)
        for (int j = 0; j < ginv.dim; ++j) s += ginv.at(i, j) * a[i] * a[j];
    return s;
}

/// Bilinear forms B_{ij}: B_{ij} B_{kl} g^{ik} g^{jl}.
inline double norm2_bilinear(const DMat& ginv, const DMat& b) {
    const DMat raised = mat_mul(mat_mul(ginv, b), ginv);
    double s = 0.0;
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j) s += b.at(i, j) * raised.at(i, j);
    return s;
}

inline double norm2_form2(const DMat& ginv, const DForm2& w) {
    return 0.5 * norm2_bilinear(ginv, form2d_to_full(w));
}

inline double norm2_form3(const DMat& ginv, const DForm3& w) {
    const int dim = w.dim;
    // raise indices one at a time: eta^{abc} = g^{ai} g^{bj} g^{ck} eta_{ijk}
    double s = 0.0;
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b)
            for (int c1 = b + 1; c1 < dim; ++c1) {
                double up = 0.0;
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j)
                        for (int k = 0; k < dim; ++k)
                            up += ginv.at(a, i) * ginv.at(b, j) * ginv.at(c1, k) * w.value(i, j, k);
                s += up * w.ordered(a, b, c1);
            }
    return s;
}

/// Endomorphisms A^i_j: A^i_j A^k_l g_{ik} g^{jl}.
inline double norm2_endo(const DMat& g, const DMat& ginv, const DMat& a) {
    const DMat m = mat_mul(mat_mul(g, a), ginv);  // m^i_l = g_{ik}... contracted below
    double s = 0.0;
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) s += a.at(i, j) * m.at(i, j);
    return s;
}

} // namespace lckv
