#pragma once

#include <cmath>

#include "lckv/errors.hpp"
#include "lckv/jet.hpp"
#include "lckv/tensor.hpp"

namespace lckv {

namespace detail {
inline double scalar_value(double x) { return x; }
inline double scalar_value(const Jet2& x) { return x.value(); }
} // namespace detail

/// Cholesky factor L (lower triangular, LL^T = m) of a symmetric
/// positive-definite matrix. Throws NumericalDegeneracy on a non-positive
/// pivot, which doubles as the positive-definiteness check for metrics.
template <class T>
MatT<T> cholesky(const MatT<T>& m) {
    const int dim = m.dim;
    MatT<T> L(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j <= i; ++j) {
            T s = m.at(i, j);
            for (int k = 0; k < j; ++k) s -= L.at(i, k) * L.at(j, k);
            if (i == j) {
                if (!(detail::scalar_value(s) > 0.0))
                    throw NumericalDegeneracy("matrix is not positive-definite (pivot <= 0)");
                using std::sqrt;
                L.at(i, i) = sqrt(s);
            } else {
                L.at(i, j) = s / L.at(j, j);
            }
        }
    }
    return L;
}

template <class T>
T det_from_cholesky(const MatT<T>& L) {
    T d = L.at(0, 0) * L.at(0, 0);
    for (int i = 1; i < L.dim; ++i) d = d * (L.at(i, i) * L.at(i, i));
    return d;
}

template <class T>
T sqrt_det_from_cholesky(const MatT<T>& L) {
    T d = L.at(0, 0);
    for (int i = 1; i < L.dim; ++i) d = d * L.at(i, i);
    return d;
}

/// Inverse of a symmetric positive-definite matrix via its Cholesky factor.
template <class T>
MatT<T> spd_inverse(const MatT<T>& m) {
    const int dim = m.dim;
    const MatT<T> L = cholesky(m);
    // invert L in place (forward substitution), then m^-1 = L^-T L^-1
    MatT<T> Linv(dim);
    for (int i = 0; i < dim; ++i) {
        Linv.at(i, i) = 1.0 / L.at(i, i);
        for (int j = 0; j < i; ++j) {
            T s = L.at(i, j) * Linv.at(j, j);
            for (int k = j + 1; k < i; ++k) s += L.at(i, k) * Linv.at(k, j);
            Linv.at(i, j) = -s / L.at(i, i);
        }
    }
    MatT<T> inv(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j <= i; ++j) {
            T s = Linv.at(i, j) * Linv.at(i, j) * 0.0;
            for (int k = i; k < dim; ++k) s += Linv.at(k, i) * Linv.at(k, j);
            inv.at(i, j) = s;
            inv.at(j, i) = s;
        }
    }
    return inv;
}

template <class T>
VecT<T> mat_vec(const MatT<T>& m, const VecT<T>& v) {
    VecT<T> r(m.dim);
    for (int i = 0; i < m.dim; ++i) {
        T s = m.at(i, 0) * v[0];
        for (int j = 1; j < m.dim; ++j) s += m.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

template <class T>
MatT<T> mat_mul(const MatT<T>& a, const MatT<T>& b) {
    const int dim = a.dim;
    MatT<T> r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            T s = a.at(i, 0) * b.at(0, j);
            for (int k = 1; k < dim; ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

inline DMat dmat_identity(int dim) {
    DMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

/// Smallest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
/// Deterministic sweep order; used for positive-definiteness diagnostics.
inline double sym_eig_min(DMat m) {
    const int dim = m.dim;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < dim; ++p)
            for (int q = p + 1; q < dim; ++q) off += m.at(p, q) * m.at(p, q);
        if (off < 1e-26) break;
        for (int p = 0; p < dim; ++p) {
            for (int q = p + 1; q < dim; ++q) {
                const double apq = m.at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double tau = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < dim; ++k) {
                    const double mkp = m.at(k, p), mkq = m.at(k, q);
                    m.at(k, p) = c * mkp - s * mkq;
                    m.at(k, q) = s * mkp + c * mkq;
                }
                for (int k = 0; k < dim; ++k) {
                    const double mpk = m.at(p, k), mqk = m.at(q, k);
                    m.at(p, k) = c * mpk - s * mqk;
                    m.at(q, k) = s * mpk + c * mqk;
                }
            }
        }
    }
    double lo = m.at(0, 0);
    for (int i = 1; i < dim; ++i) lo = std::min(lo, m.at(i, i));
    return lo;
}

} // namespace lckv
