#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <limits>
#include <ostream>

namespace lckv {

// Largest chart dimension supported without heap storage (2n with n <= 3).
inline constexpr int kMaxDim = 6;
inline constexpr int kMaxPacked = kMaxDim * (kMaxDim + 1) / 2;

// Packed index into the upper triangle (i <= j) of a dim x dim symmetric matrix.
constexpr int packed_index(int i, int j, int dim) {
    return i * dim - i * (i - 1) / 2 + (j - i);
}

constexpr int packed_count(int dim) { return dim * (dim + 1) / 2; }

/// A scalar together with its exact first and second coordinate derivatives
/// at a point. The Hessian is stored as a packed upper triangle, so symmetry
/// holds by construction rather than by tolerance.
///
/// Seed chart coordinates with `variable`, constants with `constant`, then
/// evaluate any composite expression with the overloaded arithmetic; the
/// product and chain rules propagate both derivative orders.
class Jet2 {
public:
    Jet2() = default;

    static Jet2 constant(int dim, double v) {
        Jet2 j;
        j.dim_ = dim;
        j.v_ = v;
        j.g_.fill(0.0);
        j.h_.fill(0.0);
        return j;
    }

    static Jet2 variable(int dim, int index, double v) {
        assert(index >= 0 && index < dim);
        Jet2 j = constant(dim, v);
        j.g_[static_cast<size_t>(index)] = 1.0;
        return j;
    }

    int dim() const { return dim_; }
    double value() const { return v_; }
    double grad(int i) const { return g_[static_cast<size_t>(i)]; }
    double hess(int i, int j) const {
        if (i > j) std::swap(i, j);
        return h_[static_cast<size_t>(packed_index(i, j, dim_))];
    }

    double& value_ref() { return v_; }
    double& grad_ref(int i) { return g_[static_cast<size_t>(i)]; }
    double& hess_packed(int k) { return h_[static_cast<size_t>(k)]; }
    double hess_packed(int k) const { return h_[static_cast<size_t>(k)]; }

    /// First-order truncation: keeps value and gradient, marks the Hessian as
    /// unavailable. Any computation that would illegitimately consume third
    /// derivatives of the underlying field surfaces as NaN instead of a
    /// silently wrong number.
    Jet2 without_hessian() const {
        Jet2 j = *this;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        for (int k = 0; k < packed_count(dim_); ++k) j.h_[static_cast<size_t>(k)] = nan;
        return j;
    }

    Jet2 operator-() const {
        Jet2 r = *this;
        r.v_ = -r.v_;
        for (int i = 0; i < dim_; ++i) r.g_[static_cast<size_t>(i)] = -r.g_[static_cast<size_t>(i)];
        for (int k = 0; k < packed_count(dim_); ++k) r.h_[static_cast<size_t>(k)] = -r.h_[static_cast<size_t>(k)];
        return r;
    }

    Jet2& operator+=(const Jet2& b) {
        assert(dim_ == b.dim_);
        v_ += b.v_;
        for (int i = 0; i < dim_; ++i) g_[static_cast<size_t>(i)] += b.g_[static_cast<size_t>(i)];
        for (int k = 0; k < packed_count(dim_); ++k) h_[static_cast<size_t>(k)] += b.h_[static_cast<size_t>(k)];
        return *this;
    }
    Jet2& operator-=(const Jet2& b) {
        assert(dim_ == b.dim_);
        v_ -= b.v_;
        for (int i = 0; i < dim_; ++i) g_[static_cast<size_t>(i)] -= b.g_[static_cast<size_t>(i)];
        for (int k = 0; k < packed_count(dim_); ++k) h_[static_cast<size_t>(k)] -= b.h_[static_cast<size_t>(k)];
        return *this;
    }
    Jet2& operator+=(double c) { v_ += c; return *this; }
    Jet2& operator-=(double c) { v_ -= c; return *this; }
    Jet2& operator*=(double c) {
        v_ *= c;
        for (int i = 0; i < dim_; ++i) g_[static_cast<size_t>(i)] *= c;
        for (int k = 0; k < packed_count(dim_); ++k) h_[static_cast<size_t>(k)] *= c;
        return *this;
    }
    Jet2& operator/=(double c) { return (*this) *= (1.0 / c); }

    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator+(Jet2 a, double c) { return a += c; }
    friend Jet2 operator+(double c, Jet2 a) { return a += c; }
    friend Jet2 operator-(Jet2 a, double c) { return a -= c; }
    friend Jet2 operator-(double c, const Jet2& a) { return (-a) += c; }
    friend Jet2 operator*(Jet2 a, double c) { return a *= c; }
    friend Jet2 operator*(double c, Jet2 a) { return a *= c; }
    friend Jet2 operator/(Jet2 a, double c) { return a /= c; }

    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        assert(a.dim_ == b.dim_);
        const int dim = a.dim_;
        Jet2 r;
        r.dim_ = dim;
        r.v_ = a.v_ * b.v_;
        for (int i = 0; i < dim; ++i)
            r.g_[static_cast<size_t>(i)] = a.v_ * b.g_[static_cast<size_t>(i)] + b.v_ * a.g_[static_cast<size_t>(i)];
        int k = 0;
        for (int i = 0; i < dim; ++i) {
            for (int j = i; j < dim; ++j, ++k) {
                r.h_[static_cast<size_t>(k)] =
                    a.v_ * b.h_[static_cast<size_t>(k)] + b.v_ * a.h_[static_cast<size_t>(k)] +
                    a.g_[static_cast<size_t>(i)] * b.g_[static_cast<size_t>(j)] +
                    a.g_[static_cast<size_t>(j)] * b.g_[static_cast<size_t>(i)];
            }
        }
        return r;
    }

    friend Jet2 operator/(const Jet2& a, const Jet2& b);
    friend Jet2 operator/(double c, const Jet2& b);

    friend std::ostream& operator<<(std::ostream& os, const Jet2& j) {
        os << "jet(" << j.v_ << "; [";
        for (int i = 0; i < j.dim_; ++i) os << (i ? "," : "") << j.g_[static_cast<size_t>(i)];
        return os << "])";
    }

private:
    int dim_ = 0;
    double v_ = 0.0;
    std::array<double, kMaxDim> g_{};
    std::array<double, kMaxPacked> h_{};

    friend Jet2 chain(const Jet2&, double, double, double);
};

/// phi(f) given phi's value and first two derivatives at f.value().
inline Jet2 chain(const Jet2& f, double phi, double dphi, double d2phi) {
    const int dim = f.dim_;
    Jet2 r;
    r.dim_ = dim;
    r.v_ = phi;
    for (int i = 0; i < dim; ++i) r.g_[static_cast<size_t>(i)] = dphi * f.g_[static_cast<size_t>(i)];
    int k = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j, ++k)
            r.h_[static_cast<size_t>(k)] = dphi * f.h_[static_cast<size_t>(k)] +
                                           d2phi * f.g_[static_cast<size_t>(i)] * f.g_[static_cast<size_t>(j)];
    return r;
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) {
    const double iv = 1.0 / b.value();
    return a * chain(b, iv, -iv * iv, 2.0 * iv * iv * iv);
}

inline Jet2 operator/(double c, const Jet2& b) {
    const double iv = 1.0 / b.value();
    return chain(b, c * iv, -c * iv * iv, 2.0 * c * iv * iv * iv);
}

inline Jet2 sqrt(const Jet2& f) {
    const double s = std::sqrt(f.value());
    return chain(f, s, 0.5 / s, -0.25 / (s * f.value()));
}

inline Jet2 exp(const Jet2& f) {
    const double e = std::exp(f.value());
    return chain(f, e, e, e);
}

inline Jet2 log(const Jet2& f) {
    const double v = f.value();
    return chain(f, std::log(v), 1.0 / v, -1.0 / (v * v));
}

inline Jet2 sin(const Jet2& f) {
    const double s = std::sin(f.value()), c = std::cos(f.value());
    return chain(f, s, c, -s);
}

inline Jet2 cos(const Jet2& f) {
    const double s = std::sin(f.value()), c = std::cos(f.value());
    return chain(f, c, -s, -c);
}

/// d/dx_k of a jet, as a jet one order lower: the value is the k-th gradient
/// entry, the gradient is the k-th Hessian row, and the Hessian is poisoned
/// (see Jet2::without_hessian).
inline Jet2 partial(const Jet2& f, int k) {
    const int dim = f.dim();
    Jet2 r = Jet2::constant(dim, f.grad(k));
    for (int i = 0; i < dim; ++i) r.grad_ref(i) = f.hess(k, i);
    return r.without_hessian();
}

} // namespace lckv
