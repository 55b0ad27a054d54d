#pragma once

#include <array>
#include <cassert>
#include <utility>

#include "lckv/jet.hpp"

namespace lckv {

inline constexpr int kMaxForm2 = kMaxDim * (kMaxDim - 1) / 2;
inline constexpr int kMaxForm3 = kMaxDim * (kMaxDim - 1) * (kMaxDim - 2) / 6;

template <class T>
struct VecT {
    int dim = 0;
    std::array<T, kMaxDim> c{};

    VecT() = default;
    explicit VecT(int d) : dim(d) {}

    T& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const T& operator[](int i) const { return c[static_cast<size_t>(i)]; }

    T* data() { return c.data(); }
    const T* data() const { return c.data(); }
    int size() const { return dim; }
};

template <class T>
struct MatT {
    int dim = 0;
    std::array<T, kMaxDim * kMaxDim> c{};

    MatT() = default;
    explicit MatT(int d) : dim(d) {}

    T& at(int i, int j) { return c[static_cast<size_t>(i * dim + j)]; }
    const T& at(int i, int j) const { return c[static_cast<size_t>(i * dim + j)]; }

    T* data() { return c.data(); }
    const T* data() const { return c.data(); }
    int size() const { return dim * dim; }
};

/// 2-form components in canonical ordered-index storage (i < j); access by
/// arbitrary index pair expands the sign, so antisymmetry is exact.
template <class T>
struct Form2T {
    int dim = 0;
    std::array<T, kMaxForm2> c{};

    Form2T() = default;
    explicit Form2T(int d) : dim(d) {}

    static int pack(int i, int j, int dim) {
        // i < j
        return i * dim - i * (i + 1) / 2 + (j - i - 1);
    }
    int count() const { return dim * (dim - 1) / 2; }

    T& ordered(int i, int j) {
        assert(i < j);
        return c[static_cast<size_t>(pack(i, j, dim))];
    }
    const T& ordered(int i, int j) const {
        assert(i < j);
        return c[static_cast<size_t>(pack(i, j, dim))];
    }

    T value(int i, int j) const {
        if (i == j) return count() > 0 ? c[0] * 0.0 : T{};  // zero of matching shape
        if (i < j) return c[static_cast<size_t>(pack(i, j, dim))];
        return -c[static_cast<size_t>(pack(j, i, dim))];
    }

    T* data() { return c.data(); }
    const T* data() const { return c.data(); }
    int size() const { return count(); }
};

/// 3-form components in canonical ordered-index storage (i < j < k).
template <class T>
struct Form3T {
    int dim = 0;
    std::array<T, kMaxForm3> c{};

    Form3T() = default;
    explicit Form3T(int d) : dim(d) {}

    static int pack(int i, int j, int k, int dim) {
        // i < j < k; rank of the combination in lexicographic order
        auto c2 = [](int m) { return m * (m - 1) / 2; };
        auto c3 = [](int m) { return m * (m - 1) * (m - 2) / 6; };
        return c3(dim) - c3(dim - i) + c2(dim - i - 1) - c2(dim - j) + (k - j - 1);
    }
    int count() const { return dim * (dim - 1) * (dim - 2) / 6; }

    T& ordered(int i, int j, int k) {
        assert(i < j && j < k);
        return c[static_cast<size_t>(pack(i, j, k, dim))];
    }
    const T& ordered(int i, int j, int k) const {
        assert(i < j && j < k);
        return c[static_cast<size_t>(pack(i, j, k, dim))];
    }

    T value(int i, int j, int k) const {
        if (i == j || j == k || i == k) return count() > 0 ? c[0] * 0.0 : T{};
        // sort (i,j,k) tracking parity
        int sign = 1;
        if (i > j) { std::swap(i, j); sign = -sign; }
        if (j > k) { std::swap(j, k); sign = -sign; }
        if (i > j) { std::swap(i, j); sign = -sign; }
        const T& v = c[static_cast<size_t>(pack(i, j, k, dim))];
        return sign > 0 ? v : -v;
    }

    T* data() { return c.data(); }
    const T* data() const { return c.data(); }
    int size() const { return count(); }
};

using DVec = VecT<double>;
using DMat = MatT<double>;
using DForm2 = Form2T<double>;
using DForm3 = Form3T<double>;

using JVec = VecT<Jet2>;
using JMat = MatT<Jet2>;
using JForm2 = Form2T<Jet2>;
using JForm3 = Form3T<Jet2>;

template <class T>
VecT<double> values_of(const VecT<T>& v) {
    VecT<double> r(v.dim);
    for (int i = 0; i < v.dim; ++i) r[i] = v[i].value();
    return r;
}
template <class T>
MatT<double> values_of(const MatT<T>& m) {
    MatT<double> r(m.dim);
    for (int i = 0; i < m.size(); ++i) r.data()[i] = m.data()[i].value();
    return r;
}
template <class T>
Form2T<double> values_of(const Form2T<T>& f) {
    Form2T<double> r(f.dim);
    for (int i = 0; i < f.size(); ++i) r.data()[i] = f.data()[i].value();
    return r;
}
template <class T>
Form3T<double> values_of(const Form3T<T>& f) {
    Form3T<double> r(f.dim);
    for (int i = 0; i < f.size(); ++i) r.data()[i] = f.data()[i].value();
    return r;
}

} // namespace lckv
