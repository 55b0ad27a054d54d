#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <initializer_list>

#include "lckv/jet.hpp"

namespace lckv {

/// A point of a real 2n-dimensional chart. Coordinates are interleaved
/// (x_1, y_1, x_2, y_2, ...) so the standard complex structure maps
/// d/dx_k -> d/dy_k.
struct ChartPoint {
    int dim = 0;
    std::array<double, kMaxDim> x{};

    ChartPoint() = default;
    ChartPoint(std::initializer_list<double> coords) {
        assert(static_cast<int>(coords.size()) <= kMaxDim);
        dim = static_cast<int>(coords.size());
        int i = 0;
        for (double c : coords) x[static_cast<size_t>(i++)] = c;
    }

    double operator[](int i) const { return x[static_cast<size_t>(i)]; }
    double& operator[](int i) { return x[static_cast<size_t>(i)]; }

    double radius2() const {
        double s = 0.0;
        for (int i = 0; i < dim; ++i) s += x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
        return s;
    }
    double radius() const { return std::sqrt(radius2()); }

    ChartPoint scaled(double c) const {
        ChartPoint q = *this;
        for (int i = 0; i < dim; ++i) q.x[static_cast<size_t>(i)] *= c;
        return q;
    }

    ChartPoint shifted(int axis, double delta) const {
        ChartPoint q = *this;
        q.x[static_cast<size_t>(axis)] += delta;
        return q;
    }
};

} // namespace lckv
