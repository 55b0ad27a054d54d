#pragma once

#include <functional>
#include <span>
#include <utility>

#include "lckv/chart.hpp"
#include "lckv/errors.hpp"
#include "lckv/jet.hpp"
#include "lckv/tensor.hpp"

namespace lckv {

enum class Engine { ad, fd };

inline const char* engine_name(Engine e) { return e == Engine::ad ? "ad" : "fd"; }

/// How jets are produced at evaluation points. `ad` seeds the coordinates as
/// jet variables and lets the arithmetic carry exact derivatives; `fd`
/// assembles value, gradient and Hessian from central differences of the
/// component functions (gradients 4th order, Hessians 2nd order), with the
/// step scaled by max(1, r).
struct EvalParams {
    Engine engine = Engine::ad;
    double fd_step = 1e-4;
};

namespace detail {

template <class Out>
struct ComponentAccess {
    static int count(const Out& o) { return o.size(); }
    static Jet2& at(Out& o, int k) { return o.data()[k]; }
    static const Jet2& at(const Out& o, int k) { return o.data()[k]; }
};

template <>
struct ComponentAccess<Jet2> {
    static int count(const Jet2&) { return 1; }
    static Jet2& at(Jet2& o, int) { return o; }
    static const Jet2& at(const Jet2& o, int) { return o; }
};

} // namespace detail

/// A tensor field over a chart: a component map evaluable as order-2 jets.
/// `Out` is the component container (Jet2, JVec, JMat, JForm2, JForm3).
/// Evaluation is a pure function of (field, point, params).
template <class Out>
class Field {
public:
    using Fn = std::function<Out(std::span<const Jet2>)>;

    Field() = default;
    Field(int dim, Fn fn, int jet_order = 2)
        : dim_(dim), jet_order_(jet_order), fn_(std::move(fn)) {}

    int dim() const { return dim_; }

    /// Highest derivative order of the components that is exact. Fields built
    /// by differentiating another field lose one order.
    int jet_order() const { return jet_order_; }

    bool valid() const { return static_cast<bool>(fn_); }

    /// Apply the component map to already-seeded coordinates. Composition
    /// entry point: fields built from other fields call through here so the
    /// engine choice of the outermost evaluation applies uniformly.
    Out call(std::span<const Jet2> coords) const { return fn_(coords); }

    Out eval(const ChartPoint& p, const EvalParams& params = {}) const {
        return params.engine == Engine::ad ? eval_ad(p) : eval_fd(p, params.fd_step);
    }

    /// Component values only. Primitive fields (jet_order 2) evaluate with
    /// dimension-0 jets, which skips all derivative arithmetic; derived
    /// fields consume derivatives of their inputs even for plain values, so
    /// they seed full jets.
    Out eval_value(const ChartPoint& p) const {
        if (jet_order_ < 2) return eval_ad(p);
        std::array<Jet2, kMaxDim> coords;
        for (int i = 0; i < dim_; ++i) coords[static_cast<size_t>(i)] = Jet2::constant(0, p[i]);
        return fn_(std::span<const Jet2>(coords.data(), static_cast<size_t>(dim_)));
    }

    Out eval_ad(const ChartPoint& p) const {
        std::array<Jet2, kMaxDim> coords;
        for (int i = 0; i < dim_; ++i) coords[static_cast<size_t>(i)] = Jet2::variable(dim_, i, p[i]);
        return fn_(std::span<const Jet2>(coords.data(), static_cast<size_t>(dim_)));
    }

    Out eval_fd(const ChartPoint& p, double base_step) const {
        using Access = detail::ComponentAccess<Out>;
        const double h = base_step * std::max(1.0, p.radius());

        Out center = eval_value(p);
        const int nc = Access::count(center);

        Out out = center;
        for (int k = 0; k < nc; ++k) {
            Jet2 j = Jet2::constant(dim_, Access::at(center, k).value());
            Access::at(out, k) = j;
        }

        // axis stencils: f(p +/- h e_i), f(p +/- 2h e_i)
        for (int i = 0; i < dim_; ++i) {
            const Out fp1 = eval_value(p.shifted(i, h));
            const Out fm1 = eval_value(p.shifted(i, -h));
            const Out fp2 = eval_value(p.shifted(i, 2.0 * h));
            const Out fm2 = eval_value(p.shifted(i, -2.0 * h));
            for (int k = 0; k < nc; ++k) {
                const double vp1 = Access::at(fp1, k).value();
                const double vm1 = Access::at(fm1, k).value();
                const double vp2 = Access::at(fp2, k).value();
                const double vm2 = Access::at(fm2, k).value();
                const double v0 = Access::at(center, k).value();
                Jet2& j = Access::at(out, k);
                j.grad_ref(i) = (-vp2 + 8.0 * vp1 - 8.0 * vm1 + vm2) / (12.0 * h);
                j.hess_packed(packed_index(i, i, dim_)) = (vp1 - 2.0 * v0 + vm1) / (h * h);
            }
        }

        // cross terms
        for (int i = 0; i < dim_; ++i) {
            for (int j2 = i + 1; j2 < dim_; ++j2) {
                const Out fpp = eval_value(p.shifted(i, h).shifted(j2, h));
                const Out fpm = eval_value(p.shifted(i, h).shifted(j2, -h));
                const Out fmp = eval_value(p.shifted(i, -h).shifted(j2, h));
                const Out fmm = eval_value(p.shifted(i, -h).shifted(j2, -h));
                for (int k = 0; k < nc; ++k) {
                    const double d = (Access::at(fpp, k).value() - Access::at(fpm, k).value() -
                                      Access::at(fmp, k).value() + Access::at(fmm, k).value()) /
                                     (4.0 * h * h);
                    Access::at(out, k).hess_packed(packed_index(i, j2, dim_)) = d;
                }
            }
        }
        return out;
    }

private:
    int dim_ = 0;
    int jet_order_ = 2;
    Fn fn_;
};

using ScalarField = Field<Jet2>;
using OneFormField = Field<JVec>;
using VectorField = Field<JVec>;
using MetricField = Field<JMat>;
using EndoField = Field<JMat>;
using ComplexStructureField = Field<JMat>;
using TwoFormField = Field<JForm2>;
using ThreeFormField = Field<JForm3>;

/// Guard for punctured charts: fields on R^2n \ {0} reject r = 0.
inline void require_punctured(std::span<const Jet2> coords) {
    double r2 = 0.0;
    for (const Jet2& c : coords) r2 += c.value() * c.value();
    if (!(r2 > 1e-24)) throw DomainViolation("evaluation at r = 0 is outside the chart");
}

} // namespace lckv
