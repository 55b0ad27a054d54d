#pragma once

#include "lckv/lck.hpp"

namespace lckv {

/// Pointwise residuals of the lcK identity suite. Every residual is a
/// coordinate-frame-independent number built from g-norms of tensors at the
/// point; the identities hold iff the residual vanishes.
namespace residual {

// ||d(omega) - theta ^ omega|| + ||d(theta)||
double lck(const PointGeometry& geo);

// nabla_X J = 1/2 (X ^ J theta + JX ^ theta) over the coordinate basis,
// including the corollary nabla_T J = 0.
double naj(const PointGeometry& geo);

// sum_i (nabla_{e_i} J)(e_i) = (n-1) JT   and
// sum_i (nabla_{J e_i} J)(e_i) = -(n-1) T   (frame-free contractions).
double cgnt(const PointGeometry& geo);

// L_T g = 2 S
double doi(const PointGeometry& geo);

// L_T omega = 2 omega(F., .)
double e3(const PointGeometry& geo);

// d(J theta) = 2 omega(F., .) - |theta|^2 omega + theta ^ J theta
double e4(const PointGeometry& geo);

// L_T (J theta) = J d|theta|^2
double lie_jtheta(const PointGeometry& geo);

// d J d|theta|^2 = 4 omega(F^2.,.) + 2 omega(L_T F.,.) - T(|theta|^2) omega
//                  - 2|theta|^2 omega(F.,.) + d|theta|^2 ^ J theta
//                  + theta ^ J d|theta|^2
double djd(const PointGeometry& geo);

// Tr_omega(omega(A., .)) = Tr A for A in {F, F^2, J}
double tr_i(const PointGeometry& geo);

// Tr_omega(alpha ^ beta) = 2 g(J alpha, beta) for (theta, J theta) and
// (theta, d|theta|^2)
double tr_ii(const PointGeometry& geo);

// Tr_omega(d J d h) = -2 Delta h + 2(1-n) T(h) for h in {|theta|^2, ln r}
double tr_iii(const PointGeometry& geo);

// Delta|theta|^2 + T(|theta|^2) + |theta|^2 delta(theta)
//   + 2|nabla theta|^2 - T(delta theta) = 0
double cinci(const PointGeometry& geo);

// Tr F = -delta(theta) and Tr F^2 = |nabla theta|^2
double tr_f(const PointGeometry& geo);

// omega = theta ^ J theta - d J theta  (potential / parallel-Lee identity)
double potential(const PointGeometry& geo);

// d(omega) = (1+f) theta_base ^ omega on deformed models
double deform_lck(const PointGeometry& geo);

// g(T, T) = 1 + f on deformed models
double norm_lee(const PointGeometry& geo);

// max(||L_T J||, ||FJ - JF||)
double holomorphic_lee(const PointGeometry& geo);

// ||L_T g||
double killing_lee(const PointGeometry& geo);

// ||L_{JT} g||
double killing_antilee(const PointGeometry& geo);

// ||nabla theta||
double vaisman(const PointGeometry& geo);

// |delta theta|
double gauduchon(const PointGeometry& geo);

} // namespace residual
} // namespace lckv
