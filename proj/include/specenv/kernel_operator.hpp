#pragma once

#include "specenv/fourier.hpp"

namespace specenv {

enum class OperatorKind { integral, pointwise, multiplier };

/// Time-domain kernel evaluator h(t), analytic (phi_a, psi_a, gamma_a or
/// user supplied closed forms).
using TimeKernel = std::function<Complex(double)>;

/// Dense operator on grid functions. The action depends on the kind:
///   integral   y = dt * (matrix * x)   (matrix holds kernel samples)
///   pointwise  y = matrix * x          (plain matrix action)
///   multiplier y = idft(diag(m) dft x) (m stored on frequency nodes)
/// A reflection operator stores only v and applies matrix-free.
class KernelOperator {
public:
  OperatorKind kind = OperatorKind::integral;
  Grid grid;
  CMatrix matrix;        // integral / pointwise storage
  CVector multiplier;    // multiplier storage
  CVector reflect_v;     // reflection storage (pointwise kind)

  CVector apply(const CVector& x) const;
  GridFunction apply(const GridFunction& x) const;

  /// Hilbert-Schmidt norm of the discretized operator: dt * |K|_F for
  /// integral kernels, |C|_F for plain-action matrices.
  double hs_norm() const;

  /// Materialize the plain-action matrix (integral kernels scaled by dt).
  CMatrix dense() const;
};

/// (V x)(t) = v(t) x(-t); the -R node, whose reflection is off the grid,
/// maps to zero.
KernelOperator reflection_operator(const GridFunction& v);

/// Kernel of the smoothed perturbation: k(s,u) = h((s+u)/2) v((s-u)/2) / 2.
/// h is evaluated analytically at the half-grid midpoints, v by linear
/// interpolation.
KernelOperator smoothed_kernel(const TimeKernel& h, const GridFunction& v);

/// Kernel of the sandwiched perturbation:
/// k(s,u) = v(s) h((u-s)/2) v(-(s+u)/2) / 2.
KernelOperator sandwich_kernel(const TimeKernel& h, const GridFunction& v);

/// A = -i d/dt as the Fourier multiplier xi.
KernelOperator differentiation_operator(const Grid& grid);

/// Resolvent of A as the Fourier multiplier 1/(xi - z); requires z off the
/// real axis. With this sign convention (A - z) R = I on band-limited input.
KernelOperator resolvent_operator(Complex z, const Grid& grid);

/// Hilbert-Schmidt norm of V R(i lambda_eps; A), computed from the closed
/// form of the composed kernel v(s) f(-s-u) with f the one-sided
/// exponential; matches |v|_2 / sqrt(2 lambda_eps) on fine grids.
double vr_smallness(const GridFunction& v, double lambda_eps);

/// Discrete W^{1,2} norm |x|_2 + |Ax|_2 (the graph norm of A).
double w12_norm(const GridFunction& x);

}  // namespace specenv
