#pragma once

#include <vector>

#include "specenv/grid.hpp"

namespace specenv {

enum class SymbolFamily { trapezoid, omega, triangle, generalized_trapezoid };

/// One piece of a piecewise-rational symbol on [lo, hi):
/// value(xi) = c0 + c1*xi + c_recip/xi.
struct SymbolSegment {
  double lo;
  double hi;
  double c0 = 0.0;
  double c1 = 0.0;
  double c_recip = 0.0;

  double value(double xi) const {
    double v = c0 + c1 * xi;
    if (c_recip != 0.0) v += c_recip / xi;
    return v;
  }
  double derivative(double xi) const {
    double v = c1;
    if (c_recip != 0.0) v -= c_recip / (xi * xi);
    return v;
  }
};

struct ExactNorms {
  double l2 = 0.0;
  double l2_deriv = 0.0;
};

/// Exact piecewise description of one of the window symbols. Segments
/// cover all of R; the first and last segment are unbounded.
class PiecewiseSymbol {
public:
  static PiecewiseSymbol trapezoid(double a);
  static PiecewiseSymbol omega(double a);
  static PiecewiseSymbol triangle(double a);
  static PiecewiseSymbol generalized_trapezoid(double a, double n);

  double operator()(double xi) const;
  double derivative(double xi) const;

  /// Closed-form L2 norms of the symbol and its derivative.
  ExactNorms exact_norms() const;

  SymbolFamily family() const { return family_; }
  double a() const { return a_; }
  double n() const { return n_; }
  int parity() const { return parity_; }  // +1 even, -1 odd
  const std::vector<SymbolSegment>& segments() const { return segments_; }

  /// Support radius: the symbol vanishes for |xi| >= value (infinity for
  /// the omega family whose 1/xi tail never dies).
  double support_radius() const;

private:
  PiecewiseSymbol(SymbolFamily fam, double a, double n, int parity,
                  std::vector<SymbolSegment> segs);

  SymbolFamily family_;
  double a_;
  double n_;
  int parity_;
  std::vector<SymbolSegment> segments_;
};

/// Quadrature L2 norms of a symbol and of its derivative, integrating each
/// segment separately (kinks sit on segment boundaries) and truncating
/// unbounded reciprocal tails at a large cutoff.
double symbol_quad_norm_l2(const PiecewiseSymbol& s);
double symbol_quad_norm_l2_deriv(const PiecewiseSymbol& s);

/// Time-domain windows: phi_a = F^{-1}(trapezoid), psi_a = F^{-1}(omega),
/// gamma_a = F^{-1}(triangle), phi_{a,n} = F^{-1}(generalized trapezoid).
double phi_time(double a, double t);
Complex psi_time(double a, double t);
double gamma_time(double a, double t);
double gen_phi_time(double a, double n, double t);

/// Si(x) = int_0^x sin(u)/u du, absolute error below 1e-12.
double sine_integral(double x);

/// psi_a for kernel assembly: identical to psi_time away from the jump,
/// but t = 0 carries the one-sided limit i/2 (|psi| is continuous there),
/// so Hilbert-Schmidt sums across the discontinuity stay trapezoidal.
Complex psi_kernel_value(double a, double t);

/// Time-domain transform of a symbol evaluated at t (closed forms).
Complex symbol_time_value(const PiecewiseSymbol& s, double t);

/// Maximum defect of xi * omega_a(xi) - (1 - tau_a(xi)) over num_points
/// sample points spanning [-4a, 4a], evaluated in exact rational
/// arithmetic on the segment coefficients. Requires a to be a dyadic
/// rational so the coefficients are exactly representable.
double symbol_identity_max_defect(double a, long long num_points);

}  // namespace specenv
