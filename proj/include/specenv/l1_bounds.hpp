#pragma once

#include "specenv/fourier.hpp"

namespace specenv {

struct L1Bound {
  double bound = 0.0;         // sqrt(2 * |fhat|_2 * |fhat'|_2)
  double a_opt = 0.0;         // |fhat'|_2 / |fhat|_2
  double l2_hat = 0.0;
  double l2_hat_deriv = 0.0;
};

/// The L1 estimate |f|_1^2 <= 2 |fhat|_2 |fhat'|_2 evaluated from frequency
/// samples; the derivative is centered second-order finite differences.
L1Bound l1_bound(const FreqGridFunction& fhat);

struct L1Check {
  double l1 = 0.0;
  double bound = 0.0;
  bool holds = false;
  L1Bound detail;
};

/// Computes both sides of the estimate for a time-domain function and
/// reports whether l1^2 <= 2 |fhat|_2 |fhat'|_2 within 1e-6 relative slack.
/// Requires |f| < 1e-8 at the grid edges.
L1Check l1_bound_check(const GridFunction& f);

/// The split bound (1/sqrt(2)) (sqrt(a) |fhat|_2 + |fhat'|_2 / sqrt(a))
/// whose minimizer over a is a_opt.
double l1_split_bound(const L1Bound& b, double a);

/// Finite differences on the frequency grid (centered interior, one-sided
/// second-order ends).
FreqGridFunction freq_derivative(const FreqGridFunction& F);

}  // namespace specenv
