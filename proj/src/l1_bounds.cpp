#include "specenv/l1_bounds.hpp"

#include <cmath>

namespace specenv {

FreqGridFunction freq_derivative(const FreqGridFunction& F) {
  const int n = F.grid.size();
  const double h = F.grid.freq_spacing();
  CVector d(n);
  for (int p = 1; p + 1 < n; ++p) {
    d[p] = (F.values[p + 1] - F.values[p - 1]) / (2.0 * h);
  }
  d[0] = (-3.0 * F.values[0] + 4.0 * F.values[1] - F.values[2]) / (2.0 * h);
  d[n - 1] =
      (3.0 * F.values[n - 1] - 4.0 * F.values[n - 2] + F.values[n - 3]) /
      (2.0 * h);
  return FreqGridFunction(F.grid, std::move(d));
}

L1Bound l1_bound(const FreqGridFunction& fhat) {
  L1Bound out;
  out.l2_hat = norm_l2(fhat);
  if (!(out.l2_hat > 0.0)) {
    throw config_error("l1_bound: zero input, optimal parameter undefined");
  }
  out.l2_hat_deriv = norm_l2(freq_derivative(fhat));
  if (!(out.l2_hat_deriv > 0.0)) {
    throw config_error("l1_bound: derivative vanishes, bound undefined");
  }
  out.bound = std::sqrt(2.0 * out.l2_hat * out.l2_hat_deriv);
  out.a_opt = out.l2_hat_deriv / out.l2_hat;
  return out;
}

double l1_split_bound(const L1Bound& b, double a) {
  if (!(a > 0.0)) throw config_error("split bound needs a > 0");
  return (std::sqrt(a) * b.l2_hat + b.l2_hat_deriv / std::sqrt(a)) /
         std::sqrt(2.0);
}

L1Check l1_bound_check(const GridFunction& f) {
  const int n = f.grid.size();
  if (n < 4) throw config_error("grid too small");
  const double edge =
      std::max(std::abs(f.values[0]), std::abs(f.values[n - 1]));
  if (!(norm_inf(f) > 0.0)) {
    throw config_error("l1_bound_check: zero input");
  }
  if (edge > 1e-8) {
    throw numerical_error(
        "l1_bound_check: input does not decay below 1e-8 at the grid edges; "
        "enlarge the grid for a trustworthy quadrature");
  }
  L1Check out;
  out.detail = l1_bound(dft_forward(f));
  out.l1 = norm_l1(f);
  out.bound = out.detail.bound;
  out.holds = out.l1 * out.l1 <=
              2.0 * out.detail.l2_hat * out.detail.l2_hat_deriv * (1.0 + 1e-6);
  return out;
}

}  // namespace specenv
