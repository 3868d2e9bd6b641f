#include "specenv/kernel_operator.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>

namespace specenv {

CVector KernelOperator::apply(const CVector& x) const {
  if (x.size() != grid.size()) {
    throw config_error("operator/vector size mismatch");
  }
  switch (kind) {
    case OperatorKind::integral:
      return grid.spacing() * (matrix * x);
    case OperatorKind::pointwise: {
      if (reflect_v.size() > 0) {
        const int n = grid.size();
        CVector y = CVector::Zero(n);
        for (int k = 1; k < n; ++k) y[k] = reflect_v[k] * x[n - k];
        return y;
      }
      return matrix * x;
    }
    case OperatorKind::multiplier: {
      GridFunction g(grid, x);
      FreqGridFunction G = dft_forward(g);
      G.values.array() *= multiplier.array();
      return dft_inverse(G).values;
    }
  }
  throw config_error("unknown operator kind");
}

GridFunction KernelOperator::apply(const GridFunction& x) const {
  if (!(x.grid == grid)) throw config_error("operator/function grid mismatch");
  return GridFunction(grid, apply(x.values));
}

double KernelOperator::hs_norm() const {
  switch (kind) {
    case OperatorKind::integral:
      return grid.spacing() * matrix.norm();
    case OperatorKind::pointwise:
      if (reflect_v.size() > 0) {
        // plain-action Frobenius norm: row 0 is zeroed
        double s = 0.0;
        for (int k = 1; k < grid.size(); ++k) s += std::norm(reflect_v[k]);
        return std::sqrt(s);
      }
      return matrix.norm();
    case OperatorKind::multiplier:
      return multiplier.norm();
  }
  throw config_error("unknown operator kind");
}

CMatrix KernelOperator::dense() const {
  const int n = grid.size();
  switch (kind) {
    case OperatorKind::integral:
      return grid.spacing() * matrix;
    case OperatorKind::pointwise: {
      if (reflect_v.size() > 0) {
        CMatrix m = CMatrix::Zero(n, n);
        for (int k = 1; k < n; ++k) m(k, n - k) = reflect_v[k];
        return m;
      }
      return matrix;
    }
    case OperatorKind::multiplier: {
      CMatrix m(n, n);
      for (int col = 0; col < n; ++col) {
        CVector e = CVector::Zero(n);
        e[col] = 1.0;
        m.col(col) = apply(e);
      }
      return m;
    }
  }
  throw config_error("unknown operator kind");
}

KernelOperator reflection_operator(const GridFunction& v) {
  KernelOperator op;
  op.kind = OperatorKind::pointwise;
  op.grid = v.grid;
  op.reflect_v = v.values;
  op.reflect_v[0] = 0.0;
  return op;
}

namespace {

// v at the half-grid points q * dt/2, q = -(N-1) .. N-1: exact node values
// for even q, midpoint interpolation for odd q.
CVector half_grid_values(const GridFunction& v) {
  const int n = v.grid.size();
  CVector half(2 * n - 1);  // index q + (N-1)
  for (int q = -(n - 1); q <= n - 1; ++q) {
    Complex val;
    if (q % 2 == 0) {
      val = v.values[n / 2 + q / 2];
    } else {
      const int lo = n / 2 + (q - 1) / 2;
      const Complex left = v.values[lo];
      const Complex right = (lo + 1 < n) ? v.values[lo + 1] : Complex(0.0);
      val = 0.5 * (left + right);
    }
    half[q + n - 1] = val;
  }
  return half;
}

}  // namespace

KernelOperator smoothed_kernel(const TimeKernel& h, const GridFunction& v) {
  const Grid& g = v.grid;
  const int n = g.size();
  const double dt = g.spacing();

  // h((t_j + t_k)/2) depends only on p = j + k; v((t_j - t_k)/2) only on
  // q = j - k. Precomputing both keeps the assembly at O(N) kernel
  // evaluations.
  CVector h_mid(2 * n - 1);
  for (int p = 0; p <= 2 * n - 2; ++p) {
    h_mid[p] = h(-g.half_width + 0.5 * p * dt);
  }
  const CVector v_half = half_grid_values(v);

  KernelOperator op;
  op.kind = OperatorKind::integral;
  op.grid = g;
  op.matrix.resize(n, n);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      op.matrix(j, k) = 0.5 * h_mid[j + k] * v_half[(j - k) + n - 1];
    }
  }
  return op;
}

KernelOperator sandwich_kernel(const TimeKernel& h, const GridFunction& v) {
  const Grid& g = v.grid;
  const int n = g.size();
  const double dt = g.spacing();

  // h((t_k - t_j)/2) depends only on q = k - j; v(-(t_j + t_k)/2) only on
  // p = j + k, at the reflected half-grid points R - p*dt/2.
  CVector h_diff(2 * n - 1);
  for (int q = -(n - 1); q <= n - 1; ++q) {
    h_diff[q + n - 1] = h(0.5 * q * dt);
  }
  CVector v_refl(2 * n - 1);
  {
    GridFunction vv = v;
    for (int p = 0; p <= 2 * n - 2; ++p) {
      v_refl[p] = interp_value(vv, g.half_width - 0.5 * p * dt);
    }
  }

  KernelOperator op;
  op.kind = OperatorKind::integral;
  op.grid = g;
  op.matrix.resize(n, n);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    const Complex vj = v.values[j];
    for (int k = 0; k < n; ++k) {
      op.matrix(j, k) = 0.5 * vj * h_diff[(k - j) + n - 1] * v_refl[j + k];
    }
  }
  return op;
}

KernelOperator differentiation_operator(const Grid& grid) {
  KernelOperator op;
  op.kind = OperatorKind::multiplier;
  op.grid = grid;
  op.multiplier.resize(grid.size());
  for (int p = 0; p < grid.size(); ++p) op.multiplier[p] = grid.freq_node(p);
  return op;
}

KernelOperator resolvent_operator(Complex z, const Grid& grid) {
  if (std::abs(z.imag()) <= 1e-9) {
    throw config_error("resolvent parameter must stay off the real axis");
  }
  KernelOperator op;
  op.kind = OperatorKind::multiplier;
  op.grid = grid;
  op.multiplier.resize(grid.size());
  for (int p = 0; p < grid.size(); ++p) {
    op.multiplier[p] = 1.0 / (grid.freq_node(p) - z);
  }
  return op;
}

double vr_smallness(const GridFunction& v, double lambda_eps) {
  if (!(lambda_eps > 0.0)) throw config_error("lambda_eps must be positive");
  const Grid& g = v.grid;
  const int n = g.size();
  const double dt = g.spacing();

  // kernel K(s,u) = v(s) f(-s-u) with f(w) = i exp(-lambda w) for w > 0;
  // the jump at w = 0 carries the L2-midpoint value (|f|^2 = 1/2) so the
  // Hilbert-Schmidt sum is the trapezoid rule across the discontinuity.
  // -t_j - t_k = (N - j - k) * dt, so |f|^2 depends only on p = j + k.
  std::vector<double> fsq(2 * n - 1);
  for (int p = 0; p <= 2 * n - 2; ++p) {
    const double w = (n - p) * dt;
    if (w > 0.0) {
      fsq[p] = std::exp(-2.0 * lambda_eps * w);
    } else if (w == 0.0) {
      fsq[p] = 0.5;
    } else {
      fsq[p] = 0.0;
    }
  }
  // row sums via prefix sums: sum_k fsq[j+k] = P[j+n] - P[j]
  std::vector<double> prefix(2 * n, 0.0);
  for (int p = 0; p < 2 * n - 1; ++p) prefix[p + 1] = prefix[p] + fsq[p];
  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    total += std::norm(v.values[j]) * (prefix[j + n] - prefix[j]);
  }
  return dt * std::sqrt(total);
}

double w12_norm(const GridFunction& x) {
  return norm_l2(x) + norm_l2(spectral_derivative_operator_apply(x));
}

}  // namespace specenv
