#include "specenv/similarity.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <cmath>

#include "specenv/windows.hpp"

namespace specenv {

double a_star(const GridFunction& v) {
  const double nv = norm_l2(v);
  if (!(nv > 0.0)) throw config_error("a_star: reflection profile vanishes");
  return 4.0 * (1.0 - std::log(2.0)) * nv * nv / M_PI;
}

namespace {

GridFunction standard_test_vector(const Grid& grid) {
  return sample(grid, [](double t) {
    return Complex(std::exp(-t * t / 8.0), 0.0);
  });
}

double residual_from_parts(
    const GridFunction& x, const GridFunction& v,
    const std::function<CVector(const CVector&)>& apply_U,
    const std::function<CVector(const CVector&)>& apply_B) {
  if (!(norm_l2(x) > 0.0)) {
    throw config_error("similarity residual undefined for the zero vector");
  }
  const Grid& g = x.grid;
  const KernelOperator V = reflection_operator(v);
  auto applyA = [&](const CVector& y) {
    return spectral_derivative_operator_apply(GridFunction(g, y)).values;
  };

  const CVector Ux = apply_U(x.values);
  const CVector lhs = applyA(Ux) - V.apply(Ux);
  const CVector w = applyA(x.values) - apply_B(x.values);
  const CVector rhs = apply_U(w);
  const double denom = w12_norm(x);
  return std::sqrt(g.spacing() * (lhs - rhs).squaredNorm()) / denom;
}

}  // namespace

SimilarityReport build_similarity(const GridFunction& v) {
  const Grid& g = v.grid;
  const int n = g.size();
  const double dt = g.spacing();
  const double a = a_star(v);  // rejects v = 0

  const TimeKernel psi = [a](double t) { return psi_kernel_value(a, t); };
  const TimeKernel phi = [a](double t) { return Complex(phi_time(a, t), 0.0); };

  SimilarityReport rep;
  rep.a = a;
  rep.v = v;

  KernelOperator psiV = smoothed_kernel(psi, v);
  rep.hs_psiV = psiV.hs_norm();
  if (!(rep.hs_psiV < 1.0)) {
    throw numerical_error(
        "smoothed reflection has Hilbert-Schmidt norm >= 1; I + T(psi)V "
        "cannot be inverted by this route");
  }

  const CMatrix C_psi = dt * psiV.matrix;
  const CMatrix C_phi = dt * smoothed_kernel(phi, v).matrix;
  const CMatrix C_sand = dt * sandwich_kernel(psi, v).matrix;

  CMatrix U = CMatrix::Identity(n, n) + C_psi;
  Eigen::PartialPivLU<CMatrix> lu(U);
  const CMatrix U_inv = lu.inverse();
  const double cond_proxy = U_inv.norm() * U.norm() / n;
  if (!std::isfinite(cond_proxy)) {
    throw numerical_error("similarity transform is numerically singular");
  }

  const CMatrix B = U_inv * (C_sand + C_phi);
  const CMatrix B_alt = C_phi + U_inv * (C_sand - C_psi * C_phi);
  rep.form_agreement = (B - B_alt).norm();
  rep.u_inv_identity_err = (U_inv * U - CMatrix::Identity(n, n)).norm();
  rep.b_hs = B.norm();

  rep.U.kind = OperatorKind::pointwise;
  rep.U.grid = g;
  rep.U.matrix = std::move(U);
  rep.U_inv.kind = OperatorKind::pointwise;
  rep.U_inv.grid = g;
  rep.U_inv.matrix = U_inv;
  rep.B.kind = OperatorKind::integral;
  rep.B.grid = g;
  rep.B.matrix = B / dt;

  rep.residual = similarity_residual(rep, standard_test_vector(g));
  return rep;
}

double similarity_residual(const SimilarityReport& report,
                           const GridFunction& x) {
  if (!(x.grid == report.v.grid)) {
    throw config_error("test vector grid does not match the report");
  }
  return residual_from_parts(
      x, report.v,
      [&](const CVector& y) { return report.U.apply(y); },
      [&](const CVector& y) { return report.B.apply(y); });
}

double similarity_residual_matfree(const GridFunction& v,
                                   const GridFunction& x) {
  const Grid& g = v.grid;
  const double dt = g.spacing();
  const double a = a_star(v);
  const TimeKernel psi = [a](double t) { return psi_kernel_value(a, t); };
  const TimeKernel phi = [a](double t) { return Complex(phi_time(a, t), 0.0); };

  const KernelOperator psiV = smoothed_kernel(psi, v);
  if (!(psiV.hs_norm() < 1.0)) {
    throw numerical_error("Neumann iteration requires |T(psi)V| < 1");
  }
  const KernelOperator phiV = smoothed_kernel(phi, v);
  const KernelOperator sand = sandwich_kernel(psi, v);

  auto apply_psiV = [&](const CVector& y) -> CVector {
    return dt * (psiV.matrix * y);
  };
  auto apply_U = [&](const CVector& y) -> CVector {
    return y + apply_psiV(y);
  };
  auto solve_U = [&](const CVector& rhs) -> CVector {
    CVector y = rhs;
    const double target = 1e-14 * rhs.norm();
    for (int it = 0; it < 200; ++it) {
      CVector next = rhs - apply_psiV(y);
      const double delta = (next - y).norm();
      y.swap(next);
      if (delta <= target) break;
    }
    return y;
  };
  auto apply_B = [&](const CVector& y) -> CVector {
    return solve_U(dt * (sand.matrix * y) + dt * (phiV.matrix * y));
  };
  return residual_from_parts(x, v, apply_U, apply_B);
}

std::vector<double> tail_sequence(const RVector& A_diag, const CMatrix& B) {
  const int m = static_cast<int>(A_diag.size());
  if (B.rows() != m || B.cols() != m) {
    throw config_error("tail_sequence: size mismatch");
  }
  const int n_max = static_cast<int>(std::ceil(A_diag.cwiseAbs().maxCoeff())) + 1;
  std::vector<double> tail;
  tail.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    double sq = 0.0;
    for (int j = 0; j < m; ++j) {
      const bool j_in = std::abs(A_diag[j]) <= n;
      for (int k = 0; k < m; ++k) {
        const bool k_in = std::abs(A_diag[k]) <= n;
        if (!(j_in && k_in)) sq += std::norm(B(j, k));
      }
    }
    tail.push_back(std::sqrt(sq));
  }
  return tail;
}

double Envelope::operator()(double r) const {
  const double cap = 2.0 * hs_total;
  const double lim = std::abs(r) - cap;
  // largest integer n >= 1 with n < lim
  int n = static_cast<int>(std::floor(lim));
  if (static_cast<double>(n) >= lim) --n;
  if (n < 1) return cap;
  const double bn =
      (n <= static_cast<int>(tail.size())) ? tail[n - 1] : 0.0;
  return std::min(cap, 3.0 * bn);
}

double Envelope::tail_l2() const {
  double sq = 0.0;
  for (double b : tail) sq += b * b;
  return std::sqrt(sq);
}

Envelope envelope(const RVector& A_diag, const CMatrix& B) {
  Envelope env;
  env.hs_total = B.norm();
  env.tail = tail_sequence(A_diag, B);
  return env;
}

Containment check_containment(const RVector& A_diag, const CMatrix& B,
                              const Envelope& env) {
  const int m = static_cast<int>(A_diag.size());
  CMatrix M = B;
  for (int j = 0; j < m; ++j) M(j, j) += A_diag[j];
  Eigen::ComplexEigenSolver<CMatrix> solver(M, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw numerical_error("dense eigensolver failed");
  }
  Containment out;
  out.margin = -std::numeric_limits<double>::infinity();
  out.eigenvalues.assign(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + m);
  for (const Complex& lam : out.eigenvalues) {
    const double f = env(lam.real());
    out.margin = std::max(out.margin, std::abs(lam.imag()) - f);
    if (std::abs(lam.imag()) > f * (1.0 + 1e-9) + 1e-9) ++out.violations;
  }
  return out;
}

CMatrix to_fourier_eigenbasis(const CMatrix& plain, const Grid& grid) {
  const int n = grid.size();
  if (plain.rows() != n || plain.cols() != n) {
    throw config_error("matrix does not match the grid");
  }
  // B_onb = W_cols( transpose( Winv_cols( transpose(plain) ) ) ), with
  // W = dft_forward and Winv = dft_inverse applied column by column; the
  // transform matrices are symmetric, which turns right multiplication
  // into column transforms of the transpose.
  CMatrix work = plain.transpose();
  for (int c = 0; c < n; ++c) {
    GridFunction col(grid, work.col(c));
    work.col(c) = dft_inverse(FreqGridFunction(grid, col.values)).values;
  }
  CMatrix out = work.transpose();
  for (int c = 0; c < n; ++c) {
    out.col(c) = dft_forward(GridFunction(grid, out.col(c))).values;
  }
  return out;
}

OperatorEnvelope operator_envelope(const GridFunction& v) {
  const Grid& g = v.grid;
  const int n = g.size();
  RVector A_diag(n);
  for (int p = 0; p < n; ++p) A_diag[p] = g.freq_node(p);

  OperatorEnvelope out;
  if (!(norm_l2(v) > 0.0)) {
    // unperturbed operator: real spectrum, trivial envelope
    out.env.hs_total = 0.0;
    out.env.tail = tail_sequence(A_diag, CMatrix::Zero(n, n));
    out.eigs.reserve(n);
    for (int p = 0; p < n; ++p) out.eigs.emplace_back(A_diag[p], 0.0);
    return out;
  }

  SimilarityReport rep = build_similarity(v);
  out.a = rep.a;
  out.residual = rep.residual;
  const CMatrix B_onb = to_fourier_eigenbasis(rep.B.dense(), g);
  const CMatrix B_pert = -B_onb;  // the similar operator is A - B
  out.hs_B = B_pert.norm();
  out.env = envelope(A_diag, B_pert);
  Containment c = check_containment(A_diag, B_pert, out.env);
  out.violations = c.violations;
  out.eigs = std::move(c.eigenvalues);
  return out;
}

}  // namespace specenv
