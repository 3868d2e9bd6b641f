// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "specenv/finite_module.hpp"
#include "specenv/fourier.hpp"
#include "specenv/kernel_operator.hpp"
#include "specenv/l1_bounds.hpp"
#include "specenv/runtime.hpp"
#include "specenv/similarity.hpp"
#include "specenv/windows.hpp"

using namespace specenv;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

void report(int id, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

bool close_rel(double actual, double expected, double tol) {
  return std::abs(actual - expected) <= tol * std::abs(expected);
}

GridFunction sample_real(const Grid& g, const std::function<double(double)>& f) {
  return sample(g, [&](double t) { return Complex(f(t), 0.0); });
}

double closed_form_l1(const std::function<double(double)>& f, double R, int N) {
  const Grid g = make_grid(R, N);
  double sum = 0.0;
  for (int k = 0; k < N; ++k) sum += std::abs(f(g.node(k)));
  return g.spacing() * sum;
}

// 1. window norm identities, 1e-4 relative, < 1 s
void criterion_1() {
  const auto start = clock_type::now();
  const auto tau = PiecewiseSymbol::trapezoid(1.0);
  const auto omg = PiecewiseSymbol::omega(1.0);
  struct Row {
    const char* name;
    double actual;
    double expected;
  };
  const Row rows[] = {
      {"tau_l2", symbol_quad_norm_l2(tau), 2.0 * std::sqrt(2.0 / 3.0)},
      {"tau_deriv", symbol_quad_norm_l2_deriv(tau), std::sqrt(2.0)},
      {"omega_l2", symbol_quad_norm_l2(omg),
       std::sqrt(4.0 - 4.0 * std::log(2.0))},
      {"omega_deriv", symbol_quad_norm_l2_deriv(omg), std::sqrt(2.0 / 3.0)},
  };
  bool pass = true;
  double worst = 0.0;
  for (const Row& r : rows) {
    const double rel = std::abs(r.actual - r.expected) / r.expected;
    worst = std::max(worst, rel);
    pass = pass && rel <= 1e-4;
  }
  const double dt = seconds_since(start);
  pass = pass && dt < 1.0;
  std::ostringstream os;
  os << "worst rel err " << worst << ", " << dt << " s";
  report(1, "window norm identities", pass, os.str());
}

// 2. L1 bounds and the estimate on the corpus, < 5 s
void criterion_2() {
  const auto start = clock_type::now();

  const double phi1_l1 =
      closed_form_l1([](double t) { return phi_time(1.0, t); }, 400.0, 1 << 18);
  const double psi1_l1 = closed_form_l1(
      [](double t) { return std::abs(psi_time(1.0, t)); }, 400.0, 1 << 17);

  double psi_sup = 0.0;
  for (int i = 1; i <= 200000; ++i) {
    psi_sup = std::max(psi_sup, std::abs(psi_time(1.0, 2.5e-4 * i)));
  }

  bool corpus_holds = true;
  {
    const Grid g = make_grid(40.0, 4096);
    corpus_holds =
        corpus_holds &&
        l1_bound_check(sample_real(g, [](double t) {
          return std::exp(-t * t / 2.0);
        })).holds;
    corpus_holds =
        corpus_holds &&
        l1_bound_check(sample_real(g, [](double t) {
          return std::exp(-t * t / 8.0);
        })).holds;
    corpus_holds = corpus_holds && l1_bound_check(sample_real(g, [](double t) {
                                     const double u = t / 2.0;
                                     return std::abs(u) < 1.0
                                                ? std::exp(-1.0 / (1.0 - u * u))
                                                : 0.0;
                                   })).holds;
    const Grid big = make_grid(10000.0, 1 << 17);
    corpus_holds = corpus_holds && l1_bound_check(sample_real(big, [](double t) {
                                     return phi_time(1.0, t);
                                   })).holds;
    corpus_holds = corpus_holds && l1_bound_check(sample_real(big, [](double t) {
                                     return gamma_time(1.0, t);
                                   })).holds;
  }

  const double dt = seconds_since(start);
  const bool pass = phi1_l1 <= std::sqrt(3.0) && psi1_l1 <= 1.35 &&
                    psi_sup <= 1.0 / M_PI + 1.0 && corpus_holds && dt < 5.0;
  std::ostringstream os;
  os << "phi1 l1 " << phi1_l1 << " <= sqrt(3), psi1 l1 " << psi1_l1
     << " <= 1.35, psi sup " << psi_sup << ", corpus "
     << (corpus_holds ? "holds" : "violated") << ", " << dt << " s";
  report(2, "L1 bounds", pass, os.str());
}

// 3. symbol identity, exact at 1e6 rational sample points
void criterion_3() {
  const double defect = symbol_identity_max_defect(1.0, 1000000);
  std::ostringstream os;
  os << "max defect " << defect << " over 1e6 points";
  report(3, "symbol identity xi*omega = 1 - tau", defect == 0.0, os.str());
}

// 4. Hilbert-Schmidt formulas at (R=40, N=4096), 1e-3 relative, < 60 s
void criterion_4() {
  const auto start = clock_type::now();
  const Grid g = make_grid(40.0, 4096);
  const GridFunction v = sample_indicator_cells(g, -1.0, 1.0);
  const double nv = norm_l2(v);
  const double astar = a_star(v);

  bool pass = true;
  double worst = 0.0;
  for (double a : {0.5, 1.0, astar}) {
    const KernelOperator phiV = smoothed_kernel(
        [a](double t) { return Complex(phi_time(a, t), 0.0); }, v);
    const double rel_phi =
        std::abs(phiV.hs_norm() - std::sqrt(2.0 * a / (3.0 * M_PI)) * nv) /
        (std::sqrt(2.0 * a / (3.0 * M_PI)) * nv);
    const KernelOperator psiV =
        smoothed_kernel([a](double t) { return psi_kernel_value(a, t); }, v);
    const double pred_psi =
        std::sqrt((1.0 - std::log(2.0)) / (a * M_PI)) * nv;
    const double rel_psi = std::abs(psiV.hs_norm() - pred_psi) / pred_psi;
    worst = std::max({worst, rel_phi, rel_psi});
    pass = pass && rel_phi <= 1e-3 && rel_psi <= 1e-3;
  }

  const double vr = vr_smallness(v, 1.0);
  const double rel_vr = std::abs(vr - nv / std::sqrt(2.0)) / (nv / std::sqrt(2.0));
  pass = pass && rel_vr <= 1e-3;
  worst = std::max(worst, rel_vr);

  const double dt = seconds_since(start);
  pass = pass && dt < 60.0;
  std::ostringstream os;
  os << "worst rel err " << worst << ", " << dt << " s";
  report(4, "Hilbert-Schmidt kernel formulas", pass, os.str());
}

// 5. similarity transform: norms at a*, agreeing forms, shrinking residual
void criterion_5() {
  const auto start = clock_type::now();
  bool pass = true;
  std::ostringstream os;
  {
    const Grid g = make_grid(40.0, 1024);
    const GridFunction v = sample_indicator_cells(g, -1.0, 1.0);
    const double nv = norm_l2(v);
    const SimilarityReport rep = build_similarity(v);
    const double u_dist =
        (rep.U_inv.matrix - CMatrix::Identity(g.size(), g.size())).norm();
    pass = pass && std::abs(rep.hs_psiV - 0.5) <= 1e-2;
    pass = pass && u_dist <= 1.01;
    pass = pass && rep.b_hs <= 2.45 * nv * nv * 1.01;
    pass = pass && rep.form_agreement <= 1e-8;
    os << "hs_psiV " << rep.hs_psiV << ", |U^-1 - I| " << u_dist << ", |B| "
       << rep.b_hs << " <= " << 2.45 * nv * nv * 1.01 << ", forms "
       << rep.form_agreement;
  }
  {
    // residual on a smooth band-limited pair at the default resolution,
    // then one refinement
    auto resid_at = [](int n) {
      const Grid g = make_grid(40.0, n);
      const GridFunction v =
          sample(g, [](double t) { return Complex(std::exp(-t * t / 2.0), 0.0); });
      const GridFunction x =
          sample(g, [](double t) { return Complex(std::exp(-t * t / 8.0), 0.0); });
      return similarity_residual_matfree(v, x);
    };
    const double coarse = resid_at(2048);
    const double fine = resid_at(4096);
    pass = pass && fine < 1e-2 && coarse < 1e-2 && fine < coarse;
    os << ", residual " << coarse << " -> " << fine << " under refinement";
  }
  os << ", " << seconds_since(start) << " s";
  report(5, "similarity transform", pass, os.str());
}

// 6. commutator identity at the default resolution, 5e-3 relative
void criterion_6() {
  const Grid g = make_grid(40.0, 4096);
  const GridFunction v =
      sample_real(g, [](double t) { return std::exp(-t * t / 2.0); });
  const GridFunction x =
      sample_real(g, [](double t) { return std::exp(-t * t / 8.0); });
  const double a = 1.0;
  const KernelOperator psiV =
      smoothed_kernel([a](double t) { return psi_kernel_value(a, t); }, v);
  const KernelOperator phiV = smoothed_kernel(
      [a](double t) { return Complex(phi_time(a, t), 0.0); }, v);
  const KernelOperator V = reflection_operator(v);
  const CVector lhs =
      spectral_derivative_operator_apply(psiV.apply(x)).values -
      psiV.apply(spectral_derivative_operator_apply(x)).values;
  const CVector rhs = V.apply(x.values) - phiV.apply(x.values);
  const double resid =
      std::sqrt(g.spacing() * (lhs - rhs).squaredNorm()) / w12_norm(x);
  std::ostringstream os;
  os << "relative residual " << resid;
  report(6, "commutator identity", resid < 5e-3, os.str());
}

// 7. envelope containment: 50 randomized trials, m = 200, < 120 s
void criterion_7() {
  const auto start = clock_type::now();
  std::mt19937_64 rng(20240811);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> uni(-20.0, 20.0);
  const double hs_targets[3] = {0.1, 1.0, 5.0};
  int violations = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 200;
    RVector A(m);
    for (int i = 0; i < m; ++i) A[i] = uni(rng);
    CMatrix B(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) B(i, j) = Complex(gauss(rng), gauss(rng));
    }
    B *= hs_targets[trial % 3] / B.norm();
    const Envelope env = envelope(A, B);
    violations += check_containment(A, B, env).violations;
  }
  const double dt = seconds_since(start);
  const bool pass = violations == 0 && dt < 120.0;
  std::ostringstream os;
  os << violations << " violations over 50 trials, " << dt << " s";
  report(7, "envelope containment (finite dimension)", pass, os.str());
}

// 8. spectral mapping on >= 20 pairs, Hausdorff < 1e-9; resolvent 1e-12
void criterion_8() {
  std::vector<FiniteModuleRep> reps;
  reps.emplace_back(std::vector<double>{-1.0, 0.0, 2.0});
  reps.emplace_back(std::vector<double>{0.0, M_PI});
  reps.emplace_back(std::vector<double>{1.0, 1.0, 5.0});
  reps.emplace_back(std::vector<double>{0.5});
  reps.emplace_back(std::vector<double>{-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5});
  {
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> uni(-8.0, 8.0);
    std::vector<double> f(25);
    for (double& x : f) x = uni(rng);
    reps.emplace_back(std::move(f));
  }

  const PiecewiseSymbol tau1 = PiecewiseSymbol::trapezoid(1.0);
  const PiecewiseSymbol tau2 = PiecewiseSymbol::trapezoid(2.5);
  std::vector<Symbol> syms;
  syms.push_back([](double xi) { return Complex(xi, 0.0); });
  syms.push_back([](double xi) { return Complex(xi * xi, 0.0); });
  syms.push_back([](double xi) { return Complex(xi * xi * xi - xi, 0.0); });
  syms.push_back([tau1](double xi) { return Complex(tau1(xi), 0.0); });
  syms.push_back([tau2](double xi) { return Complex(tau2(xi), 0.0); });
  syms.push_back([](double xi) { return std::exp(Complex(0.0, xi)); });

  int pairs = 0;
  double worst = 0.0;
  bool pass = true;
  for (const auto& rep : reps) {
    for (const auto& h : syms) {
      const SpectralMapping m = check_spectral_mapping(rep, h);
      worst = std::max(worst, m.hausdorff);
      pass = pass && m.equal;
      ++pairs;
    }
  }

  // resolvent equality for normal diagonal operators
  double worst_res = 0.0;
  {
    const FiniteModuleRep rep({-1.0, 0.0, 2.0});
    const Symbol id = [](double xi) { return Complex(xi, 0.0); };
    for (const Complex lambda :
         {Complex(3.0, 4.0), Complex(0.0, 1.0), Complex(-2.5, 0.3)}) {
      const auto rc = resolvent_norm_check(rep, id, lambda);
      worst_res =
          std::max(worst_res, std::abs(rc.norm / rc.dist_bound - 1.0));
      pass = pass && rc.tight;
    }
  }

  std::ostringstream os;
  os << pairs << " pairs, worst Hausdorff " << worst
     << ", worst resolvent defect " << worst_res;
  report(8, "spectral mapping", pass && pairs >= 20, os.str());
}

// 9. AP1 calculus: translation resolvent norm and the geometric series
void criterion_9() {
  bool pass = true;
  std::ostringstream os;
  {
    // unitary representation hitting the nearest point of the circle
    const FiniteModuleRep rep({0.0, M_PI / 2.0, M_PI});
    const CMatrix t0 = rep.representation(1.0);
    const CMatrix res =
        (Complex(2.0, 0.0) * CMatrix::Identity(3, 3) - t0).inverse();
    double norm = 0.0;
    for (int j = 0; j < 3; ++j) norm = std::max(norm, std::abs(res(j, j)));
    pass = pass && std::abs(norm - 1.0) <= 1e-12;
    os << "|(2 - T(t0))^-1| = " << norm;
  }
  {
    APFunction h((CVector(1) << Complex(1.0, 0.0)).finished(),
                 (RVector(1) << 1.0).finished());
    const double norm = ap1_reciprocal_norm(h, Complex(2.0, 0.0));
    pass = pass && std::abs(norm - 1.0) <= 1e-8;
    os << ", ap1 reciprocal norm " << norm;
  }
  report(9, "AP1 calculus", pass, os.str());
}

// 10. Pythagoras of the projection split, monotone tails, finite l2 tail
void criterion_10() {
  std::mt19937_64 rng(515);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> uni(-10.0, 10.0);
  bool pass = true;
  double worst_pyth = 0.0;
  double tail_l2 = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const int m = 80;
    RVector A(m);
    for (int i = 0; i < m; ++i) A[i] = uni(rng);
    CMatrix B(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) B(i, j) = Complex(gauss(rng), gauss(rng));
    }
    B *= 1.0 / B.norm();
    const Envelope env = envelope(A, B);
    const double total_sq = B.squaredNorm();
    for (size_t i = 0; i < env.tail.size(); ++i) {
      const int n = static_cast<int>(i) + 1;
      double kept_sq = 0.0;
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
          if (std::abs(A[r]) <= n && std::abs(A[c]) <= n) {
            kept_sq += std::norm(B(r, c));
          }
        }
      }
      worst_pyth = std::max(
          worst_pyth,
          std::abs(total_sq - kept_sq - env.tail[i] * env.tail[i]));
      if (i > 0) pass = pass && env.tail[i] <= env.tail[i - 1] + 1e-15;
    }
    tail_l2 = env.tail_l2();
    pass = pass && std::isfinite(tail_l2);
  }
  pass = pass && worst_pyth <= 1e-12;
  std::ostringstream os;
  os << "worst Pythagoras defect " << worst_pyth << ", tail l2 " << tail_l2;
  report(10, "projection split and tail sequence", pass, os.str());
}

}  // namespace

int main() {
  configure_threads();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("ACCEPTANCE: %d/10 criteria passed\n", 10 - failures);
  return failures;
}
