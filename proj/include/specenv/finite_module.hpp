#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "specenv/grid.hpp"
#include "specenv/windows.hpp"

namespace specenv {

/// Pointwise symbol evaluator h: R -> C. Poles are signalled by returning
/// a non-finite value.
using Symbol = std::function<Complex(double)>;

/// Finite frequency list realizing the diagonal unitary representation
/// T(t) = diag(exp(i lambda_j t)). Duplicates are allowed.
class FiniteModuleRep {
public:
  explicit FiniteModuleRep(std::vector<double> freqs);

  int dim() const { return static_cast<int>(freqs_.size()); }
  const std::vector<double>& freqs() const { return freqs_; }

  /// T(t) as a diagonal matrix.
  CMatrix representation(double t) const;

private:
  std::vector<double> freqs_;
};

/// diag(h(lambda_1), ..., h(lambda_m)); throws if h has a pole on the
/// frequency list.
CMatrix calculus_operator(const Symbol& h, const FiniteModuleRep& rep);

/// Active frequencies of a vector: { lambda_j : |x_j| > 1e-12 }, deduplicated.
std::vector<double> beurling_spectrum(const FiniteModuleRep& rep,
                                      const CVector& x);

/// The induced module on matrices X -> T(t) X T(-t): frequency list of all
/// pairwise differences lambda_j - lambda_k.
FiniteModuleRep operator_module(const FiniteModuleRep& rep);

/// Finite point set in C with a merge tolerance: no two kept points lie
/// closer than tol/2.
class SpectrumSet {
public:
  SpectrumSet() = default;
  static SpectrumSet from_points(std::vector<Complex> pts, double tol);

  const std::vector<Complex>& points() const { return points_; }
  double tol() const { return tol_; }
  double hausdorff(const SpectrumSet& other) const;

private:
  std::vector<Complex> points_;
  double tol_ = 0.0;
};

struct SpectralMapping {
  SpectrumSet sigma;   // eigenvalues of the calculus operator
  SpectrumSet image;   // direct image h(Lambda)
  double hausdorff = 0.0;
  bool equal = false;
};

/// Verifies sigma(T(h)) = h(Lambda) on the finite representation: sigma via
/// a dense eigensolve, image by direct evaluation, compared in Hausdorff
/// distance at tolerance 1e-9.
SpectralMapping check_spectral_mapping(const FiniteModuleRep& rep,
                                       const Symbol& h);

struct ResolventCheck {
  double norm = 0.0;        // operator 2-norm of (lambda - T(h))^{-1}
  double dist_bound = 0.0;  // 1 / dist(lambda, h(Lambda))
  bool tight = false;       // |norm * dist - 1| < 1e-12
};

ResolventCheck resolvent_norm_check(const FiniteModuleRep& rep, const Symbol& h,
                                    Complex lambda);

/// Almost periodic function with absolutely summable coefficients:
/// h(xi) = sum c_k exp(i xi t_k).
struct APFunction {
  CVector coeffs;
  RVector exponents;

  APFunction(CVector c, RVector t);
  double ap1_norm() const { return coeffs.cwiseAbs().sum(); }
  Complex operator()(double xi) const;
  Symbol as_symbol() const;
};

/// T(h) = sum c_k T(t_k) as a dense diagonal matrix.
CMatrix ap1_apply(const APFunction& h, const FiniteModuleRep& rep);

/// AP1 norm of xi -> 1/(lambda - h(xi)) for h with commensurate exponents,
/// via Fourier coefficients over one period (2^16 samples), truncated when
/// the remaining tail is below 1e-10.
double ap1_reciprocal_norm(const APFunction& h, Complex lambda);

struct MhEstimate {
  double M = 0.0;  // lower estimate of the sup over the window scale
  std::vector<double> a_list;
  std::vector<double> norms;  // |F^{-1}(g_lambda^a)|_1 per scale
};

/// Spectral-admissibility estimate: over a geometric grid of window scales
/// a = 2^k, k = -3..6, forms g_lambda^a = trapezoid_a / (lambda - h) on the
/// default desk grid, inverse-transforms and takes L1 norms; the reported M
/// is a lower estimate of the supremum over all scales.
MhEstimate mh_estimate(const Symbol& h, Complex lambda,
                       const std::vector<std::pair<double, double>>& support,
                       const Grid& grid);

}  // namespace specenv
