#include "specenv/finite_module.hpp"

#include <fftw3.h>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <mutex>

#include "specenv/fourier.hpp"

namespace specenv {

FiniteModuleRep::FiniteModuleRep(std::vector<double> freqs)
    : freqs_(std::move(freqs)) {
  if (freqs_.empty()) {
    throw config_error("representation needs at least one frequency");
  }
  for (double f : freqs_) {
    if (!std::isfinite(f)) throw config_error("frequencies must be finite");
  }
}

CMatrix FiniteModuleRep::representation(double t) const {
  CMatrix m = CMatrix::Zero(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    m(j, j) = std::exp(Complex(0.0, freqs_[j] * t));
  }
  return m;
}

CMatrix calculus_operator(const Symbol& h, const FiniteModuleRep& rep) {
  CMatrix m = CMatrix::Zero(rep.dim(), rep.dim());
  for (int j = 0; j < rep.dim(); ++j) {
    const Complex v = h(rep.freqs()[j]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw numerical_error("symbol has a pole on the frequency list");
    }
    m(j, j) = v;
  }
  return m;
}

std::vector<double> beurling_spectrum(const FiniteModuleRep& rep,
                                      const CVector& x) {
  if (x.size() != rep.dim()) {
    throw config_error("vector length does not match representation");
  }
  std::vector<double> active;
  for (int j = 0; j < rep.dim(); ++j) {
    if (std::abs(x[j]) > 1e-12) active.push_back(rep.freqs()[j]);
  }
  std::sort(active.begin(), active.end());
  active.erase(std::unique(active.begin(), active.end()), active.end());
  return active;
}

FiniteModuleRep operator_module(const FiniteModuleRep& rep) {
  std::vector<double> diffs;
  diffs.reserve(static_cast<size_t>(rep.dim()) * rep.dim());
  for (double a : rep.freqs()) {
    for (double b : rep.freqs()) diffs.push_back(a - b);
  }
  return FiniteModuleRep(std::move(diffs));
}

SpectrumSet SpectrumSet::from_points(std::vector<Complex> pts, double tol) {
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  SpectrumSet out;
  out.tol_ = tol;
  for (const Complex& p : pts) {
    bool merged = false;
    for (const Complex& kept : out.points_) {
      if (std::abs(p - kept) < tol / 2.0) {
        merged = true;
        break;
      }
    }
    if (!merged) out.points_.push_back(p);
  }
  return out;
}

double SpectrumSet::hausdorff(const SpectrumSet& other) const {
  if (points_.empty() && other.points_.empty()) return 0.0;
  if (points_.empty() || other.points_.empty()) {
    return std::numeric_limits<double>::infinity();
  }
  auto directed = [](const std::vector<Complex>& a,
                     const std::vector<Complex>& b) {
    double worst = 0.0;
    for (const Complex& p : a) {
      double best = std::numeric_limits<double>::infinity();
      for (const Complex& q : b) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(points_, other.points_),
                  directed(other.points_, points_));
}

SpectralMapping check_spectral_mapping(const FiniteModuleRep& rep,
                                       const Symbol& h) {
  const CMatrix op = calculus_operator(h, rep);
  Eigen::ComplexEigenSolver<CMatrix> solver(op, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw numerical_error("eigensolver failed on the calculus operator");
  }
  const double tol = 1e-9;
  std::vector<Complex> eigs(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + rep.dim());
  std::vector<Complex> img;
  img.reserve(rep.dim());
  for (double f : rep.freqs()) img.push_back(h(f));

  SpectralMapping out;
  out.sigma = SpectrumSet::from_points(std::move(eigs), tol);
  out.image = SpectrumSet::from_points(std::move(img), tol);
  out.hausdorff = out.sigma.hausdorff(out.image);
  out.equal = out.hausdorff < tol;
  return out;
}

ResolventCheck resolvent_norm_check(const FiniteModuleRep& rep, const Symbol& h,
                                    Complex lambda) {
  const CMatrix op = calculus_operator(h, rep);
  double dist = std::numeric_limits<double>::infinity();
  for (int j = 0; j < rep.dim(); ++j) {
    dist = std::min(dist, std::abs(lambda - op(j, j)));
  }
  if (!(dist > 1e-12)) {
    throw numerical_error("lambda lies in the spectrum: resolvent singular");
  }
  CMatrix resolvent = CMatrix::Zero(rep.dim(), rep.dim());
  for (int j = 0; j < rep.dim(); ++j) {
    resolvent(j, j) = 1.0 / (lambda - op(j, j));
  }
  Eigen::JacobiSVD<CMatrix> svd(resolvent);
  ResolventCheck out;
  out.norm = svd.singularValues()(0);
  out.dist_bound = 1.0 / dist;
  out.tight = std::abs(out.norm * dist - 1.0) < 1e-12;
  return out;
}

APFunction::APFunction(CVector c, RVector t)
    : coeffs(std::move(c)), exponents(std::move(t)) {
  if (coeffs.size() != exponents.size()) {
    throw config_error("coefficient and exponent lists must match in length");
  }
  if (coeffs.size() == 0) throw config_error("empty almost periodic function");
}

Complex APFunction::operator()(double xi) const {
  Complex sum = 0.0;
  for (int k = 0; k < coeffs.size(); ++k) {
    sum += coeffs[k] * std::exp(Complex(0.0, xi * exponents[k]));
  }
  return sum;
}

Symbol APFunction::as_symbol() const {
  return [copy = *this](double xi) { return copy(xi); };
}

CMatrix ap1_apply(const APFunction& h, const FiniteModuleRep& rep) {
  CMatrix m = CMatrix::Zero(rep.dim(), rep.dim());
  for (int k = 0; k < h.coeffs.size(); ++k) {
    m += h.coeffs[k] * rep.representation(h.exponents[k]);
  }
  return m;
}

namespace {

double float_gcd(double a, double b) {
  a = std::abs(a);
  b = std::abs(b);
  const double tol = 1e-10 * std::max(a, b);
  while (b > tol) {
    const double r = std::fmod(a, b);
    a = b;
    b = r;
  }
  return a;
}

// Common step of the nonzero exponents; throws if they are incommensurate.
double commensurate_step(const RVector& t) {
  double g = 0.0;
  for (int k = 0; k < t.size(); ++k) {
    const double x = std::abs(t[k]);
    if (x < 1e-12) continue;
    g = (g == 0.0) ? x : float_gcd(g, x);
  }
  if (g == 0.0) return 0.0;  // constant symbol
  for (int k = 0; k < t.size(); ++k) {
    const double q = t[k] / g;
    if (std::abs(q - std::round(q)) > 1e-9) {
      throw config_error("exponents are not commensurate");
    }
  }
  return g;
}

}  // namespace

double ap1_reciprocal_norm(const APFunction& h, Complex lambda) {
  const double step = commensurate_step(h.exponents);
  if (step == 0.0) {
    const Complex c = h(0.0);
    const double dist = std::abs(lambda - c);
    if (dist < 1e-6) throw numerical_error("lambda too close to the range of h");
    return 1.0 / dist;
  }
  const int m = 1 << 16;
  const double period = 2.0 * M_PI / step;
  std::vector<Complex> samples(m);
  double min_dist = std::numeric_limits<double>::infinity();
  for (int s = 0; s < m; ++s) {
    const Complex hv = h(period * s / m);
    min_dist = std::min(min_dist, std::abs(lambda - hv));
    samples[s] = 1.0 / (lambda - hv);
  }
  if (min_dist <= 1e-6) {
    throw numerical_error("lambda within margin of the closure of h(R)");
  }
  // Fourier coefficients of one period.
  {
    static std::mutex planner;
    fftw_complex* data = reinterpret_cast<fftw_complex*>(samples.data());
    fftw_plan plan;
    {
      std::lock_guard<std::mutex> lock(planner);
      plan = fftw_plan_dft_1d(m, data, data, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
      std::lock_guard<std::mutex> lock(planner);
      fftw_destroy_plan(plan);
    }
  }
  std::vector<double> mags(m);
  for (int s = 0; s < m; ++s) mags[s] = std::abs(samples[s]) / m;
  // drop the smallest coefficients while their total stays below the tail
  // threshold, then sum the rest
  std::sort(mags.begin(), mags.end());
  double tail = 0.0;
  size_t start = 0;
  for (; start < mags.size(); ++start) {
    if (tail + mags[start] >= 1e-10) break;
    tail += mags[start];
  }
  double sum = 0.0;
  for (size_t s = mags.size(); s-- > start;) sum += mags[s];
  return sum;
}

MhEstimate mh_estimate(const Symbol& h, Complex lambda,
                       const std::vector<std::pair<double, double>>& support,
                       const Grid& grid) {
  if (support.empty()) throw config_error("empty support list");
  for (const auto& [lo, hi] : support) {
    if (!(lo <= hi)) throw config_error("invalid support interval");
    const int samples = 4096;
    for (int i = 0; i <= samples; ++i) {
      const double xi = lo + (hi - lo) * i / samples;
      if (std::abs(lambda - h(xi)) <= 1e-6) {
        throw numerical_error("lambda too close to h on the support");
      }
    }
  }
  MhEstimate out;
  for (int k = -3; k <= 6; ++k) {
    const double a = std::ldexp(1.0, k);
    const PiecewiseSymbol tau = PiecewiseSymbol::trapezoid(a);
    CVector vals(grid.size());
    for (int p = 0; p < grid.size(); ++p) {
      const double xi = grid.freq_node(p);
      const double cutoff = tau(xi);
      if (cutoff == 0.0) {
        vals[p] = 0.0;
        continue;
      }
      const Complex hv = h(xi);
      if (!std::isfinite(hv.real()) || !std::isfinite(hv.imag())) {
        throw numerical_error("symbol has a pole inside the window support");
      }
      const Complex denom = lambda - hv;
      if (std::abs(denom) < 1e-12) {
        throw numerical_error("lambda hits h inside the window support");
      }
      vals[p] = cutoff / denom;
    }
    const GridFunction g =
        dft_inverse(FreqGridFunction(grid, std::move(vals)));
    out.a_list.push_back(a);
    out.norms.push_back(norm_l1(g));
  }
  out.M = *std::max_element(out.norms.begin(), out.norms.end());
  return out;
}

}  // namespace specenv
