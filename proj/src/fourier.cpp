#include "specenv/fourier.hpp"

#include <fftw3.h>

#include <mutex>
#include <vector>

namespace specenv {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// In-place FFT of length n; sign is FFTW_FORWARD or FFTW_BACKWARD.
// Plan creation is serialized, execution is not.
void run_fft(std::vector<Complex>& buf, int sign) {
  const int n = static_cast<int>(buf.size());
  fftw_complex* data = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, data, data, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

}  // namespace

// With t_k = -R + k*dt and xi_j = 2*pi*j/(N*dt) we have
// exp(-i t_k xi_j) = (-1)^j exp(-2*pi*i jk/N), since R*xi_j = pi*j exactly.
FreqGridFunction dft_forward(const GridFunction& f) {
  const int n = f.grid.size();
  std::vector<Complex> buf(f.values.data(), f.values.data() + n);
  run_fft(buf, FFTW_FORWARD);
  const double dt = f.grid.spacing();
  CVector out(n);
  for (int p = 0; p < n; ++p) {
    const int j = p - n / 2;
    const int idx = (j + n) % n;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    out[p] = dt * sign * buf[idx];
  }
  return FreqGridFunction(f.grid, std::move(out));
}

GridFunction dft_inverse(const FreqGridFunction& F) {
  const int n = F.grid.size();
  std::vector<Complex> buf(n);
  for (int p = 0; p < n; ++p) {
    const int j = p - n / 2;
    const int idx = (j + n) % n;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    buf[idx] = sign * F.values[p];
  }
  run_fft(buf, FFTW_BACKWARD);
  const double scale = 1.0 / (n * F.grid.spacing());
  CVector out(n);
  for (int k = 0; k < n; ++k) out[k] = scale * buf[k];
  return GridFunction(F.grid, std::move(out));
}

double norm_l2(const GridFunction& f) {
  return std::sqrt(f.grid.spacing() * f.values.squaredNorm());
}

double norm_l2(const FreqGridFunction& F) {
  return std::sqrt(F.grid.freq_spacing() * F.values.squaredNorm());
}

double norm_l1(const GridFunction& f) {
  return f.grid.spacing() * f.values.cwiseAbs().sum();
}

double norm_l1(const FreqGridFunction& F) {
  return F.grid.freq_spacing() * F.values.cwiseAbs().sum();
}

double norm_inf(const GridFunction& f) {
  return f.values.size() ? f.values.cwiseAbs().maxCoeff() : 0.0;
}

double norm_inf(const FreqGridFunction& F) {
  return F.values.size() ? F.values.cwiseAbs().maxCoeff() : 0.0;
}

GridFunction apply_multiplier(const GridFunction& x,
                              const std::function<Complex(double)>& m) {
  FreqGridFunction X = dft_forward(x);
  for (int p = 0; p < x.grid.size(); ++p) {
    X.values[p] *= m(x.grid.freq_node(p));
  }
  return dft_inverse(X);
}

GridFunction spectral_derivative_operator_apply(const GridFunction& x) {
  return apply_multiplier(x, [](double xi) { return Complex(xi, 0.0); });
}

}  // namespace specenv
