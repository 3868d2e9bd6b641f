#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "specenv/errors.hpp"

namespace specenv {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// Uniform symmetric grid t_k = -R + k*dt, k = 0..N-1, with the right
/// endpoint +R excluded. N is even, so t_{N/2} = 0 and every node except
/// t_0 = -R has its reflection -t_k = t_{N-k} on the grid.
struct Grid {
  double half_width = 0.0;  // R
  int num_points = 0;       // N (even)

  double spacing() const { return 2.0 * half_width / num_points; }
  int size() const { return num_points; }
  double node(int k) const { return -half_width + k * spacing(); }

  /// Frequency node xi_j = 2*pi*j/(N*dt) for j = -N/2 .. N/2-1,
  /// addressed by p = j + N/2.
  double freq_node(int p) const {
    return freq_spacing() * (p - num_points / 2);
  }
  double freq_spacing() const {
    return 2.0 * M_PI / (num_points * spacing());
  }
  double nyquist() const { return M_PI / spacing(); }

  bool operator==(const Grid& other) const = default;
};

Grid make_grid(double half_width, int num_points);

/// Complex samples on the time nodes of a grid.
struct GridFunction {
  Grid grid;
  CVector values;

  GridFunction() = default;
  GridFunction(const Grid& g, CVector v);
};

/// Complex samples on the frequency nodes of a grid, stored in ascending
/// frequency order (index p corresponds to j = p - N/2).
struct FreqGridFunction {
  Grid grid;
  CVector values;

  FreqGridFunction() = default;
  FreqGridFunction(const Grid& g, CVector v);
};

GridFunction sample(const Grid& grid, const std::function<Complex(double)>& f);
FreqGridFunction sample_freq(const Grid& grid,
                             const std::function<Complex(double)>& f);

/// Indicator of [lo, hi] sampled on the grid; nodes that land exactly on
/// an endpoint get the value 1/2 (trapezoid convention at a jump).
GridFunction sample_indicator(const Grid& grid, double lo, double hi);

/// Indicator of [lo, hi] represented by cell averages (the L2 projection
/// onto piecewise constants): edge cells carry their overlap fraction.
GridFunction sample_indicator_cells(const Grid& grid, double lo, double hi);

/// Value of a grid function at an arbitrary time by linear interpolation,
/// 0 outside the sampled range (functions are assumed negligible at +-R).
Complex interp_value(const GridFunction& f, double t);

}  // namespace specenv
