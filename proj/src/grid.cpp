#include "specenv/grid.hpp"

#include <cmath>

namespace specenv {

Grid make_grid(double half_width, int num_points) {
  if (!(half_width > 0.0)) {
    throw config_error("grid half-width must be positive");
  }
  if (num_points < 4 || num_points % 2 != 0) {
    throw config_error("grid size must be an even integer >= 4");
  }
  return Grid{half_width, num_points};
}

GridFunction::GridFunction(const Grid& g, CVector v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.num_points) {
    throw config_error("grid function length does not match grid size");
  }
}

FreqGridFunction::FreqGridFunction(const Grid& g, CVector v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.num_points) {
    throw config_error("frequency function length does not match grid size");
  }
}

GridFunction sample(const Grid& grid, const std::function<Complex(double)>& f) {
  CVector v(grid.size());
  for (int k = 0; k < grid.size(); ++k) v[k] = f(grid.node(k));
  return GridFunction(grid, std::move(v));
}

FreqGridFunction sample_freq(const Grid& grid,
                             const std::function<Complex(double)>& f) {
  CVector v(grid.size());
  for (int p = 0; p < grid.size(); ++p) v[p] = f(grid.freq_node(p));
  return FreqGridFunction(grid, std::move(v));
}

GridFunction sample_indicator(const Grid& grid, double lo, double hi) {
  if (!(lo < hi)) throw config_error("indicator needs lo < hi");
  const double eps = 1e-12 * grid.spacing();
  CVector v(grid.size());
  for (int k = 0; k < grid.size(); ++k) {
    const double t = grid.node(k);
    if (std::abs(t - lo) < eps || std::abs(t - hi) < eps) {
      v[k] = 0.5;
    } else {
      v[k] = (t > lo && t < hi) ? 1.0 : 0.0;
    }
  }
  return GridFunction(grid, std::move(v));
}

GridFunction sample_indicator_cells(const Grid& grid, double lo, double hi) {
  if (!(lo < hi)) throw config_error("indicator needs lo < hi");
  const double dt = grid.spacing();
  CVector v(grid.size());
  for (int k = 0; k < grid.size(); ++k) {
    const double cell_lo = grid.node(k) - dt / 2.0;
    const double cell_hi = grid.node(k) + dt / 2.0;
    const double overlap =
        std::max(0.0, std::min(hi, cell_hi) - std::max(lo, cell_lo));
    v[k] = overlap / dt;
  }
  return GridFunction(grid, std::move(v));
}

Complex interp_value(const GridFunction& f, double t) {
  const Grid& g = f.grid;
  const double dt = g.spacing();
  const double pos = (t + g.half_width) / dt;
  if (pos < 0.0) return 0.0;
  const int k = static_cast<int>(std::floor(pos));
  const double frac = pos - k;
  if (k >= g.size()) return 0.0;
  const Complex left = f.values[k];
  // the cell [t_{N-1}, R] interpolates to 0 at the excluded endpoint
  const Complex right = (k + 1 < g.size()) ? f.values[k + 1] : Complex(0.0);
  return left + frac * (right - left);
}

}  // namespace specenv
