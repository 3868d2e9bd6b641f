#include "specenv/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace specenv {

std::string fmt15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

double sig15(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(fmt15(x).c_str(), nullptr);
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw config_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open file: " + path);
  return in;
}

std::vector<double> split_row(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    // strtod handles subnormal magnitudes that std::stod rejects
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str()) {
      throw config_error("expected a number, found: " + cell);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

void write_csv(const GridFunction& f, const std::string& path) {
  auto out = open_out(path);
  out << "t,re,im\n";
  for (int k = 0; k < f.grid.size(); ++k) {
    out << fmt15(f.grid.node(k)) << ',' << fmt15(f.values[k].real()) << ','
        << fmt15(f.values[k].imag()) << '\n';
  }
}

void write_csv(const FreqGridFunction& F, const std::string& path) {
  auto out = open_out(path);
  out << "xi,re,im\n";
  for (int p = 0; p < F.grid.size(); ++p) {
    out << fmt15(F.grid.freq_node(p)) << ',' << fmt15(F.values[p].real())
        << ',' << fmt15(F.values[p].imag()) << '\n';
  }
}

GridFunction read_grid_function(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw config_error("empty CSV: " + path);
  std::vector<double> times;
  std::vector<Complex> vals;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto row = split_row(line);
    if (row.size() < 3) {
      throw config_error("expected t,re,im rows in " + path);
    }
    times.push_back(row[0]);
    vals.emplace_back(row[1], row[2]);
  }
  const int n = static_cast<int>(times.size());
  if (n < 4 || n % 2 != 0) {
    throw config_error("grid CSV needs an even number of rows >= 4: " + path);
  }
  const double dt = times[1] - times[0];
  if (!(dt > 0.0)) throw config_error("time column must increase: " + path);
  for (int k = 1; k < n; ++k) {
    if (std::abs(times[k] - times[k - 1] - dt) > 1e-9 * dt) {
      throw config_error("time column is not uniformly spaced: " + path);
    }
  }
  const double R = -times[0];
  if (std::abs(times[n / 2]) > 1e-9 * dt || !(R > 0.0)) {
    throw config_error("grid must be symmetric about 0 with +R excluded: " +
                       path);
  }
  Grid g = make_grid(R, n);
  CVector v(n);
  for (int k = 0; k < n; ++k) v[k] = vals[k];
  return GridFunction(g, std::move(v));
}

void write_matrix_csv(const CMatrix& m, const std::string& path) {
  auto out = open_out(path);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << fmt15(m(r, c).real()) << ',' << fmt15(m(r, c).imag());
    }
    out << '\n';
  }
}

CMatrix read_matrix_csv(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(split_row(line));
  }
  if (rows.empty()) throw config_error("empty matrix CSV: " + path);
  const size_t w = rows[0].size();
  if (w == 0 || w % 2 != 0) {
    throw config_error("matrix CSV needs re,im column pairs: " + path);
  }
  CMatrix m(rows.size(), w / 2);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != w) {
      throw config_error("ragged matrix CSV: " + path);
    }
    for (size_t c = 0; c < w / 2; ++c) {
      m(r, c) = Complex(rows[r][2 * c], rows[r][2 * c + 1]);
    }
  }
  return m;
}

void write_reals_csv(const RVector& v, const std::string& path,
                     const std::string& header) {
  auto out = open_out(path);
  if (!header.empty()) out << header << '\n';
  for (Eigen::Index i = 0; i < v.size(); ++i) out << fmt15(v[i]) << '\n';
}

RVector read_reals_csv(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  std::vector<double> vals;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // tolerate a single-word header
    try {
      const auto row = split_row(line);
      for (double x : row) vals.push_back(x);
    } catch (const std::exception&) {
      if (!vals.empty()) throw config_error("bad row in " + path);
    }
  }
  if (vals.empty()) throw config_error("no values in " + path);
  RVector v(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) v[i] = vals[i];
  return v;
}

}  // namespace specenv
