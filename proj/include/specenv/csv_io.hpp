#pragma once

#include <string>

#include "specenv/grid.hpp"

namespace specenv {

/// GridFunction CSV: header "t,re,im", one row per node, 15 significant
/// digits. FreqGridFunction CSV uses header "xi,re,im".
void write_csv(const GridFunction& f, const std::string& path);
void write_csv(const FreqGridFunction& F, const std::string& path);

/// Reads a GridFunction CSV, reconstructing the grid from the time column
/// (uniform spacing, even length, symmetric range required).
GridFunction read_grid_function(const std::string& path);

/// Dense complex matrix as rows of re/im column pairs (no header).
void write_matrix_csv(const CMatrix& m, const std::string& path);
CMatrix read_matrix_csv(const std::string& path);

/// One real value per row.
void write_reals_csv(const RVector& v, const std::string& path,
                     const std::string& header = "");
RVector read_reals_csv(const std::string& path);

/// Format a double with 15 significant digits (the numeric output format
/// used by every CSV and JSON report).
std::string fmt15(double x);

/// Round a double through its 15-significant-digit decimal form (keeps
/// JSON reports byte-stable across platforms).
double sig15(double x);

}  // namespace specenv
