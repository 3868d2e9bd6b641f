#pragma once

#include "specenv/grid.hpp"

namespace specenv {

/// Discrete version of f_hat(xi) = int f(t) exp(-i t xi) dt:
/// F_j = dt * sum_k f(t_k) exp(-i t_k xi_j).
FreqGridFunction dft_forward(const GridFunction& f);

/// Inverse transform with the 1/(2*pi) normalization; exact inverse of
/// dft_forward on the grid.
GridFunction dft_inverse(const FreqGridFunction& F);

/// Composite trapezoid norms with the grid spacing as quadrature weight.
/// With these conventions Parseval holds discretely:
/// norm_l2(dft_forward(f)) = sqrt(2*pi) * norm_l2(f) up to roundoff.
double norm_l2(const GridFunction& f);
double norm_l2(const FreqGridFunction& F);
double norm_l1(const GridFunction& f);
double norm_l1(const FreqGridFunction& F);
double norm_inf(const GridFunction& f);
double norm_inf(const FreqGridFunction& F);

/// Apply a Fourier multiplier m(xi): x -> idft( m .* dft(x) ).
GridFunction apply_multiplier(const GridFunction& x,
                              const std::function<Complex(double)>& m);

/// y'(t) computed spectrally, i.e. the action of -i d/dt is
/// apply_multiplier with m(xi) = xi.
GridFunction spectral_derivative_operator_apply(const GridFunction& x);

}  // namespace specenv
