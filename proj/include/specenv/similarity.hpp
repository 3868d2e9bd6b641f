#pragma once

#include <vector>

#include "specenv/kernel_operator.hpp"

namespace specenv {

/// Window scale at which the smoothed reflection has Hilbert-Schmidt norm
/// exactly 1/2: a* = 4 (1 - ln 2) |v|_2^2 / pi.
double a_star(const GridFunction& v);

struct SimilarityReport {
  double a = 0.0;            // the window scale used (a*)
  double hs_psiV = 0.0;      // |T(psi_a) V|_2, expected 1/2 at a*
  KernelOperator U;          // I + T(psi_a) V          (plain action)
  KernelOperator U_inv;      // dense inverse           (plain action)
  KernelOperator B;          // U^{-1}(V T(psi_a) V + T(phi_a) V) (integral)
  double b_hs = 0.0;         // |B|_2
  double residual = 0.0;     // defect of the similarity on a test vector
  double form_agreement = 0.0;      // HS distance between the two forms of B
  double u_inv_identity_err = 0.0;  // |U^{-1} U - I|_2
  GridFunction v;            // the reflection profile used
};

/// Builds the similarity transform U = I + T(psi_{a*}) V and the
/// Hilbert-Schmidt remainder B by a direct dense solve, cross-checking the
/// two algebraically equal forms of B.
SimilarityReport build_similarity(const GridFunction& v);

/// |(A - V) U x - U (A - B) x|_2 / (|x|_2 + |A x|_2) for a band-limited x.
double similarity_residual(const SimilarityReport& report,
                           const GridFunction& x);

/// Same residual computed without inverting U (Neumann iteration, valid
/// since |T(psi_{a*})V|_2 = 1/2); usable at large N for refinement studies.
double similarity_residual_matfree(const GridFunction& v,
                                   const GridFunction& x);

/// Tail sequence b_n = |B - E_n B E_n|_2 for n = 1..ceil(max|A_diag|)+1,
/// where E_n keeps the coordinates with |A_diag| <= n.
std::vector<double> tail_sequence(const RVector& A_diag, const CMatrix& B);

/// Even piecewise-constant envelope with sigma(A+B) inside
/// { |Im lambda| <= f(Re lambda) }.
struct Envelope {
  double hs_total = 0.0;     // |B|_2
  std::vector<double> tail;  // tail[i] = b_{i+1}

  double operator()(double r) const;
  double tail_l2() const;
};

Envelope envelope(const RVector& A_diag, const CMatrix& B);

struct Containment {
  int violations = 0;
  double margin = 0.0;  // max over eigenvalues of |Im| - f(Re); <= 0 is safe
  std::vector<Complex> eigenvalues;
};

/// Dense eigensolve of diag(A_diag) + B checked against the envelope.
Containment check_containment(const RVector& A_diag, const CMatrix& B,
                              const Envelope& env);

struct OperatorEnvelope {
  Envelope env;
  std::vector<Complex> eigs;  // finite-section eigenvalues of A - B (advisory)
  double hs_B = 0.0;
  double a = 0.0;             // a* (0 when v = 0)
  int violations = 0;         // advisory only at the operator level
  double residual = 0.0;
};

/// Full pipeline for the differential operator with reflection: similarity
/// remainder B conjugated into the Fourier eigenbasis of A, envelope from
/// the tail sequence, finite-section eigenvalues for comparison.
OperatorEnvelope operator_envelope(const GridFunction& v);

/// Conjugate a plain-action operator matrix into the orthonormal Fourier
/// eigenbasis of the differentiation operator (columns ordered by
/// ascending frequency).
CMatrix to_fourier_eigenbasis(const CMatrix& plain, const Grid& grid);

}  // namespace specenv
