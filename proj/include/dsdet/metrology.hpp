#pragma once

#include "dsdet/core.hpp"

namespace dsdet {

// Quantum Fisher information for estimating beta.  The eigenbasis of the
// equilibrium family is parameter-independent, so only the classical
// (eigenvalue-derivative) term survives:
//   F = sum_i (d mu_i / d beta)^2 / mu_i
// Three routes compute it: the eigenvalue sum (normative), the closed
// form, and a central finite difference (independent oracle).

struct QfiValue {
  double value;  // >= 0, units 1/beta^2
};

struct PeakResult {
  double beta_star;
  double qfi_star;
  double bracket_lo;
  double bracket_hi;
  int evaluations;
};

// Term-by-term eigenvalue route; the 0^2/0 convention contributes 0 when
// an eigenvalue and its derivative vanish together.
QfiValue qfi_spectral(const DetectorParams& p);

// F = 2 (tau+3)(3 - T^2)(dT/dbeta)^2 / ((1 - T^2)(3 + T^2)^2)
QfiValue qfi_closed(const DetectorParams& p);

// Central finite difference of the eigenvalues in beta, step h.
// Throws StepTooLarge when h >= beta/10.
QfiValue qfi_fd(const DetectorParams& p, double h);

// Coarse 64-point log scan over [lo, hi] then golden-section refinement
// of beta to |delta beta| < tol.  Throws FlatLandscape when the scan
// maximum sits at a bracket end.
PeakResult peak_qfi(double omega, double alpha, double tau, double lo,
                    double hi, double tol);

}  // namespace dsdet
