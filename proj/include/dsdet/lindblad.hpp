#pragma once

#include <vector>

#include "dsdet/core.hpp"

namespace dsdet {

// Numeric integration of the Kossakowski-Lindblad master equation in the
// equal-Kossakowski (small separation) regime; the dynamical oracle for
// the equilibrium state and the tau conservation law.

struct LindbladCoeffs {
  double kappa_plus;   // > 0
  double kappa_minus;  // |kappa_minus| < kappa_plus
  double tau_k;        // Y0(0) - kappa_plus
  double omega;        // detector gap for H_D

  static LindbladCoeffs from_params(const DetectorParams& p);
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Matrix4c> states;
  std::vector<double> distance;  // trace distance to the analytic target
  bool converged;
  double final_distance;
};

// -i[H_D, rho] + L[rho]; Hermitian and traceless.
Matrix4c generator(const Matrix4c& rho, const LindbladCoeffs& c);

// Fixed-step RK4 with per-step re-Hermitization.  Requires
// dt <= 0.01/kappa_plus.  Throws StepUnstable if the trace drifts
// beyond 1e-6.  Convergence is measured against
// xstate(kappa_minus/kappa_plus, tau_of_state(rho0)).
Trajectory integrate(const Matrix4c& rho0, const LindbladCoeffs& c,
                     double t_end, double dt);

// 1/4 (I x I + sum_i r_i s_i x s_i); throws NotAState if not PSD.
Matrix4c bell_diagonal(double r1, double r2, double r3);

// 1/2 sum |eigenvalues of rho - sigma|
double trace_distance(const Matrix4c& a, const Matrix4c& b);

}  // namespace dsdet
