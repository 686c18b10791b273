#pragma once

#include <utility>

#include "dsdet/core.hpp"

namespace dsdet {

// Local quantum uncertainty of the equilibrium family, via the closed-form
// diagonal of the skew-information matrix and via a general matrix-square-
// root oracle.

struct LquValue {
  double value;    // 1 - max(theta11, theta33), in [0, 1]
  double theta11;  // = theta22 by the state's symmetry
  double theta33;
};

// Closed-form diagonal entries of the Pi matrix.  In terms of the state's
// eigenvalues:
//   theta11 = (sqrt(mu1) + sqrt(mu2)) (sqrt(mu3) + sqrt(mu4))
//   theta33 = mu1 + mu2 + 2 sqrt(mu3 mu4)
std::pair<double, double> theta_closed(double t_ratio, double tau);

LquValue lqu_closed(double t_ratio, double tau);

// General-state route: sqrt(rho) by spectral decomposition (eigenvalue
// floor at 0), Pi_ij = Tr[sqrt(rho) (s_i x I) sqrt(rho) (s_j x I)],
// LQU = 1 - lambda_max(Pi).  Throws NotPositive below -1e-8.
LquValue lqu_oracle(const Matrix4c& rho);

// The full 3x3 Pi matrix of the oracle route (exposed for tests; it is
// real symmetric PSD, and diagonal on the X-family).
Eigen::Matrix3d lqu_pi_matrix(const Matrix4c& rho);

}  // namespace dsdet
