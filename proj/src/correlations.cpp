#include "dsdet/correlations.hpp"

#include <algorithm>
#include <cmath>

#include "dsdet/equilibrium.hpp"

namespace dsdet {

namespace {

double clamp_unit(double v) {
  // round-off only; values beyond 1e-12 outside [0,1] are a bug upstream
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace

std::pair<double, double> theta_closed(double t, double tau) {
  const SpectralDecomp s = spectral(t, tau);
  const double r1 = std::sqrt(s.mu[0]), r2 = std::sqrt(s.mu[1]);
  const double r3 = std::sqrt(s.mu[2]), r4 = std::sqrt(s.mu[3]);
  const double theta11 = (r1 + r2) * (r3 + r4);
  const double theta33 = s.mu[0] + s.mu[1] + 2.0 * r3 * r4;
  return {theta11, theta33};
}

LquValue lqu_closed(double t, double tau) {
  const auto [t11, t33] = theta_closed(t, tau);
  return LquValue{clamp_unit(1.0 - std::max(t11, t33)), t11, t33};
}

Eigen::Matrix3d lqu_pi_matrix(const Matrix4c& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(0.5 * (rho + rho.adjoint()));
  if (es.eigenvalues().minCoeff() < -1e-8)
    throw NotPositive("state has eigenvalue below -1e-8");
  Eigen::Vector4d floored = es.eigenvalues().cwiseMax(0.0);
  Matrix4c root = es.eigenvectors() *
                  floored.cwiseSqrt().cast<complexd>().asDiagonal() *
                  es.eigenvectors().adjoint();
  Eigen::Matrix3d pi;
  std::array<Matrix4c, 3> probe;
  for (int i = 0; i < 3; ++i) probe[i] = pauli_on(0, i + 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      pi(i, j) = (root * probe[i] * root * probe[j]).trace().real();
  return pi;
}

LquValue lqu_oracle(const Matrix4c& rho) {
  const Eigen::Matrix3d pi = lqu_pi_matrix(rho);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(pi);
  const double lmax = es.eigenvalues().maxCoeff();
  return LquValue{clamp_unit(1.0 - lmax), pi(0, 0), pi(2, 2)};
}

}  // namespace dsdet
