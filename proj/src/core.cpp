#include "dsdet/core.hpp"

#include <cmath>

namespace dsdet {

DetectorParams validate(double omega, double beta, double alpha, double tau) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw OutOfDomain("omega", omega, "(0, inf)");
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw OutOfDomain("beta", beta, "(0, inf)");
  if (!(alpha < 0.0) || !std::isfinite(alpha))
    throw OutOfDomain("alpha", alpha, "(-inf, 0)");
  if (!(tau >= -3.0 && tau <= 1.0))
    throw OutOfDomain("tau", tau, "[-3, 1]");
  return DetectorParams{omega, beta, alpha, tau};
}

const Eigen::Matrix2cd& pauli(int i) {
  static const std::array<Eigen::Matrix2cd, 4> s = [] {
    std::array<Eigen::Matrix2cd, 4> m;
    const complexd I(0.0, 1.0);
    m[0] << 1, 0, 0, 1;
    m[1] << 0, 1, 1, 0;
    m[2] << 0, -I, I, 0;
    m[3] << 1, 0, 0, -1;
    return m;
  }();
  return s[i];
}

Matrix4c pauli_on(int slot, int i) {
  const Eigen::Matrix2cd& s = pauli(i);
  const Eigen::Matrix2cd& id = pauli(0);
  Matrix4c out;
  const Eigen::Matrix2cd& left = (slot == 0) ? s : id;
  const Eigen::Matrix2cd& right = (slot == 0) ? id : s;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out.block<2, 2>(2 * r, 2 * c) = left(r, c) * right;
  return out;
}

Matrix4c gamma3() { return pauli_on(0, 3) + pauli_on(1, 3); }

Matrix4c bloch_to_matrix(double rho3, const std::array<double, 3>& rho_diag) {
  Matrix4c m = Matrix4c::Identity();
  m += rho3 * gamma3();
  for (int i = 0; i < 3; ++i) {
    Matrix4c sisi = pauli_on(0, i + 1) * pauli_on(1, i + 1);
    m += rho_diag[i] * sisi;
  }
  return 0.25 * m;
}

double tau_of_state(const Matrix4c& rho) {
  double t = 0.0;
  for (int i = 1; i <= 3; ++i) {
    Matrix4c sisi = pauli_on(0, i) * pauli_on(1, i);
    t += (rho * sisi).trace().real();
  }
  return t;
}

bool is_density_matrix(const Matrix4c& rho, std::string* why) {
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) {
    if (why) *why = "hermiticity defect " + std::to_string(herm);
    return false;
  }
  const double tr = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
  if (tr > 1e-12) {
    if (why) *why = "trace defect " + std::to_string(tr);
    return false;
  }
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(0.5 * (rho + rho.adjoint()));
  const double lmin = es.eigenvalues().minCoeff();
  if (lmin < -1e-10) {
    if (why) *why = "negative eigenvalue " + std::to_string(lmin);
    return false;
  }
  return true;
}

Matrix4c XState::matrix() const {
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = eta_minus;
  m(1, 1) = eta_22;
  m(2, 2) = eta_22;
  m(3, 3) = eta_plus;
  m(1, 2) = eta_23;
  m(2, 1) = eta_23;
  return m;
}

const std::array<Vector4c, 4>& SpectralDecomp::eigvecs() {
  static const std::array<Vector4c, 4> v = [] {
    std::array<Vector4c, 4> e;
    const double r = 1.0 / std::sqrt(2.0);
    e[0] << 1, 0, 0, 0;              // |00>
    e[1] << 0, 0, 0, 1;              // |11>
    e[2] << 0, r, r, 0;              // symmetric
    e[3] << 0, r, -r, 0;             // antisymmetric (singlet)
    return e;
  }();
  return v;
}

}  // namespace dsdet
