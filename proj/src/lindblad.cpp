#include "dsdet/lindblad.hpp"

#include <cmath>

#include "dsdet/equilibrium.hpp"
#include "dsdet/vacuum.hpp"

namespace dsdet {

namespace {

// Omega_ij = kappa+ d_ij - i kappa- eps_ij3 + tau_k d_3i d_3j
Eigen::Matrix3cd kossakowski_matrix(const LindbladCoeffs& c) {
  const complexd I(0.0, 1.0);
  Eigen::Matrix3cd o = c.kappa_plus * Eigen::Matrix3cd::Identity();
  o(0, 1) -= I * c.kappa_minus;
  o(1, 0) += I * c.kappa_minus;
  o(2, 2) += c.tau_k;
  return o;
}

}  // namespace

LindbladCoeffs LindbladCoeffs::from_params(const DetectorParams& p) {
  const KossakowskiSpectrum k = kossakowski(p);
  return LindbladCoeffs{k.sigma_plus, k.sigma_minus,
                        spectral_density_zero(p) - k.sigma_plus, p.omega};
}

Matrix4c generator(const Matrix4c& rho, const LindbladCoeffs& c) {
  const Matrix4c h = 0.5 * c.omega * gamma3();
  const complexd I(0.0, 1.0);
  Matrix4c out = -I * (h * rho - rho * h);

  const Eigen::Matrix3cd omega = kossakowski_matrix(c);
  // double sum over detectors (k, l) with the single shared Omega matrix
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const complexd w = 0.5 * omega(i, j);
          if (w == 0.0) continue;
          const Matrix4c sj = pauli_on(k, j + 1);
          const Matrix4c si = pauli_on(l, i + 1);
          const Matrix4c prod = si * sj;
          out += w * (2.0 * sj * rho * si - prod * rho - rho * prod);
        }
      }
    }
  }
  return out;
}

Trajectory integrate(const Matrix4c& rho0, const LindbladCoeffs& c,
                     double t_end, double dt) {
  if (!(dt > 0.0) || dt > 0.01 / c.kappa_plus)
    throw StepTooLarge("dt must satisfy 0 < dt <= 0.01/kappa_plus");
  if (t_end < dt) throw OutOfDomain("t_end", t_end, "[dt, inf)");

  const double t_ratio = c.kappa_minus / c.kappa_plus;
  const Matrix4c target = xstate(t_ratio, tau_of_state(rho0)).matrix();

  Trajectory traj;
  const long nsteps = static_cast<long>(std::ceil(t_end / dt));
  const long sample_every = std::max(1L, nsteps / 200);

  // the generator is linear; precompute its 16x16 matrix on vec(rho)
  Eigen::Matrix<complexd, 16, 16> liou;
  for (int col = 0; col < 16; ++col) {
    Matrix4c basis = Matrix4c::Zero();
    basis(col % 4, col / 4) = 1.0;  // column-major vec
    const Matrix4c image = generator(basis, c);
    liou.col(col) = Eigen::Map<const Eigen::Matrix<complexd, 16, 1>>(image.data());
  }

  Matrix4c rho = rho0;
  auto record = [&](double t) {
    traj.times.push_back(t);
    traj.states.push_back(rho);
    traj.distance.push_back(trace_distance(rho, target));
  };
  record(0.0);

  using Vec16 = Eigen::Matrix<complexd, 16, 1>;
  Vec16 v = Eigen::Map<const Vec16>(rho.data());
  for (long n = 0; n < nsteps; ++n) {
    const Vec16 k1 = liou * v;
    const Vec16 k2 = liou * (v + 0.5 * dt * k1);
    const Vec16 k3 = liou * (v + 0.5 * dt * k2);
    const Vec16 k4 = liou * (v + dt * k3);
    v += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = Eigen::Map<const Matrix4c>(v.data());
    rho = 0.5 * (rho + rho.adjoint()).eval();
    v = Eigen::Map<const Vec16>(rho.data());
    if (std::abs(rho.trace().real() - 1.0) > 1e-6)
      throw StepUnstable("trace drifted beyond 1e-6");
    if ((n + 1) % sample_every == 0 || n + 1 == nsteps) record((n + 1) * dt);
  }

  traj.final_distance = traj.distance.back();
  traj.converged = traj.final_distance < 1e-6;
  return traj;
}

Matrix4c bell_diagonal(double r1, double r2, double r3) {
  const Matrix4c m = bloch_to_matrix(0.0, {r1, r2, r3});
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(m);
  if (es.eigenvalues().minCoeff() < -1e-12)
    throw NotAState("Bell-diagonal coefficients give a negative eigenvalue");
  return m;
}

double trace_distance(const Matrix4c& a, const Matrix4c& b) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(a - b);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace dsdet
