#include "dsdet/equilibrium.hpp"

namespace dsdet {

namespace {

void check_domain(double t_ratio, double tau) {
  if (!(t_ratio >= -1.0 && t_ratio <= 1.0))
    throw OutOfDomain("t_ratio", t_ratio, "[-1, 1]");
  if (!(tau >= -3.0 && tau <= 1.0))
    throw OutOfDomain("tau", tau, "[-3, 1]");
}

}  // namespace

XState xstate(double t, double tau) {
  check_domain(t, tau);
  const double d = 3.0 + t * t;
  XState x;
  x.eta_minus = (3.0 + tau) * (t - 1.0) * (t - 1.0) / (4.0 * d);
  x.eta_plus = (3.0 + tau) * (t + 1.0) * (t + 1.0) / (4.0 * d);
  x.eta_23 = (tau - t * t) / (2.0 * d);
  x.eta_22 = (3.0 - tau - (1.0 + tau) * t * t) / (4.0 * d);
  return x;
}

Matrix4c xstate_via_bloch(double t, double tau) {
  check_domain(t, tau);
  const double d = 3.0 + t * t;
  const double rho3 = -t * (tau + 3.0) / d;
  const double rdiag = (tau - t * t) / d;
  const double r33 = (t * t * (tau + 3.0) + tau - t * t) / d;
  return bloch_to_matrix(rho3, {rdiag, rdiag, r33});
}

SpectralDecomp spectral(double t, double tau) {
  check_domain(t, tau);
  const double d = 4.0 * (t * t + 3.0);
  SpectralDecomp s;
  s.mu[0] = (1.0 - t) * (1.0 - t) * (tau + 3.0) / d;
  s.mu[1] = (1.0 + t) * (1.0 + t) * (tau + 3.0) / d;
  s.mu[2] = (1.0 - t * t) * (tau + 3.0) / d;
  s.mu[3] = (1.0 - tau) / 4.0;
  return s;
}

}  // namespace dsdet
