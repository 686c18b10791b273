#include "dsdet/metrology.hpp"

#include <array>
#include <cmath>

#include "dsdet/equilibrium.hpp"
#include "dsdet/vacuum.hpp"

namespace dsdet {

namespace {

// d mu_i / dT of the closed-form eigenvalues; mu4 is T-independent.
std::array<double, 4> dmu_dT(double t, double tau) {
  const double d2 = (t * t + 3.0) * (t * t + 3.0);
  return {
      -(tau + 3.0) * (1.0 - t) * (t + 3.0) / (2.0 * d2),
      (tau + 3.0) * (1.0 + t) * (3.0 - t) / (2.0 * d2),
      -2.0 * t * (tau + 3.0) / d2,
      0.0,
  };
}

// sum_i (mu_i')^2 / mu_i with the 0^2/0 convention
double classical_fisher(const std::array<double, 4>& mu,
                        const std::array<double, 4>& dmu) {
  double f = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (mu[i] <= 0.0) {
      if (std::abs(dmu[i]) > 1e-12)
        throw Degenerate("vanishing eigenvalue with non-vanishing derivative");
      continue;
    }
    f += dmu[i] * dmu[i] / mu[i];
  }
  return f;
}

}  // namespace

QfiValue qfi_spectral(const DetectorParams& p) {
  const double t = kossakowski(p).ratio;
  const double dt = dT_dbeta(p);
  const SpectralDecomp s = spectral(t, p.tau);
  std::array<double, 4> dmu = dmu_dT(t, p.tau);
  for (double& d : dmu) d *= dt;
  return QfiValue{classical_fisher(s.mu, dmu)};
}

QfiValue qfi_closed(const DetectorParams& p) {
  const double t = kossakowski(p).ratio;
  const double dt = dT_dbeta(p);
  if (dt == 0.0) return QfiValue{0.0};  // beta -> inf limit
  const double t2 = t * t;
  const double d = 3.0 + t2;
  return QfiValue{2.0 * (p.tau + 3.0) * (3.0 - t2) * dt * dt /
                  ((1.0 - t2) * d * d)};
}

QfiValue qfi_fd(const DetectorParams& p, double h) {
  if (!(h > 0.0) || h >= p.beta / 10.0)
    throw StepTooLarge("finite-difference step must satisfy 0 < h < beta/10");
  DetectorParams hi = p, lo = p;
  hi.beta += h;
  lo.beta -= h;
  const SpectralDecomp c = spectral(kossakowski(p).ratio, p.tau);
  const SpectralDecomp sp = spectral(kossakowski(hi).ratio, p.tau);
  const SpectralDecomp sm = spectral(kossakowski(lo).ratio, p.tau);
  std::array<double, 4> dmu;
  for (int i = 0; i < 4; ++i) dmu[i] = (sp.mu[i] - sm.mu[i]) / (2.0 * h);
  return QfiValue{classical_fisher(c.mu, dmu)};
}

PeakResult peak_qfi(double omega, double alpha, double tau, double lo,
                    double hi, double tol) {
  if (!(lo > 0.0) || !(hi > lo)) throw OutOfDomain("bracket", lo, "(0, inf), lo < hi");
  if (!(tol > 0.0)) throw OutOfDomain("tol", tol, "(0, inf)");

  int evals = 0;
  auto f = [&](double beta) {
    ++evals;
    return qfi_closed(validate(omega, beta, alpha, tau)).value;
  };

  // coarse log-spaced scan; guards against a peak outside the bracket
  constexpr int kScan = 64;
  const double llo = std::log(lo), lhi = std::log(hi);
  std::array<double, kScan> xs, ys;
  int best = 0;
  for (int i = 0; i < kScan; ++i) {
    xs[i] = std::exp(llo + (lhi - llo) * i / (kScan - 1));
    ys[i] = f(xs[i]);
    if (ys[i] > ys[best]) best = i;
  }
  if (best == 0 || best == kScan - 1)
    throw FlatLandscape("coarse scan maximum at bracket end");

  // golden-section refinement on the bracketing neighbors
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = xs[best - 1], b = xs[best + 1];
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  const double beta_star = 0.5 * (a + b);
  return PeakResult{beta_star, f(beta_star), lo, hi, evals};
}

}  // namespace dsdet
