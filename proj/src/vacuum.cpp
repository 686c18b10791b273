#include "dsdet/vacuum.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace dsdet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogMax = 709.0;  // exp() overflows just above this

// log(1 + e^x), valid for any x
double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

// log(1 - e^x) for x < 0
double log1mexp(double x) { return std::log(-std::expm1(x)); }

// log Y(sign * omega)
double log_spectral_density(const DetectorParams& p, int sign) {
  const double w = p.omega;
  // common factor: log omega - log(2 pi) - log(1 - e^{-beta omega}) - log(1 - e^{2 alpha})
  const double common = std::log(w) - std::log(2.0 * kPi) -
                        log1mexp(-p.beta * w) - log1mexp(2.0 * p.alpha);
  if (sign > 0) return common + 2.0 * softplus(p.alpha - kPi * w);
  // Y(-w) = w e^{-beta w} (1 + e^{alpha + pi w})^2 / (2 pi (1 - e^{-beta w})(1 - e^{2 alpha}))
  return common - p.beta * w + 2.0 * softplus(p.alpha + kPi * w);
}

// log of the ratio Y(-omega)/Y(omega)
double log_density_ratio(const DetectorParams& p) {
  const double w = p.omega;
  return -p.beta * w + 2.0 * softplus(p.alpha + kPi * w) -
         2.0 * softplus(p.alpha - kPi * w);
}

}  // namespace

double spectral_density(const DetectorParams& p, int sign) {
  const double lg = log_spectral_density(p, sign);
  if (lg > kLogMax) throw Overflow("spectral density exceeds double range");
  return std::exp(lg);
}

double spectral_density_zero(const DetectorParams& p) {
  // (1 + e^alpha)^2 / (2 pi beta (1 - e^{2 alpha}))
  return std::exp(2.0 * softplus(p.alpha) - std::log(2.0 * kPi) -
                  std::log(p.beta) - std::log(-std::expm1(2.0 * p.alpha)));
}

KossakowskiSpectrum kossakowski(const DetectorParams& p) {
  KossakowskiSpectrum k;
  k.y_plus = spectral_density(p, +1);
  k.y_minus = spectral_density(p, -1);
  k.sigma_plus = 0.5 * (k.y_plus + k.y_minus);
  k.sigma_minus = 0.5 * (k.y_plus - k.y_minus);
  // T = (A - xB)/(A + xB) = tanh(-s/2) with s = log(xB/A)
  const double s = log_density_ratio(p);
  double t = std::tanh(-0.5 * s);
  // tanh saturates to +-1.0 once |s|/2 > ~19; keep the invariant |T| < 1
  if (t >= 1.0) t = std::nextafter(1.0, 0.0);
  if (t <= -1.0) t = std::nextafter(-1.0, 0.0);
  k.ratio = t;
  return k;
}

double dT_dbeta(const DetectorParams& p) {
  // 2 A B omega e^{-beta omega} / (A + e^{-beta omega} B)^2
  //   = (omega/2) / cosh^2(s/2) with s = log(e^{-beta omega} B / A)
  const double s = log_density_ratio(p);
  const double c = std::cosh(0.5 * s);
  if (!std::isfinite(c)) return 0.0;  // beta -> inf underflow
  return 0.5 * p.omega / (c * c);
}

double kms_defect(const DetectorParams& p) {
  const double s = log_density_ratio(p);
  if (s > kLogMax) throw Overflow("KMS ratio exceeds double range");
  return std::abs(std::exp(s) - std::exp(-p.beta * p.omega));
}

}  // namespace dsdet
