#include <doctest.h>

#include <cmath>
#include <random>

#include "dsdet/metrology.hpp"
#include "dsdet/vacuum.hpp"

using namespace dsdet;

namespace {

DetectorParams params(double omega, double beta, double alpha, double tau) {
  return validate(omega, beta, alpha, tau);
}

double rel(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-30});
}

}  // namespace

TEST_CASE("tau = -3 gives zero QFI on every route") {
  const DetectorParams p = params(3.0, 10.0, -6.0, -3.0);
  CHECK(qfi_spectral(p).value == 0.0);
  CHECK(qfi_closed(p).value == 0.0);
  CHECK(qfi_fd(p, 1e-4).value == 0.0);
}

TEST_CASE("closed form at the frozen BD-limit point") {
  // T = 0.8, dT/dbeta = 0.36: F = 2*3*(3-0.64)*0.36^2 / (0.36*3.64^2)
  const DetectorParams p = params(2.0, std::log(3.0), -50.0, 0.0);
  const double expected = 2.0 * 3.0 * 2.36 * 0.36 * 0.36 / (0.36 * 3.64 * 3.64);
  CHECK(qfi_closed(p).value == doctest::Approx(expected).epsilon(1e-10));
  CHECK(qfi_spectral(p).value == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("T = 0 reduction: F = (2(tau+3)/3) (dT/dbeta)^2") {
  // pick beta so that the ratio vanishes: e^{-beta omega} B = A
  const double omega = 1.0, alpha = -1.0;
  // solve A = e^{-beta} B for beta
  const double a = 2.0 * std::log1p(std::exp(alpha - M_PI * omega));
  const double b = 2.0 * std::log1p(std::exp(alpha + M_PI * omega));
  const double beta = b - a;
  const DetectorParams p = params(omega, beta, alpha, 0.5);
  CHECK(std::abs(kossakowski(p).ratio) < 1e-12);
  const double dt = dT_dbeta(p);
  CHECK(qfi_closed(p).value ==
        doctest::Approx(2.0 * (0.5 + 3.0) / 3.0 * dt * dt).epsilon(1e-10));
}

TEST_CASE("triple-route agreement on a randomized grid") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n < 300; ++n) {
    const DetectorParams p =
        params(0.5 + 15.0 * u(rng), 0.05 + 40.0 * u(rng), -0.3 - 12.0 * u(rng),
               -3.0 + 4.0 * u(rng));
    const double fs = qfi_spectral(p).value;
    CHECK(rel(qfi_closed(p).value, fs) <= 1e-10);
    // the FD route needs an unsaturated ratio: once |T| -> 1 the eigenvalue
    // differences cancel catastrophically in doubles
    const double t = kossakowski(p).ratio;
    if (fs > 1e-12 && 1.0 - t * t >= 1e-3)
      CHECK(std::abs(qfi_fd(p, 1e-5 * p.beta).value - fs) / fs <= 1e-6);
  }
}

TEST_CASE("finite difference converges at second order") {
  const DetectorParams p = params(1.0, 2.0, -1.0, 1.0);
  const double f = qfi_spectral(p).value;
  const double e1 = std::abs(qfi_fd(p, 1e-4 * p.beta).value - f);
  const double e2 = std::abs(qfi_fd(p, 5e-5 * p.beta).value - f);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.5));
}

TEST_CASE("qfi_fd rejects an oversized step") {
  CHECK_THROWS_AS(qfi_fd(params(3.0, 1.0, -6.0, 1.0), 0.2), StepTooLarge);
}

TEST_CASE("QFI scales linearly in tau + 3") {
  const double t1 = -1.0, t2 = 0.5;
  const double f1 = qfi_closed(params(3.0, 5.0, -6.0, t1)).value;
  const double f2 = qfi_closed(params(3.0, 5.0, -6.0, t2)).value;
  CHECK(f1 / f2 == doctest::Approx((t1 + 3.0) / (t2 + 3.0)).epsilon(1e-12));
}

TEST_CASE("QFI is nonnegative and decays at large beta") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double fmax = 0.0;
  for (int n = 0; n < 200; ++n) {
    const double f = qfi_closed(params(3.0, 0.1 + 30.0 * u(rng), -6.0, 1.0)).value;
    CHECK(f >= 0.0);
    fmax = std::max(fmax, f);
  }
  CHECK(qfi_closed(params(3.0, 100.0, -6.0, 1.0)).value < 1e-6 * fmax);
}

TEST_CASE("QFI is continuous in beta") {
  double prev = qfi_closed(params(3.0, 1.0, -6.0, 1.0)).value;
  for (int i = 1; i <= 2000; ++i) {
    const double cur = qfi_closed(params(3.0, 1.0 + 1e-3 * i, -6.0, 1.0)).value;
    if (prev > 1e-12 && cur > 1e-12) {
      const double jump = std::max(cur / prev, prev / cur);
      CHECK(jump < 10.0);
    }
    prev = cur;
  }
}

TEST_CASE("peak search brackets the figure-grid maxima") {
  const PeakResult high = peak_qfi(10.0, -6.0, 1.0, 0.05, 30.0, 1e-6);
  CHECK(high.qfi_star > 56.0);
  CHECK(high.qfi_star < 84.0);
  CHECK(high.qfi_star >= qfi_closed(params(10.0, 0.05, -6.0, 1.0)).value);
  CHECK(high.qfi_star >= qfi_closed(params(10.0, 30.0, -6.0, 1.0)).value);

  const PeakResult low = peak_qfi(10.0, -6.0, -2.0, 0.05, 30.0, 1e-6);
  CHECK(low.qfi_star > 12.0);
  CHECK(low.qfi_star < 18.0);
}

TEST_CASE("peak search is deterministic") {
  const PeakResult a = peak_qfi(10.0, -6.0, 1.0, 0.05, 30.0, 1e-8);
  const PeakResult b = peak_qfi(10.0, -6.0, 1.0, 0.05, 30.0, 1e-8);
  CHECK(a.beta_star == b.beta_star);
  CHECK(a.qfi_star == b.qfi_star);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("flat landscape is reported") {
  CHECK_THROWS_AS(peak_qfi(10.0, -6.0, -3.0, 0.05, 30.0, 1e-6), FlatLandscape);
}
