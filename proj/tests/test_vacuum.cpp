#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dsdet/vacuum.hpp"

using namespace dsdet;

namespace {
DetectorParams params(double omega, double beta, double alpha) {
  return validate(omega, beta, alpha, 0.0);
}
}  // namespace

TEST_CASE("spectral density in the Bunch-Davies limit") {
  // alpha-dependent factors -> 1, leaving omega / (2 pi (1 - e^{-beta omega}))
  const DetectorParams p = params(1.0, 2.0, -50.0);
  const double expected = 1.0 / (2.0 * M_PI * (1.0 - std::exp(-2.0)));
  CHECK(spectral_density(p, +1) == doctest::Approx(expected).epsilon(1e-13));
  // detailed balance: Y(-omega) = e^{-beta omega} Y(omega)
  CHECK(spectral_density(p, -1) ==
        doctest::Approx(std::exp(-2.0) * expected).epsilon(1e-13));
}

TEST_CASE("spectral density is strictly positive for both signs") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n < 200; ++n) {
    const double omega = std::exp(std::log(1e-2) + u(rng) * std::log(1e5));
    const double beta = std::exp(std::log(1e-3) + u(rng) * std::log(1e5));
    const double alpha = -std::exp(std::log(1e-3) + u(rng) * std::log(5e4));
    if (beta * omega > 600.0) continue;  // Y(-omega) underflows to 0 there
    // Y(-omega) genuinely exceeds double range when the inverted-population
    // exponent dominates; skip those points
    if (2.0 * std::max(0.0, alpha + M_PI * omega) - beta * omega +
            std::log(omega) > 650.0)
      continue;
    const DetectorParams p = params(omega, beta, alpha);
    CHECK(spectral_density(p, +1) > 0.0);
    CHECK(spectral_density(p, -1) > 0.0);
  }
}

TEST_CASE("kossakowski ratio: BD closed form and frozen alpha-vacuum value") {
  // BD limit: T -> tanh(beta omega / 2); tanh(ln 3) = 0.8
  const KossakowskiSpectrum bd = kossakowski(params(2.0, std::log(3.0), -50.0));
  CHECK(bd.ratio == doctest::Approx(0.8).epsilon(1e-13));

  // high-precision direct evaluation, frozen before implementation
  const KossakowskiSpectrum k = kossakowski(params(1.0, 2.0, -1.0));
  CHECK(k.ratio == doctest::Approx(-0.84456490991781176).epsilon(1e-13));
}

TEST_CASE("kossakowski invariants on a random log-uniform grid") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n < 500; ++n) {
    const double omega = std::exp(std::log(1e-2) + u(rng) * std::log(1e5));
    const double beta = std::exp(std::log(1e-3) + u(rng) * std::log(1e7));
    const double alpha = -std::exp(std::log(1e-3) + u(rng) * std::log(5e4));
    // skip points where Y(-omega) exceeds double range
    if (2.0 * std::max(0.0, alpha + M_PI * omega) - beta * omega +
            std::log(omega) > 650.0)
      continue;
    const KossakowskiSpectrum k = kossakowski(params(omega, beta, alpha));
    CHECK(k.sigma_plus > 0.0);
    CHECK(std::abs(k.ratio) < 1.0);
    // sigma_plus + sigma_minus = y_plus, sigma_plus - sigma_minus = y_minus
    // rounding scales with sigma_plus, the larger of the two magnitudes
    CHECK(std::abs(k.sigma_plus + k.sigma_minus - k.y_plus) <=
          1e-12 * k.sigma_plus);
    CHECK(std::abs(k.sigma_plus - k.sigma_minus - k.y_minus) <=
          1e-12 * k.sigma_plus);
    // consistency with the factored ratio
    if (k.y_minus > 0.0)
      CHECK(std::abs(k.sigma_minus / k.sigma_plus - k.ratio) <=
            1e-14 * std::max(1.0, std::abs(k.ratio)));
  }
}

TEST_CASE("exact BD-limit law for alpha <= -100") {
  // alpha + pi omega must stay far below zero for the alpha-dependence to be
  // negligible at double precision; omega <= 20.1 needs alpha <= -100
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n < 200; ++n) {
    const double omega = 0.1 + 20.0 * u(rng);
    const double beta = 0.05 + 30.0 * u(rng);
    const double alpha = -100.0 - 20.0 * u(rng);
    const KossakowskiSpectrum k = kossakowski(params(omega, beta, alpha));
    CHECK(std::abs(k.ratio - std::tanh(0.5 * beta * omega)) < 1e-12);
  }
}

TEST_CASE("dT_dbeta: BD closed form and positivity") {
  // (omega/2) sech^2(beta omega / 2) at omega=2, beta=ln 3: 1 - 0.8^2
  CHECK(dT_dbeta(params(2.0, std::log(3.0), -50.0)) ==
        doctest::Approx(0.36).epsilon(1e-13));

  std::mt19937 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n < 300; ++n) {
    // beta*omega capped near 700: beyond that cosh^2 overflows and the
    // derivative underflows to the beta -> inf limit
    const DetectorParams p =
        params(0.5 + 20.0 * u(rng), 0.05 + 30.0 * u(rng), -0.3 - 15.0 * u(rng));
    CHECK(dT_dbeta(p) > 0.0);
  }
}

TEST_CASE("dT_dbeta matches a central finite difference of the ratio") {
  for (const auto& [omega, beta, alpha] :
       {std::array<double, 3>{1.0, 2.0, -1.0}, {3.0, 10.0, -6.0},
        {10.0, 0.5, -2.5}, {0.7, 8.0, -0.4}}) {
    const DetectorParams p = params(omega, beta, alpha);
    const double h = 1e-5 * beta;
    DetectorParams hi = p, lo = p;
    hi.beta += h;
    lo.beta -= h;
    const double fd = (kossakowski(hi).ratio - kossakowski(lo).ratio) / (2.0 * h);
    CHECK(dT_dbeta(p) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("ratio is strictly increasing in beta") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n < 200; ++n) {
    const double omega = 0.2 + 10.0 * u(rng);
    const double alpha = -0.3 - 12.0 * u(rng);
    const double b1 = 0.05 + 20.0 * u(rng);
    const double b2 = b1 * (1.1 + u(rng));
    const double r1 = kossakowski(params(omega, b1, alpha)).ratio;
    const double r2 = kossakowski(params(omega, b2, alpha)).ratio;
    // strict ordering is only attestable away from tanh saturation
    if (std::max(std::abs(r1), std::abs(r2)) > 1.0 - 1e-9) continue;
    CHECK(r1 < r2);
  }
}

TEST_CASE("KMS defect diagnostics") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n < 100; ++n)
    CHECK(kms_defect(params(0.2 + 10.0 * u(rng), 0.1 + 20.0 * u(rng), -100.0)) <
          1e-12);

  // frozen regression value: non-thermality of the alpha = -1 sector
  CHECK(kms_defect(params(1.0, 2.0, -1.0)) ==
        doctest::Approx(11.731772130813041).epsilon(1e-12));

  // the defect decays monotonically toward the thermal limit as |alpha| grows
  const double d1 = kms_defect(params(1.0, 2.0, -1.0));
  const double d3 = kms_defect(params(1.0, 2.0, -3.0));
  const double d6 = kms_defect(params(1.0, 2.0, -6.0));
  CHECK(d1 > d3);
  CHECK(d3 > d6);
}

TEST_CASE("zero-frequency limit matches a small-omega evaluation") {
  for (double alpha : {-0.5, -2.0, -8.0}) {
    const DetectorParams p = params(1.0, 3.0, alpha);
    const DetectorParams tiny = params(1e-8, 3.0, alpha);
    CHECK(spectral_density_zero(p) ==
          doctest::Approx(spectral_density(tiny, +1)).epsilon(1e-6));
  }
}
