#pragma once

#include "dsdet/core.hpp"

namespace dsdet {

// Spectral density of the massless scalar field in alpha-vacua and the
// Kossakowski coefficients derived from it.  All exponentials are combined
// in log domain before exponentiation; the ratio T is computed from the
// factored form, never from a difference of spectral densities.

struct KossakowskiSpectrum {
  double y_plus;       // Y(omega)
  double y_minus;      // Y(-omega)
  double sigma_plus;   // (Y(omega) + Y(-omega)) / 2
  double sigma_minus;  // (Y(omega) - Y(-omega)) / 2
  double ratio;        // T = sigma_minus / sigma_plus, strictly inside (-1, 1)
};

// Y(sign * omega); strictly positive for both signs.
double spectral_density(const DetectorParams& p, int sign);

// omega -> 0+ limit of the spectral density (direct substitution is 0/0).
double spectral_density_zero(const DetectorParams& p);

KossakowskiSpectrum kossakowski(const DetectorParams& p);

// dT/dbeta, strictly positive (0 only when the ratio has saturated in
// double precision, the beta -> inf regime).
double dT_dbeta(const DetectorParams& p);

// |Y(-omega)/Y(omega) - exp(-beta*omega)|; zero iff thermal at 1/beta.
double kms_defect(const DetectorParams& p);

}  // namespace dsdet
