#pragma once

#include "dsdet/core.hpp"

namespace dsdet {

// Asymptotic two-detector equilibrium state as a function of the
// Kossakowski ratio T and the conserved initial-state constant tau.

// Closed-form X-state entries.  Requires |T| <= 1 and tau in [-3, 1].
XState xstate(double t_ratio, double tau);

// Same state built through the Bloch decomposition; agrees with
// xstate(...).matrix() entrywise to 1e-14.
Matrix4c xstate_via_bloch(double t_ratio, double tau);

// Closed-form eigenvalues with the fixed eigenbasis.  mu order:
// mu1 <-> |00>, mu2 <-> |11>, mu3 <-> symmetric, mu4 <-> antisymmetric.
SpectralDecomp spectral(double t_ratio, double tau);

}  // namespace dsdet
