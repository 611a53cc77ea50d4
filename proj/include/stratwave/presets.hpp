// Canonical test fields: localized spectral ring profiles for the harmonic
// analysis checks and small smooth real initial data for the solvers.

#pragma once

#include "stratwave/evolution.hpp"
#include "stratwave/grid.hpp"

namespace stratwave {

// spectral samples of amp * exp(-a (|xi| - r0)^2) * exp(-b (1 - cos(tau - tau0)))
Field ring_profile(const GridSpec& g, double amp, double a, double r0, double b, double tau0);

// smooth, localized, real, mean-free scalar of amplitude eps
Field bump_scalar(const GridSpec& g, double eps, int variant);

FlowState sqg_initial(const GridSpec& g, double eps);
FlowState boussinesq_initial(const GridSpec& g, double eps);  // (omega, rho) form

}  // namespace stratwave
