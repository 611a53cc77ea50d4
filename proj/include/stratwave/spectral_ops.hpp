// Fourier multipliers, the dispersive semigroup, and the scaling/rotation
// vector fields S = x.grad and W = x_perp.grad.
//
// perp convention, used globally: v_perp = (-v2, v1).
// Every symbol with a |xi| denominator returns 0 at the zero mode.

#pragma once

#include "stratwave/grid.hpp"

namespace stratwave {

// Lambda(xi) = xi1/|xi|, the dispersion relation; Lambda(0) := 0.
double lambda_symbol(double xi1, double xi2);

// multiply coefficients by exp(sign * i * t * Lambda(xi))
Field apply_semigroup(const Field& spec, double t, int sign);

// Riesz transform R1: symbol -i*Lambda(xi)
Field apply_riesz1(const Field& spec);

// |grad|^s, zero mode mapped to 0 (required for negative s)
Field apply_modgrad_pow(const Field& spec, double s);

// partial derivative along axis (0 or 1): symbol i*xi_a
Field apply_ddx(const Field& spec, int axis);

// zero every mode with max(|j1|,|j2|) > n/3
Field dealias(const Field& spec);

// S f = x . grad f and W f = x_perp . grad f on the physical representation;
// gradients are spectral, coordinates are the centered box coordinates.
// Fields touching the box boundary make these meaningless, so a warning flag
// is latched when more than `warn_fraction` of the L2 mass sits outside the
// central half-box.
struct VfResult {
    Field field;              // physical representation
    bool boundary_warning = false;
    double boundary_fraction = 0.0;
};
VfResult apply_scaling_vf(const Field& physical, double warn_fraction = 1e-10);
VfResult apply_rotation_vf(const Field& physical, double warn_fraction = 1e-10);

// fraction of squared L2 mass outside [-L/4, L/4)^2
double boundary_mass_fraction(const Field& physical);

// max |c(j) - conj(c(-j))| over all modes, for real-field sanity checks
double hermitian_symmetry_error(const Field& spec);

// inhomogeneous Sobolev norm L * sqrt(sum (1+|xi|^2)^s |c|^2)
double sobolev_norm(const Field& spec, double s);

}  // namespace stratwave
