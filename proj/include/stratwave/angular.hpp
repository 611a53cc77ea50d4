// Polar resampling and angular Littlewood-Paley projections.
//
// A field f(r, tau) = sum_n f_n(r) exp(i n tau) is decomposed with
// f_n(r) = (1/2pi) integral f exp(-i n tau) dtau.  The angular projection
// family over l >= l_floor is the bucketized partition from bumps.hpp applied
// to |n|; with l_floor = -p this is exactly the p-adjusted family R_l^p
// (zero when l + p < 0, the cumulative bump when l + p = 0, a dyadic bump
// above).  Resampling between the Cartesian lattice and the polar grid is
// bicubic (Catmull-Rom); radii mirror through the origin with a tau + pi
// flip, and points beyond rho_max read as zero.

#pragma once

#include <functional>

#include "stratwave/grid.hpp"

namespace stratwave {

struct PolarGrid {
    int n_rho = 256;
    int n_tau = 1024;
    double rho_max = 1.0;

    double drho() const { return rho_max / n_rho; }
    double rho(int i) const { return (i + 0.5) * drho(); }
    double dtau() const { return 2.0 * GridSpec::pi() / n_tau; }
    double tau(int j) const { return j * dtau(); }

    static PolarGrid for_grid(const GridSpec& g, bool spectral);
};

struct PolarField {
    PolarGrid pg;
    std::vector<cplx> val;  // n_rho rings, each n_tau samples, ring-major

    PolarField() = default;
    explicit PolarField(const PolarGrid& p) : pg(p), val(size_t(p.n_rho) * p.n_tau) {}
    cplx& at(int i, int j) { return val[size_t(i) * pg.n_tau + j]; }
    const cplx& at(int i, int j) const { return val[size_t(i) * pg.n_tau + j]; }
};

// `spacing` is the lattice spacing of f.coeff (grid.dxi() for a spectral
// representation, grid.dx() for a physical one)
PolarField to_polar(const Field& f, double spacing, const PolarGrid& pg);
Field from_polar(const PolarField& pf, const GridSpec& g, double spacing);

// ring-wise angular FFT; at(i, j) of the result holds f_n(rho_i) with the
// signed mode n in FFTW wrap order (j < n_tau/2 means n = j)
PolarField angular_transform(const PolarField& pf);
PolarField angular_inverse(const PolarField& coeffs);

// weight of the angular bucket l (family floor l_floor) at signed mode n
double angular_bucket_weight(int l, int l_floor, int n_tau, int n);
// R_l^p weight: 0 if l+p < 0, cumulative bump at l+p == 0, dyadic above
double rlp_weight(int l, int p, int n_tau, int n);

// multiply angular coefficients by w(n) and return to the (r, tau) samples
PolarField apply_angular_weight(const PolarField& pf, const std::function<double(int)>& w);

double polar_l2(const PolarField& pf);       // sqrt(int |f|^2 r dr dtau)
double coeff_l2(const PolarField& coeffs);   // sqrt(2pi sum_n int |f_n|^2 r dr)

}  // namespace stratwave
