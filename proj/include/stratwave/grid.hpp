// Doubly periodic grid on [-L/2, L/2)^2 with complex spectral coefficients.
//
// Conventions used everywhere in this project:
//   frequencies   xi = (2*pi/L) * (j1, j2),  j_i in [-n/2, n/2)
//   forward FFT   c_j = (1/n^2) * sum_x f(x) exp(-i xi_j . x)
//   inverse FFT   f(x) = sum_j c_j exp(+i xi_j . x)
//   L2 norms      ||f||_2 = L * sqrt(sum_j |c_j|^2)  (Plancherel)
// Storage is row-major FFTW order: index a in [0,n) holds j = a for a < n/2
// and j = a - n otherwise.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace stratwave {

using cplx = std::complex<double>;

struct GridSpec {
    int n = 256;
    double box_size = 40.0;

    GridSpec() = default;
    GridSpec(int n_, double L_);

    double dxi() const { return 2.0 * pi() / box_size; }
    double dx() const { return box_size / n; }
    double freq_max() const { return dxi() * (n / 2); }

    // storage index -> signed mode number
    int mode(int a) const { return a < n / 2 ? a : a - n; }
    // signed mode number -> storage index
    int store(int j) const { return j >= 0 ? j : j + n; }

    double freq(int a) const { return dxi() * mode(a); }
    double coord(int a) const { return dx() * mode(a); }

    bool operator==(const GridSpec& o) const {
        return n == o.n && box_size == o.box_size;
    }

    static double pi();
};

// A scalar field in either representation; `coeff` always holds n*n complex
// values, row-major, index a1*n + a2.
struct Field {
    GridSpec grid;
    std::vector<cplx> coeff;

    Field() = default;
    explicit Field(const GridSpec& g) : grid(g), coeff(size_t(g.n) * g.n) {}

    cplx& at(int a1, int a2) { return coeff[size_t(a1) * grid.n + a2]; }
    const cplx& at(int a1, int a2) const { return coeff[size_t(a1) * grid.n + a2]; }
};

// Out-of-place complex 2-D transforms with the normalization above.
Field fft_forward(const Field& physical);
Field fft_inverse(const Field& spectral);

double l2_norm_spectral(const Field& spec);
double l2_norm_physical(const Field& phys);
double linf_norm(const Field& f);

}  // namespace stratwave
