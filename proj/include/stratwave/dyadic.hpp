// Anisotropic frequency localization P_{k,p} and P_{k,p,q}.
//
// Size conventions for a frequency xi:
//   |xi| ~ 2^k          radial shell
//   sqrt(1 - Lambda(xi)^2) = |xi2|/|xi| ~ 2^p   distance from horizontal axis
//   |Lambda(xi)| = |xi1|/|xi| ~ 2^q             distance from vertical axis
// p and q always lie in [-40, 0]; the k range is grid-derived.  All three
// directions use the bucketized partition from bumps.hpp, so summing a weight
// over its full index range gives exactly 1 on every mode (including xi = 0,
// which lands in the k floor bucket).

#pragma once

#include <optional>
#include <vector>

#include "stratwave/grid.hpp"

namespace stratwave {

constexpr int kAngularFloor = -40;  // floor bucket for both p and q

struct DyadicIndex {
    int k = 0;
    int p = 0;
    std::optional<int> q;
    std::optional<int> l;

    void validate() const;
};

struct DyadicRange {
    int k_floor, k_top;  // grid-dependent
    int p_floor = kAngularFloor, p_top = 0;
    int q_floor = kAngularFloor, q_top = 0;

    explicit DyadicRange(const GridSpec& g);
};

// bucket weights at a single frequency point
double shell_weight_k(int k, const DyadicRange& r, double xi1, double xi2);
double shell_weight_p(int p, double xi1, double xi2);
double shell_weight_q(int q, double xi1, double xi2);

// weight of P_{k,p} (and optionally the q refinement) at one frequency
double dyadic_weight(const DyadicIndex& idx, const DyadicRange& r, double xi1, double xi2);

// multiply spectral coefficients by the dyadic weight
Field project(const Field& spec, const DyadicIndex& idx, const DyadicRange& r);

// L2 norm of P_{k,p} f per (k,p), skipping shells below `skip_below` times the
// total; returns populated shells only.
struct ShellMass {
    int k, p;
    double l2;
};
std::vector<ShellMass> shell_masses(const Field& spec, const DyadicRange& r,
                                    double skip_below = 1e-14);

}  // namespace stratwave
