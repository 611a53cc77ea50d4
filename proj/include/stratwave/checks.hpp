// Named verification suites over the bilinear quadrature, the angular
// machinery, and the norm inequalities.  Each suite returns one line per
// check; the CLI prints them and the acceptance driver aggregates them.

#pragma once

#include <string>
#include <vector>

#include "stratwave/bilinear.hpp"
#include "stratwave/norms.hpp"

namespace stratwave {

struct CheckLine {
    std::string name;
    double value = 0.0;
    double limit = 0.0;  // pass iff value <= limit
    bool pass = false;
};

bool all_pass(const std::vector<CheckLine>& lines);

// one-step integration by parts on the gap-in-p configuration (tilted legs at
// unbalanced radii feeding a near-horizontal output), refined once
std::vector<CheckLine> check_ibp(int points = 192, double tol = 1e-6);

// symmetrization identities with xi samples on the eta-quadrature lattice,
// where the eta -> xi - eta change of variables is grid-exact
std::vector<CheckLine> check_symmetrize(int points = 96, double tol = 1e-8);

// set-size bound and nonresonant boundary bound on a q-complete shell triple
std::vector<CheckLine> check_setsize(double ratio_limit = 4.0);

// partition of unity, Parseval, Bernstein for l = 2..6, and the [S, R_l]
// commutator on a smooth ring profile
std::vector<CheckLine> check_angular(int n = 512, double box = 320.0);

// pointwise Fourier control across a family of ring profiles: every per-field
// max ratio must stay below ratio_limit, and the family spread within x2
std::vector<CheckLine> check_fouriersup(int n = 128, double box = 40.0,
                                        double ratio_limit = 2.5e-3);

}  // namespace stratwave
