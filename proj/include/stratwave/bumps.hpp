// Smooth dyadic bump family and the bucketized shell partition.
//
// psi is even, C-infinity, identically 1 on [-4/5, 4/5], supported in
// [-8/5, 8/5], built from the standard exp(-1/x) glue so it is reproducible
// bit for bit.  phi(s) = psi(s) - psi(2 s).
//
// A bucketized family over integer indices j in [j_floor, j_top] sums to 1
// exactly:
//   j == j_floor : psi(2^-j s)
//   interior     : phi(2^-j s)
//   j == j_top   : 1 - psi(2^-(j_top - 1) s)

#pragma once

#include <cmath>

namespace stratwave {

double psi_bump(double s);
inline double phi_bump(double s) { return psi_bump(s) - psi_bump(2.0 * s); }

// weight of bucket j evaluated at s >= 0
double bucket_weight(int j, int j_floor, int j_top, double s);

// nearest dyadic index: the j maximizing phi(2^-j s), clamped to the range
int bucket_of(double s, int j_floor, int j_top);

}  // namespace stratwave
