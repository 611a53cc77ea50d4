#include "stratwave/bumps.hpp"

#include <algorithm>

namespace stratwave {

namespace {

double glue(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

// smooth step: 0 for x <= 0, 1 for x >= 1
double step(double x) {
    double a = glue(x);
    double b = glue(1.0 - x);
    return a / (a + b);
}

}  // namespace

double psi_bump(double s) {
    s = std::abs(s);
    if (s <= 0.8) return 1.0;
    if (s >= 1.6) return 0.0;
    return 1.0 - step((s - 0.8) / 0.8);
}

double bucket_weight(int j, int j_floor, int j_top, double s) {
    if (j_floor == j_top) return 1.0;
    if (j == j_floor) return psi_bump(std::ldexp(s, -j_floor));
    if (j == j_top) return 1.0 - psi_bump(std::ldexp(s, -(j_top - 1)));
    return phi_bump(std::ldexp(s, -j));
}

int bucket_of(double s, int j_floor, int j_top) {
    if (s <= 0.0) return j_floor;
    // phi(2^-j s) peaks where 2^-j s is near 1.13; round log2
    int j = (int)std::lround(std::log2(s));
    return std::clamp(j, j_floor, j_top);
}

}  // namespace stratwave
