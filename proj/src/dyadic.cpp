#include "stratwave/dyadic.hpp"

#include <cmath>
#include <map>

#include "stratwave/bumps.hpp"
#include "stratwave/spectral_ops.hpp"

namespace stratwave {

void DyadicIndex::validate() const {
    if (p > 0) throw std::invalid_argument("p must be <= 0");
    if (q && *q > 0) throw std::invalid_argument("q must be <= 0");
    if (l) {
        if (*l < 0) throw std::invalid_argument("l must be >= 0");
        if (*l + p < 0) throw std::invalid_argument("l + p must be >= 0");
    }
}

DyadicRange::DyadicRange(const GridSpec& g) {
    // smallest nonzero |xi| is dxi, largest is sqrt(2) * dxi * n/2
    k_floor = (int)std::floor(std::log2(g.dxi())) - 1;
    k_top = (int)std::ceil(std::log2(g.dxi() * g.n * 0.7072)) + 1;
}

double shell_weight_k(int k, const DyadicRange& r, double xi1, double xi2) {
    return bucket_weight(k, r.k_floor, r.k_top, std::hypot(xi1, xi2));
}

double shell_weight_p(int p, double xi1, double xi2) {
    double rad = std::hypot(xi1, xi2);
    double s = rad == 0.0 ? 0.0 : std::abs(xi2) / rad;
    return bucket_weight(p, kAngularFloor, 0, s);
}

double shell_weight_q(int q, double xi1, double xi2) {
    return bucket_weight(q, kAngularFloor, 0, std::abs(lambda_symbol(xi1, xi2)));
}

double dyadic_weight(const DyadicIndex& idx, const DyadicRange& r, double xi1, double xi2) {
    double w = shell_weight_k(idx.k, r, xi1, xi2) * shell_weight_p(idx.p, xi1, xi2);
    if (idx.q) w *= shell_weight_q(*idx.q, xi1, xi2);
    return w;
}

Field project(const Field& spec, const DyadicIndex& idx, const DyadicRange& r) {
    idx.validate();
    Field out(spec.grid);
    const GridSpec& g = spec.grid;
    for (int a1 = 0; a1 < g.n; ++a1) {
        double xi1 = g.freq(a1);
        for (int a2 = 0; a2 < g.n; ++a2) {
            double xi2 = g.freq(a2);
            out.at(a1, a2) = dyadic_weight(idx, r, xi1, xi2) * spec.at(a1, a2);
        }
    }
    return out;
}

namespace {

// indices whose bucket weight can be nonzero at scale s
void candidates(double s, int j_floor, int j_top, int* out, int& count) {
    count = 0;
    out[count++] = j_floor;
    out[count++] = j_top;
    if (s > 0.0) {
        int jc = (int)std::lround(std::log2(s));
        for (int j = jc - 2; j <= jc + 2; ++j)
            if (j > j_floor && j < j_top) out[count++] = j;
    }
}

}  // namespace

std::vector<ShellMass> shell_masses(const Field& spec, const DyadicRange& r, double skip_below) {
    const GridSpec& g = spec.grid;
    std::map<std::pair<int, int>, double> acc;
    double total = 0.0;
    int ks[8], ps[8];
    int nk, np;
    for (int a1 = 0; a1 < g.n; ++a1) {
        double xi1 = g.freq(a1);
        for (int a2 = 0; a2 < g.n; ++a2) {
            double xi2 = g.freq(a2);
            double m = std::norm(spec.at(a1, a2));
            if (m == 0.0) continue;
            total += m;
            double rad = std::hypot(xi1, xi2);
            double s = rad == 0.0 ? 0.0 : std::abs(xi2) / rad;
            candidates(rad, r.k_floor, r.k_top, ks, nk);
            candidates(s, kAngularFloor, 0, ps, np);
            for (int i = 0; i < nk; ++i) {
                double wk = bucket_weight(ks[i], r.k_floor, r.k_top, rad);
                if (wk == 0.0) continue;
                for (int j = 0; j < np; ++j) {
                    double wp = bucket_weight(ps[j], kAngularFloor, 0, s);
                    if (wp == 0.0) continue;
                    acc[{ks[i], ps[j]}] += wk * wk * wp * wp * m;
                }
            }
        }
    }
    std::vector<ShellMass> out;
    for (const auto& [kp, mass] : acc) {
        double l2 = g.box_size * std::sqrt(mass);
        if (total > 0.0 && mass < skip_below * total) continue;
        out.push_back({kp.first, kp.second, l2});
    }
    return out;
}

}  // namespace stratwave
