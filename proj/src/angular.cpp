#include "stratwave/angular.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

#include "stratwave/bumps.hpp"

namespace stratwave {

PolarGrid PolarGrid::for_grid(const GridSpec& g, bool spectral) {
    PolarGrid pg;
    pg.n_rho = g.n;
    pg.n_tau = 4 * g.n;
    pg.rho_max = (spectral ? g.dxi() : g.dx()) * (g.n / 2);
    return pg;
}

namespace {

void catmull_rom(double t, double w[4]) {
    double t2 = t * t, t3 = t2 * t;
    w[0] = 0.5 * (-t3 + 2.0 * t2 - t);
    w[1] = 0.5 * (3.0 * t3 - 5.0 * t2 + 2.0);
    w[2] = 0.5 * (-3.0 * t3 + 4.0 * t2 + t);
    w[3] = 0.5 * (t3 - t2);
}

cplx sample_lattice(const Field& f, double spacing, double y1, double y2) {
    const GridSpec& g = f.grid;
    double u1 = y1 / spacing, u2 = y2 / spacing;
    int b1 = (int)std::floor(u1), b2 = (int)std::floor(u2);
    double w1[4], w2[4];
    catmull_rom(u1 - b1, w1);
    catmull_rom(u2 - b2, w2);
    cplx acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        int j1 = b1 - 1 + i;
        if (j1 < -g.n / 2 || j1 >= g.n / 2) continue;
        for (int j = 0; j < 4; ++j) {
            int j2 = b2 - 1 + j;
            if (j2 < -g.n / 2 || j2 >= g.n / 2) continue;
            acc += w1[i] * w2[j] * f.at(g.store(j1), g.store(j2));
        }
    }
    return acc;
}

struct RingPlanCache {
    std::mutex mu;
    std::map<std::pair<int, int>, fftw_plan> plans;

    fftw_plan get(int n, int sign) {
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(n, sign);
        auto it = plans.find(key);
        if (it != plans.end()) return it->second;
        fftw_complex* buf = fftw_alloc_complex(n);
        fftw_plan p = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE);
        fftw_free(buf);
        plans[key] = p;
        return p;
    }
};

RingPlanCache g_ring_plans;

}  // namespace

PolarField to_polar(const Field& f, double spacing, const PolarGrid& pg) {
    PolarField out(pg);
    for (int i = 0; i < pg.n_rho; ++i) {
        double r = pg.rho(i);
        for (int j = 0; j < pg.n_tau; ++j) {
            double t = pg.tau(j);
            out.at(i, j) = sample_lattice(f, spacing, r * std::cos(t), r * std::sin(t));
        }
    }
    return out;
}

namespace {

// polar accessor with mirrored radius (tau + pi flip) and zero beyond rho_max
cplx polar_value(const PolarField& pf, int i, int j) {
    const PolarGrid& pg = pf.pg;
    int jj = ((j % pg.n_tau) + pg.n_tau) % pg.n_tau;
    if (i < 0) {
        i = -1 - i;
        jj = (jj + pg.n_tau / 2) % pg.n_tau;
    }
    if (i >= pg.n_rho) return 0.0;
    return pf.at(i, jj);
}

}  // namespace

Field from_polar(const PolarField& pf, const GridSpec& g, double spacing) {
    Field out(g);
    const PolarGrid& pg = pf.pg;
    for (int a1 = 0; a1 < g.n; ++a1) {
        double y1 = g.mode(a1) * spacing;
        for (int a2 = 0; a2 < g.n; ++a2) {
            double y2 = g.mode(a2) * spacing;
            double r = std::hypot(y1, y2);
            if (r > pg.rho_max) continue;
            double t = std::atan2(y2, y1);
            if (t < 0) t += 2.0 * GridSpec::pi();
            double ui = r / pg.drho() - 0.5;
            double uj = t / pg.dtau();
            int bi = (int)std::floor(ui), bj = (int)std::floor(uj);
            double wi[4], wj[4];
            catmull_rom(ui - bi, wi);
            catmull_rom(uj - bj, wj);
            cplx acc = 0.0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    acc += wi[i] * wj[j] * polar_value(pf, bi - 1 + i, bj - 1 + j);
            out.at(a1, a2) = acc;
        }
    }
    return out;
}

namespace {

PolarField ring_fft(const PolarField& pf, int sign, double scale) {
    PolarField out = pf;
    fftw_plan p = g_ring_plans.get(pf.pg.n_tau, sign);
    for (int i = 0; i < pf.pg.n_rho; ++i) {
        fftw_complex* row = reinterpret_cast<fftw_complex*>(out.val.data() + size_t(i) * pf.pg.n_tau);
        fftw_execute_dft(p, row, row);
    }
    if (scale != 1.0)
        for (auto& c : out.val) c *= scale;
    return out;
}

}  // namespace

PolarField angular_transform(const PolarField& pf) {
    return ring_fft(pf, FFTW_FORWARD, 1.0 / pf.pg.n_tau);
}

PolarField angular_inverse(const PolarField& coeffs) {
    return ring_fft(coeffs, FFTW_BACKWARD, 1.0);
}

double angular_bucket_weight(int l, int l_floor, int n_tau, int n) {
    int l_top = (int)std::ceil(std::log2(n_tau / 2)) + 1;
    if (l_floor > l_top) throw std::invalid_argument("angular floor above top bucket");
    return bucket_weight(l, l_floor, l_top, std::abs(n));
}

double rlp_weight(int l, int p, int n_tau, int n) {
    if (l + p < 0) return 0.0;
    if (l + p == 0) {
        // cumulative bump psi(2^-l |n|) == sum of buckets up to l
        return psi_bump(std::ldexp(std::abs(n), -l));
    }
    return angular_bucket_weight(l, -p, n_tau, n);
}

PolarField apply_angular_weight(const PolarField& pf, const std::function<double(int)>& w) {
    PolarField c = angular_transform(pf);
    int nt = pf.pg.n_tau;
    for (int i = 0; i < pf.pg.n_rho; ++i)
        for (int j = 0; j < nt; ++j) {
            int n = j < nt / 2 ? j : j - nt;
            c.at(i, j) *= w(n);
        }
    return angular_inverse(c);
}

double polar_l2(const PolarField& pf) {
    const PolarGrid& pg = pf.pg;
    double s = 0.0;
    for (int i = 0; i < pg.n_rho; ++i) {
        double ring = 0.0;
        for (int j = 0; j < pg.n_tau; ++j) ring += std::norm(pf.at(i, j));
        s += ring * pg.rho(i);
    }
    return std::sqrt(s * pg.drho() * pg.dtau());
}

double coeff_l2(const PolarField& coeffs) {
    const PolarGrid& pg = coeffs.pg;
    double s = 0.0;
    for (int i = 0; i < pg.n_rho; ++i) {
        double ring = 0.0;
        for (int j = 0; j < pg.n_tau; ++j) ring += std::norm(coeffs.at(i, j));
        s += ring * pg.rho(i);
    }
    return std::sqrt(s * pg.drho() * 2.0 * GridSpec::pi());
}

}  // namespace stratwave
