#include "stratwave/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace stratwave {

double GridSpec::pi() { return 3.14159265358979323846264338327950288; }

GridSpec::GridSpec(int n_, double L_) : n(n_), box_size(L_) {
    if (n < 8 || (n & (n - 1)) != 0)
        throw std::invalid_argument("grid size must be a power of two, at least 8");
    if (!(box_size > 0))
        throw std::invalid_argument("box size must be positive");
}

namespace {

// Plans are cached per (n, direction); fftw_execute_dft re-runs a cached plan
// on fresh arrays, which is safe as long as alignment matches the original.
struct PlanCache {
    std::mutex mu;
    std::map<std::pair<int, int>, fftw_plan> plans;

    fftw_plan get(int n, int sign) {
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(n, sign);
        auto it = plans.find(key);
        if (it != plans.end()) return it->second;
        fftw_complex* buf = fftw_alloc_complex(size_t(n) * n);
        fftw_plan p = fftw_plan_dft_2d(n, n, buf, buf, sign, FFTW_ESTIMATE);
        fftw_free(buf);
        plans[key] = p;
        return p;
    }
};

PlanCache g_plans;

Field run_fft(const Field& in, int sign) {
    Field out(in.grid);
    out.coeff = in.coeff;
    fftw_plan p = g_plans.get(in.grid.n, sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(out.coeff.data()),
                     reinterpret_cast<fftw_complex*>(out.coeff.data()));
    return out;
}

}  // namespace

Field fft_forward(const Field& physical) {
    Field out = run_fft(physical, FFTW_FORWARD);
    double inv = 1.0 / (double(physical.grid.n) * physical.grid.n);
    for (auto& c : out.coeff) c *= inv;
    return out;
}

Field fft_inverse(const Field& spectral) {
    return run_fft(spectral, FFTW_BACKWARD);
}

double l2_norm_spectral(const Field& spec) {
    double s = 0.0;
    for (const auto& c : spec.coeff) s += std::norm(c);
    return spec.grid.box_size * std::sqrt(s);
}

double l2_norm_physical(const Field& phys) {
    double s = 0.0;
    for (const auto& c : phys.coeff) s += std::norm(c);
    return phys.grid.dx() * std::sqrt(s);
}

double linf_norm(const Field& f) {
    double m = 0.0;
    for (const auto& c : f.coeff) m = std::max(m, std::abs(c));
    return m;
}

}  // namespace stratwave
