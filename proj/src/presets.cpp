#include "stratwave/presets.hpp"

#include <cmath>

#include "stratwave/spectral_ops.hpp"

namespace stratwave {

Field ring_profile(const GridSpec& g, double amp, double a, double r0, double b, double tau0) {
    Field f(g);
    for (int a1 = 0; a1 < g.n; ++a1) {
        double x1 = g.freq(a1);
        for (int a2 = 0; a2 < g.n; ++a2) {
            double x2 = g.freq(a2);
            double r = std::hypot(x1, x2);
            double tau = std::atan2(x2, x1);
            f.at(a1, a2) = amp * std::exp(-a * (r - r0) * (r - r0)) *
                           std::exp(-b * (1.0 - std::cos(tau - tau0)));
        }
    }
    return f;
}

Field bump_scalar(const GridSpec& g, double eps, int variant) {
    Field phys(g);
    double s = variant == 0 ? 1.0 : -0.7;
    for (int a1 = 0; a1 < g.n; ++a1) {
        double x = g.coord(a1);
        for (int a2 = 0; a2 < g.n; ++a2) {
            double y = g.coord(a2);
            double env = std::exp(-(x * x + y * y) / 4.0);
            double env2 = std::exp(-((x - 2.0) * (x - 2.0) + (y + 1.0) * (y + 1.0)) / 5.0);
            phys.at(a1, a2) = eps * (env * std::cos(1.0 * x + 0.6 * y) +
                                     0.6 * s * env2 * std::cos(0.8 * x - 0.4 * y));
        }
    }
    Field spec = dealias(fft_forward(phys));
    spec.at(0, 0) = 0.0;
    return spec;
}

FlowState sqg_initial(const GridSpec& g, double eps) {
    FlowState s;
    s.grid = g;
    s.rep = Representation::SqgTheta;
    s.comp = {bump_scalar(g, eps, 0)};
    return s;
}

FlowState boussinesq_initial(const GridSpec& g, double eps) {
    FlowState s;
    s.grid = g;
    s.rep = Representation::BoussinesqOmegaRho;
    s.comp = {bump_scalar(g, eps, 0), bump_scalar(g, eps, 1)};
    return s;
}

}  // namespace stratwave
