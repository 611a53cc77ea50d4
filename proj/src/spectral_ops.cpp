#include "stratwave/spectral_ops.hpp"

#include <cmath>

namespace stratwave {

double lambda_symbol(double xi1, double xi2) {
    double r = std::hypot(xi1, xi2);
    if (r == 0.0) return 0.0;
    return xi1 / r;
}

namespace {

template <typename F>
Field map_modes(const Field& spec, F&& fn) {
    Field out(spec.grid);
    const GridSpec& g = spec.grid;
    for (int a1 = 0; a1 < g.n; ++a1) {
        double xi1 = g.freq(a1);
        for (int a2 = 0; a2 < g.n; ++a2) {
            double xi2 = g.freq(a2);
            out.at(a1, a2) = fn(xi1, xi2) * spec.at(a1, a2);
        }
    }
    return out;
}

}  // namespace

Field apply_semigroup(const Field& spec, double t, int sign) {
    return map_modes(spec, [t, sign](double x1, double x2) {
        double ph = sign * t * lambda_symbol(x1, x2);
        return cplx(std::cos(ph), std::sin(ph));
    });
}

Field apply_riesz1(const Field& spec) {
    return map_modes(spec, [](double x1, double x2) {
        return cplx(0.0, -lambda_symbol(x1, x2));
    });
}

Field apply_modgrad_pow(const Field& spec, double s) {
    return map_modes(spec, [s](double x1, double x2) {
        double r = std::hypot(x1, x2);
        return cplx(r == 0.0 ? 0.0 : std::pow(r, s), 0.0);
    });
}

Field apply_ddx(const Field& spec, int axis) {
    return map_modes(spec, [axis](double x1, double x2) {
        return cplx(0.0, axis == 0 ? x1 : x2);
    });
}

Field dealias(const Field& spec) {
    Field out = spec;
    const GridSpec& g = spec.grid;
    int cut = g.n / 3;
    for (int a1 = 0; a1 < g.n; ++a1)
        for (int a2 = 0; a2 < g.n; ++a2)
            if (std::max(std::abs(g.mode(a1)), std::abs(g.mode(a2))) > cut)
                out.at(a1, a2) = 0.0;
    return out;
}

double boundary_mass_fraction(const Field& physical) {
    const GridSpec& g = physical.grid;
    double total = 0.0, outer = 0.0;
    double quarter = g.box_size / 4.0;
    for (int a1 = 0; a1 < g.n; ++a1) {
        double x1 = g.coord(a1);
        for (int a2 = 0; a2 < g.n; ++a2) {
            double m = std::norm(physical.at(a1, a2));
            total += m;
            if (std::abs(x1) >= quarter || std::abs(g.coord(a2)) >= quarter) outer += m;
        }
    }
    return total > 0.0 ? outer / total : 0.0;
}

namespace {

VfResult coord_dot_grad(const Field& physical, bool perp, double warn_fraction) {
    const GridSpec& g = physical.grid;
    Field spec = fft_forward(physical);
    Field d1 = fft_inverse(apply_ddx(spec, 0));
    Field d2 = fft_inverse(apply_ddx(spec, 1));
    VfResult res;
    res.field = Field(g);
    for (int a1 = 0; a1 < g.n; ++a1) {
        double x1 = g.coord(a1);
        for (int a2 = 0; a2 < g.n; ++a2) {
            double x2 = g.coord(a2);
            if (perp)
                res.field.at(a1, a2) = -x2 * d1.at(a1, a2) + x1 * d2.at(a1, a2);
            else
                res.field.at(a1, a2) = x1 * d1.at(a1, a2) + x2 * d2.at(a1, a2);
        }
    }
    res.boundary_fraction = boundary_mass_fraction(physical);
    res.boundary_warning = res.boundary_fraction > warn_fraction;
    return res;
}

}  // namespace

VfResult apply_scaling_vf(const Field& physical, double warn_fraction) {
    return coord_dot_grad(physical, false, warn_fraction);
}

VfResult apply_rotation_vf(const Field& physical, double warn_fraction) {
    return coord_dot_grad(physical, true, warn_fraction);
}

double hermitian_symmetry_error(const Field& spec) {
    const GridSpec& g = spec.grid;
    double err = 0.0;
    for (int a1 = 0; a1 < g.n; ++a1) {
        // modes on the Nyquist line have no mirror partner; skip them
        if (g.mode(a1) == -g.n / 2) continue;
        int b1 = g.store(-g.mode(a1));
        for (int a2 = 0; a2 < g.n; ++a2) {
            if (g.mode(a2) == -g.n / 2) continue;
            int b2 = g.store(-g.mode(a2));
            err = std::max(err, std::abs(spec.at(a1, a2) - std::conj(spec.at(b1, b2))));
        }
    }
    return err;
}

double sobolev_norm(const Field& spec, double s) {
    const GridSpec& g = spec.grid;
    double sum = 0.0;
    for (int a1 = 0; a1 < g.n; ++a1) {
        double xi1 = g.freq(a1);
        for (int a2 = 0; a2 < g.n; ++a2) {
            double xi2 = g.freq(a2);
            sum += std::pow(1.0 + xi1 * xi1 + xi2 * xi2, s) * std::norm(spec.at(a1, a2));
        }
    }
    return g.box_size * std::sqrt(sum);
}

}  // namespace stratwave
