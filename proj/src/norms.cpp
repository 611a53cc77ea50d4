#include "stratwave/norms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include "stratwave/bumps.hpp"
#include "stratwave/report_io.hpp"
#include "stratwave/spectral_ops.hpp"

namespace stratwave {

namespace {

double pow2(double e) { return std::pow(2.0, e); }

double weight_b(int k, int p) {
    return pow2(4.0 * std::max(k, 0) - 0.5 * std::min(k, 0) - 0.5 * p);
}

double weight_x(int k, int p, int l, const NormConfig& cfg) {
    return pow2(4.0 * std::max(k, 0) + (1.0 + cfg.beta) * l + (0.5 + cfg.beta) * p);
}

}  // namespace

double b_norm(const Field& profile_spec, const NormConfig&, std::vector<ShellEntry>* table) {
    DyadicRange range(profile_spec.grid);
    double best = 0.0;
    for (const ShellMass& sm : shell_masses(profile_spec, range)) {
        double w = weight_b(sm.k, sm.p);
        if (table) table->push_back({sm.k, sm.p, {}, {}, w, sm.l2, w * sm.l2});
        best = std::max(best, w * sm.l2);
    }
    return best;
}

double x_norm(const Field& profile_spec, const NormConfig& cfg, std::vector<ShellEntry>* table) {
    const GridSpec& g = profile_spec.grid;
    DyadicRange range(g);
    PolarGrid pg = PolarGrid::for_grid(g, true);
    PolarField polar = to_polar(profile_spec, g.dxi(), pg);
    int l_top = (int)std::ceil(std::log2(pg.n_tau / 2)) + 1;

    // per-angle axis-distance |sin tau|, shared by every shell
    std::vector<double> sins(pg.n_tau);
    for (int j = 0; j < pg.n_tau; ++j) sins[j] = std::abs(std::sin(pg.tau(j)));

    double best = 0.0;
    for (const ShellMass& sm : shell_masses(profile_spec, range)) {
        // restrict to rings the radial bucket touches
        int i0 = pg.n_rho, i1 = 0;
        std::vector<double> wk(pg.n_rho);
        for (int i = 0; i < pg.n_rho; ++i) {
            wk[i] = bucket_weight(sm.k, range.k_floor, range.k_top, pg.rho(i));
            if (wk[i] != 0.0) {
                i0 = std::min(i0, i);
                i1 = std::max(i1, i + 1);
            }
        }
        if (i0 >= i1) continue;
        PolarField shell(pg);
        for (int i = i0; i < i1; ++i)
            for (int j = 0; j < pg.n_tau; ++j)
                shell.at(i, j) = wk[i] * bucket_weight(sm.p, kAngularFloor, 0, sins[j]) *
                                 polar.at(i, j);
        PolarField coeffs = angular_transform(shell);
        for (int l = std::max(0, -sm.p); l <= l_top; ++l) {
            double acc = 0.0;
            for (int i = i0; i < i1; ++i) {
                double ring = 0.0;
                for (int j = 0; j < pg.n_tau; ++j) {
                    int n = j < pg.n_tau / 2 ? j : j - pg.n_tau;
                    double w = rlp_weight(l, sm.p, pg.n_tau, n);
                    if (w != 0.0) ring += w * w * std::norm(coeffs.at(i, j));
                }
                acc += ring * pg.rho(i);
            }
            double l2 = std::sqrt(acc * pg.drho() * 2.0 * GridSpec::pi());
            if (l2 == 0.0) continue;
            double w = weight_x(sm.k, sm.p, l, cfg);
            if (table) table->push_back({sm.k, sm.p, {}, l, w, l2, w * l2});
            best = std::max(best, w * l2);
        }
    }
    return best;
}

Field scaling_vf_spectral(const Field& profile_spec, bool* boundary_warning) {
    VfResult r = apply_scaling_vf(fft_inverse(profile_spec));
    if (boundary_warning) *boundary_warning = r.boundary_warning;
    return fft_forward(r.field);
}

double d_norm(const Field& profile_spec, const NormConfig& cfg) {
    Field f = profile_spec;
    double best = 0.0;
    for (int n = 0; n <= 2; ++n) {
        best = std::max(best, b_norm(f, cfg) + x_norm(f, cfg));
        if (n < 2) f = scaling_vf_spectral(f);
    }
    return best;
}

void write_shell_table(const std::string& path, const std::vector<ShellEntry>& entries) {
    auto sorted = entries;
    std::sort(sorted.begin(), sorted.end(), [](const ShellEntry& a, const ShellEntry& b) {
        auto key = [](const ShellEntry& e) {
            return std::make_tuple(e.k, e.p, e.q.value_or(1), e.l.value_or(-1));
        };
        return key(a) < key(b);
    });
    std::ofstream f(path);
    f << "k,p,q,l,weight,l2,weighted\n";
    for (const auto& e : sorted) {
        f << e.k << "," << e.p << ",";
        if (e.q) f << *e.q;
        f << ",";
        if (e.l) f << *e.l;
        f << "," << fmt17(e.weight) << "," << fmt17(e.l2) << "," << fmt17(e.weighted) << "\n";
    }
}

std::vector<FourierSupEntry> fourier_sup_check(const Field& profile_spec, const NormConfig& cfg) {
    const GridSpec& g = profile_spec.grid;
    DyadicRange range(g);

    std::map<int, double> lhs_by_k;
    double fhat_scale = std::pow(g.box_size / (2.0 * GridSpec::pi()), 2);
    for (int a1 = 0; a1 < g.n; ++a1) {
        double xi1 = g.freq(a1);
        for (int a2 = 0; a2 < g.n; ++a2) {
            double xi2 = g.freq(a2);
            double mag = std::abs(profile_spec.at(a1, a2));
            if (mag == 0.0) continue;
            double r = std::hypot(xi1, xi2);
            double s = r == 0.0 ? 0.0 : std::abs(xi2) / r;
            int pc = bucket_of(s, kAngularFloor, 0);
            double wp = 0.0;
            for (int p = std::max(kAngularFloor, pc - 1); p <= std::min(0, pc + 1); ++p)
                wp = std::max(wp, bucket_weight(p, kAngularFloor, 0, s));
            for (int k = range.k_floor; k <= range.k_top; ++k) {
                double wk = bucket_weight(k, range.k_floor, range.k_top, r);
                if (wk == 0.0) continue;
                double v = wk * wp * mag * fhat_scale;
                auto& slot = lhs_by_k[k];
                slot = std::max(slot, v);
            }
        }
    }

    std::vector<FourierSupEntry> out;
    for (const auto& [k, lhs] : lhs_by_k) {
        Field fk(g);
        for (int a1 = 0; a1 < g.n; ++a1) {
            double xi1 = g.freq(a1);
            for (int a2 = 0; a2 < g.n; ++a2) {
                double xi2 = g.freq(a2);
                fk.at(a1, a2) =
                    bucket_weight(k, range.k_floor, range.k_top, std::hypot(xi1, xi2)) *
                    profile_spec.at(a1, a2);
            }
        }
        Field sfk = scaling_vf_spectral(fk);
        double rhs = pow2(-4.0 * std::max(k, 0) - double(k)) *
                     (b_norm(fk, cfg) + b_norm(sfk, cfg) + x_norm(fk, cfg) + x_norm(sfk, cfg));
        if (rhs == 0.0) continue;
        out.push_back({k, lhs, rhs, lhs / rhs});
    }
    return out;
}

std::vector<DecayPoint> decay_experiment(const Field& profile_spec, int k,
                                         const std::vector<double>& times) {
    const GridSpec& g = profile_spec.grid;
    DyadicRange range(g);
    std::vector<DecayPoint> out;
    for (double t : times) {
        Field evolved = apply_semigroup(profile_spec, t, +1);
        for (int a1 = 0; a1 < g.n; ++a1) {
            double xi1 = g.freq(a1);
            for (int a2 = 0; a2 < g.n; ++a2) {
                double xi2 = g.freq(a2);
                evolved.at(a1, a2) *=
                    bucket_weight(k, range.k_floor, range.k_top, std::hypot(xi1, xi2));
            }
        }
        out.push_back({t, linf_norm(fft_inverse(evolved))});
    }
    return out;
}

double fit_log_slope(const std::vector<DecayPoint>& pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : pts) {
        double x = std::log(p.t), y = std::log(p.linf);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = double(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

DecaySplit decay_decomposition(const Field& profile_spec, int k, int p, double t,
                               const NormConfig& cfg) {
    const GridSpec& g = profile_spec.grid;
    DyadicRange range(g);
    DyadicIndex idx{k, p, {}, {}};
    // The angular split acts on the profile; the semigroup is applied
    // afterwards and is unitary in L2, so piece norms are computed here.
    Field shell = project(profile_spec, idx, range);

    PolarGrid pg = PolarGrid::for_grid(g, true);
    PolarField coeffs = angular_transform(to_polar(shell, g.dxi(), pg));

    double arg = t * pow2(p) * std::pow(t * pow2(2 * p), -cfg.kappa_eff());
    int l0 = arg > 0.0 ? (int)std::floor(std::log2(arg)) : -1;

    DecaySplit out;
    out.t = t;
    out.l0 = l0;

    PolarField piece1 = coeffs, piece2 = coeffs;
    int nt = pg.n_tau;
    for (int i = 0; i < pg.n_rho; ++i)
        for (int j = 0; j < nt; ++j) {
            int n = j < nt / 2 ? j : j - nt;
            double w1 = l0 < 0 ? 1.0 : psi_bump(std::ldexp(std::abs(n), -l0));
            piece1.at(i, j) = w1 * coeffs.at(i, j);
            piece2.at(i, j) = (1.0 - w1) * coeffs.at(i, j);
        }

    double total = coeff_l2(coeffs);
    double resid = 0.0;
    for (size_t i = 0; i < coeffs.val.size(); ++i)
        resid += std::norm(piece1.val[i] + piece2.val[i] - coeffs.val[i]);
    out.split_residual = total > 0.0 ? std::sqrt(resid) / total : 0.0;

    out.piece2_l2 = coeff_l2(piece2);
    out.piece2_bound = pow2(-4.0 * std::max(k, 0) - (1.0 + cfg.beta) * (l0 + 1) - 0.5 * p -
                            cfg.beta * p) *
                       x_norm(profile_spec, cfg);
    return out;
}

}  // namespace stratwave
