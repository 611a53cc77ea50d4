#include "stratwave/checks.hpp"

#include <cmath>

#include "stratwave/angular.hpp"
#include "stratwave/presets.hpp"
#include "stratwave/spectral_ops.hpp"

namespace stratwave {

namespace {

CheckLine line(const std::string& name, double value, double limit) {
    return {name, value, limit, value <= limit};
}

// reinterpret spectral coefficients as samples of a field over the frequency
// box, so the Cartesian vector-field machinery applies on the xi side
Field as_freq_samples(const Field& spec) {
    Field f(GridSpec{spec.grid.n, spec.grid.n * spec.grid.dxi()});
    f.coeff = spec.coeff;
    return f;
}

double rel_l2_diff(const Field& a, const Field& b) {
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < a.coeff.size(); ++i) {
        num += std::norm(a.coeff[i] - b.coeff[i]);
        den += std::norm(b.coeff[i]);
    }
    return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

double plain_l2(const Field& f) {
    double s = 0.0;
    for (const cplx& c : f.coeff) s += std::norm(c);
    return std::sqrt(s);
}

int angular_l_top(int n_tau) {
    return int(std::ceil(std::log2(double(n_tau) / 2.0))) + 1;
}

// ring in frequency with prescribed angular harmonics, one per dyadic bucket
Field harmonic_rings(const GridSpec& g, double r0, double b, const std::vector<int>& modes) {
    Field f(g);
    for (int a1 = 0; a1 < g.n; ++a1) {
        double x1 = g.freq(a1);
        for (int a2 = 0; a2 < g.n; ++a2) {
            double x2 = g.freq(a2);
            double r = std::hypot(x1, x2);
            double tau = std::atan2(x2, x1);
            double s = 0.0;
            for (int m : modes) s += std::cos(m * tau);
            f.at(a1, a2) = std::exp(-b * (r - r0) * (r - r0)) * s;
        }
    }
    return f;
}

PolarField angular_piece(const PolarField& pf, int l, int p) {
    return apply_angular_weight(pf, [&](int m) { return rlp_weight(l, p, pf.pg.n_tau, m); });
}

}  // namespace

bool all_pass(const std::vector<CheckLine>& lines) {
    for (const CheckLine& l : lines)
        if (!l.pass) return false;
    return true;
}

std::vector<CheckLine> check_ibp(int points, double tol) {
    ShellTriple sh;
    sh.out = {0, -5, {}};
    sh.left = {0, 0, {}};
    sh.right = {0, 0, {}};
    ProfileFn F = gaussian_ring(cplx(1.0, 0.3), 10.0, 1.3, 6.0, -1.2);
    ProfileFn G = gaussian_ring(cplx(0.8, -0.2), 10.0, 0.7, 6.0, 1.2);
    std::vector<Vec2> pts = {{0.72, 0.011}, {0.76, 0.012}, {0.8, 0.012}};
    MultId id{MultFamily::M, +1, +1, +1};
    PhaseSigns sg{+1, +1, +1};
    IbpResult coarse = ibp_step_check(id, sh, sg, 4.0, F, G, pts, points);
    IbpResult fine = ibp_step_check(id, sh, sg, 4.0, F, G, pts, 2 * points);
    std::vector<CheckLine> out;
    out.push_back(line("ibp residual, base grid", coarse.residual, 1.0));
    out.push_back(line("ibp residual, refined once", fine.residual, tol));
    out.push_back(line("ibp fd step Richardson shift", fine.fd_richardson, tol));
    return out;
}

std::vector<CheckLine> check_symmetrize(int points, double tol) {
    ShellTriple sh;
    sh.out = {0, 0, {}};
    sh.left = {0, 0, {}};
    sh.right = {0, 0, {}};
    ProfileFn F = gaussian_ring(cplx(1.0, 0.0), 5.0, 1.0, 3.0, 0.4);
    ProfileFn Gm = gaussian_ring(cplx(0.6, 0.4), 5.0, 1.0, 3.0, -0.6);
    double d = 2.0 * eta_box_halfwidth(sh) / points;
    auto snap = [&](double v) { return d * std::round(v / d); };
    std::vector<Vec2> pts = {{snap(0.75), snap(0.75)},
                             {snap(0.825), snap(0.675)},
                             {snap(0.9), snap(0.6)}};
    std::vector<CheckLine> out;
    out.push_back(line("symmetrization equal signs, outer +, mu +",
                       symmetrization_equal_signs(+1, +1, sh, 1.0, F.value, pts, points), tol));
    out.push_back(line("symmetrization equal signs, outer -, mu -",
                       symmetrization_equal_signs(-1, -1, sh, 1.0, F.value, pts, points), tol));
    out.push_back(line("symmetrization mixed signs, outer +",
                       symmetrization_mixed_signs(+1, sh, 1.0, F.value, Gm.value, pts, points),
                       tol));
    out.push_back(line("symmetrization mixed signs, outer -",
                       symmetrization_mixed_signs(-1, sh, 1.0, F.value, Gm.value, pts, points),
                       tol));
    return out;
}

std::vector<CheckLine> check_setsize(double ratio_limit) {
    ShellTriple sh;
    sh.out = {0, 0, 0};
    sh.left = {0, -2, 0};
    sh.right = {0, -2, 0};
    ProfileFn F = gaussian_ring(cplx(1.0, 0.0), 5.0, 1.0, 3.0, 0.1);
    std::vector<CheckLine> out;
    for (MultFamily fam : {MultFamily::M0, MultFamily::M}) {
        MultId id{fam, +1, +1, +1};
        SetSizeResult r = setsize_check(id, sh, PhaseSigns{+1, +1, +1}, 0.5, F.value, F.value,
                                        12, 48);
        out.push_back(line("set size ratio, " + id.name(), r.ratio, ratio_limit));
    }
    BoundaryResult b = nonresonant_boundary_eval({MultFamily::M, +1, +1, +1}, sh,
                                                 PhaseSigns{+1, +1, +1}, 0.5, 0.25, F.value,
                                                 F.value, 12, 48);
    out.push_back(line("nonresonant boundary ratio", b.bound > 0.0 ? b.lhs / b.bound : 0.0,
                       ratio_limit));
    return out;
}

std::vector<CheckLine> check_angular(int n, double box) {
    GridSpec g{n, box};
    // one harmonic per dyadic angular bucket l=2..6, at 0.8 * 2^l where the
    // bucket weight sits at its plateau; the ring keeps the support on
    // frequencies the polar grid resolves
    Field prof = harmonic_rings(g, 2.0, 4.0, {3, 6, 13, 26, 51});
    PolarGrid pg;
    pg.n_rho = 512;
    pg.n_tau = 2048;
    pg.rho_max = 4.0;
    PolarField pf = to_polar(prof, g.dxi(), pg);

    std::vector<CheckLine> out;

    // partition of unity of the angular bucket weights, measured on the
    // angular expansion itself so resampling error does not enter
    int l_top = angular_l_top(pg.n_tau);
    PolarField acc(pg);
    for (int l = 0; l <= l_top; ++l) {
        PolarField piece = angular_piece(pf, l, 0);
        for (size_t i = 0; i < acc.val.size(); ++i) acc.val[i] += piece.val[i];
    }
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < acc.val.size(); ++i) {
        num += std::norm(acc.val[i] - pf.val[i]);
        den += std::norm(pf.val[i]);
    }
    out.push_back(line("angular partition of unity", std::sqrt(num / den), 1e-4));

    PolarField co = angular_transform(pf);
    double pl = polar_l2(pf), cl = coeff_l2(co);
    out.push_back(line("angular Parseval", pl > 0.0 ? std::abs(pl - cl) / pl : 0.0, 1e-6));

    // each bucket piece should respond to the rotation vector field like a
    // single angular frequency of size 2^l
    for (int l = 2; l <= 6; ++l) {
        Field fl = from_polar(angular_piece(pf, l, 0), g, g.dxi());
        Field w = apply_rotation_vf(as_freq_samples(fl)).field;
        double ratio = plain_l2(w) / (std::ldexp(1.0, l) * plain_l2(fl));
        out.push_back(line("Bernstein upper, l=" + std::to_string(l), ratio, 4.0));
        out.push_back(line("Bernstein lower, l=" + std::to_string(l), 0.25 / ratio, 1.0));
    }

    // [S, R_l] f: the scaling field is radial, angular projections are
    // tangential, so the commutator is pure resampling error
    Field Sf = apply_scaling_vf(as_freq_samples(prof)).field;
    Sf.grid = g;
    double sf_norm = plain_l2(Sf);
    for (int l : {2, 4}) {
        Field pl_f = from_polar(angular_piece(pf, l, 0), g, g.dxi());
        Field a = apply_scaling_vf(as_freq_samples(pl_f)).field;
        a.grid = g;
        Field b = from_polar(angular_piece(to_polar(Sf, g.dxi(), pg), l, 0), g, g.dxi());
        double cnum = 0.0;
        for (size_t i = 0; i < a.coeff.size(); ++i) cnum += std::norm(a.coeff[i] - b.coeff[i]);
        out.push_back(line("[S, R_l] residual, l=" + std::to_string(l),
                           sf_norm > 0.0 ? std::sqrt(cnum) / sf_norm : 0.0, 1e-4));
    }
    return out;
}

std::vector<CheckLine> check_fouriersup(int n, double box, double ratio_limit) {
    GridSpec g{n, box};
    NormConfig cfg;
    struct P {
        double a, r0, b, tau0;
    };
    std::vector<P> fam = {{1.0, 1.0, 2.0, 0.7}, {2.0, 1.5, 1.0, -0.4}, {1.5, 2.0, 0.5, 0.0},
                          {1.0, 1.2, 4.0, 2.4}, {2.0, 1.1, 2.5, 3.0},  {0.8, 1.8, 1.5, -2.0}};
    std::vector<CheckLine> out;
    double worst = 0.0, best = 0.0;
    for (size_t i = 0; i < fam.size(); ++i) {
        Field prof = ring_profile(g, 1.0, fam[i].a, fam[i].r0, fam[i].b, fam[i].tau0);
        double m = 0.0;
        for (const FourierSupEntry& e : fourier_sup_check(prof, cfg)) m = std::max(m, e.ratio);
        out.push_back(line("Fourier sup ratio, field " + std::to_string(i), m, ratio_limit));
        worst = std::max(worst, m);
        best = (i == 0) ? m : std::min(best, m);
    }
    out.push_back(line("Fourier sup family spread", best > 0.0 ? worst / best : 0.0, 2.0));
    return out;
}

}  // namespace stratwave
