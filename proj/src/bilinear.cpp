#include "stratwave/bilinear.hpp"

#include <cmath>
#include <fstream>

#include "stratwave/bumps.hpp"
#include "stratwave/report_io.hpp"

namespace stratwave {

ProfileFn gaussian_ring(cplx amp, double a, double r0, double b, double tau0) {
    auto val = [=](Vec2 z) {
        double r = z.len();
        double tau = std::atan2(z.y, z.x);
        return amp * std::exp(-a * (r - r0) * (r - r0)) *
               std::exp(-b * (1.0 - std::cos(tau - tau0)));
    };
    ProfileFn p;
    p.value = val;
    p.S = [=](Vec2 z) {
        double r = z.len();
        return -2.0 * a * (r - r0) * r * val(z);
    };
    p.W = [=](Vec2 z) {
        double tau = std::atan2(z.y, z.x);
        return -b * std::sin(tau - tau0) * val(z);
    };
    return p;
}

double eta_box_halfwidth(const ShellTriple& sh) {
    return 1.5 * 1.6 * std::ldexp(1.0, sh.right.k);
}

namespace {

void check_points(int points) {
    if (points < 8 || points > kMaxQuadPoints)
        throw std::invalid_argument("eta quadrature points per axis must lie in [8, 512]");
}

cplx osc(double ph) { return cplx(std::cos(ph), std::sin(ph)); }

}  // namespace

std::vector<cplx> q_direct(const std::function<double(Vec2, Vec2)>& symbol, PhaseSigns signs,
                           double t, const FreqFn& F, const FreqFn& G,
                           const std::vector<Vec2>& xi_pts, double box_halfwidth, int points) {
    check_points(points);
    double d = 2.0 * box_halfwidth / points;
    double cell = d * d;
    std::vector<cplx> out(xi_pts.size());
    for (size_t ix = 0; ix < xi_pts.size(); ++ix) {
        Vec2 xi = xi_pts[ix];
        cplx acc = 0.0;
        for (int i = 0; i < points; ++i) {
            double e1 = -box_halfwidth + (i + 0.5) * d;
            for (int j = 0; j < points; ++j) {
                Vec2 eta{e1, -box_halfwidth + (j + 0.5) * d};
                double m = symbol(xi, eta);
                if (m == 0.0) continue;
                double ph = t * phase(signs.outer, signs.mu, signs.nu, xi, eta);
                acc += osc(ph) * m * F(xi - eta) * G(eta);
            }
        }
        out[ix] = acc * cell;
    }
    return out;
}

std::function<double(Vec2, Vec2)> localized_multiplier(const MultId& id, const ShellTriple& sh) {
    return [id, sh](Vec2 xi, Vec2 eta) {
        double chi = chi_weight(sh, xi, eta);
        return chi == 0.0 ? 0.0 : chi * eval_multiplier(id, xi, eta);
    };
}

namespace {

double ibp_residual(const MultId& id, const ShellTriple& sh, PhaseSigns signs, double t,
                    const ProfileFn& F, const ProfileFn& G, const std::vector<Vec2>& xi_pts,
                    int points, double h) {
    auto mchi = localized_multiplier(id, sh);
    auto A = [&](Vec2 xi, Vec2 eta) {
        double m = mchi(xi, eta);
        if (m == 0.0) return 0.0;
        double sp = S_eta_phase(signs.outer, signs.mu, signs.nu, xi, eta);
        if (std::abs(sp) < 1e-12) return 0.0;
        return m / sp;
    };

    double box = eta_box_halfwidth(sh);
    double d = 2.0 * box / points;
    double cell = d * d;
    double max_lhs = 0.0, max_diff = 0.0;
    for (Vec2 xi : xi_pts) {
        cplx lhs = 0.0, rhs = 0.0;
        for (int i = 0; i < points; ++i) {
            double e1 = -box + (i + 0.5) * d;
            for (int j = 0; j < points; ++j) {
                Vec2 eta{e1, -box + (j + 0.5) * d};
                double m = mchi(xi, eta);
                cplx e = osc(t * phase(signs.outer, signs.mu, signs.nu, xi, eta));
                Vec2 dd = xi - eta;
                cplx fd_ = F.value(dd), g_ = G.value(eta);
                if (m != 0.0) lhs += e * m * fd_ * g_;
                double a = A(xi, eta);
                double sa = (A(xi, eta * (1.0 + h)) - A(xi, eta * (1.0 - h))) / (2.0 * h);
                if (a == 0.0 && sa == 0.0) continue;
                double dd2 = dd.dot(dd);
                double c1 = dd2 > 0.0 ? -eta.dot(dd) / dd2 : 0.0;
                double c2 = dd2 > 0.0 ? -eta.dot(dd.perp()) / dd2 : 0.0;
                rhs += e * ((2.0 * a + sa) * fd_ * g_ + a * c1 * F.S(dd) * g_ +
                            a * c2 * F.W(dd) * g_ + a * fd_ * G.S(eta));
            }
        }
        lhs *= cell;
        rhs *= cell * cplx(0.0, 1.0) / t;
        max_lhs = std::max(max_lhs, std::abs(lhs));
        max_diff = std::max(max_diff, std::abs(lhs - rhs));
    }
    return max_lhs > 0.0 ? max_diff / max_lhs : 0.0;
}

}  // namespace

IbpResult ibp_step_check(const MultId& id, const ShellTriple& sh, PhaseSigns signs, double t,
                         const ProfileFn& F, const ProfileFn& G, const std::vector<Vec2>& xi_pts,
                         int points, double h) {
    check_points(points);
    double r1 = ibp_residual(id, sh, signs, t, F, G, xi_pts, points, h);
    double r2 = ibp_residual(id, sh, signs, t, F, G, xi_pts, points, h / 2.0);
    return {r2, std::abs(r1 - r2)};
}

double symmetrization_equal_signs(int outer, int mu, const ShellTriple& sh, double t,
                                  const FreqFn& F, const std::vector<Vec2>& xi_pts, int points) {
    MultId nid{MultFamily::N, outer, mu, mu};
    MultId mid{MultFamily::M, outer, mu, mu};
    PhaseSigns signs{outer, mu, mu};
    double box = eta_box_halfwidth(sh);
    MultId zid{MultFamily::M0, outer, mu, mu};
    auto qn = q_direct(localized_multiplier(nid, sh), signs, t, F, F, xi_pts, box, points);
    auto qm = q_direct(localized_multiplier(mid, sh), signs, t, F, F, xi_pts, box, points);
    auto q0 = q_direct(localized_multiplier(zid, sh), signs, t, F, F, xi_pts, box, points);
    double max_m = 0.0, max_diff = 0.0;
    for (size_t i = 0; i < qm.size(); ++i) {
        max_m = std::max(max_m, std::abs(qm[i]));
        max_diff = std::max(max_diff, std::abs(qn[i] + 0.5 * outer * mu * q0[i] - qm[i]));
    }
    return max_m > 0.0 ? max_diff / max_m : 0.0;
}

double symmetrization_mixed_signs(int outer, const ShellTriple& sh, double t, const FreqFn& Fp,
                                  const FreqFn& Fm, const std::vector<Vec2>& xi_pts, int points) {
    double box = eta_box_halfwidth(sh);
    auto qpm = q_direct(localized_multiplier({MultFamily::N, outer, +1, -1}, sh),
                        PhaseSigns{outer, +1, -1}, t, Fp, Fm, xi_pts, box, points);
    auto qmp = q_direct(localized_multiplier({MultFamily::N, outer, -1, +1}, sh),
                        PhaseSigns{outer, -1, +1}, t, Fm, Fp, xi_pts, box, points);
    auto qm = q_direct(localized_multiplier({MultFamily::MPM, outer, +1, -1}, sh),
                       PhaseSigns{outer, +1, -1}, t, Fp, Fm, xi_pts, box, points);
    double max_m = 0.0, max_diff = 0.0;
    for (size_t i = 0; i < qm.size(); ++i) {
        max_m = std::max(max_m, std::abs(qm[i]));
        max_diff = std::max(max_diff, std::abs(qpm[i] + qmp[i] - qm[i]));
    }
    return max_m > 0.0 ? max_diff / max_m : 0.0;
}

namespace {

double leg_l2(const FreqFn& f, const LegIndex& leg, int points) {
    double b = 1.7 * std::ldexp(1.0, leg.k);
    double d = 2.0 * b / points;
    double acc = 0.0;
    for (int i = 0; i < points; ++i)
        for (int j = 0; j < points; ++j) {
            Vec2 z{-b + (i + 0.5) * d, -b + (j + 0.5) * d};
            double w = leg_weight(leg, z);
            if (w == 0.0) continue;
            acc += std::norm(w * f(z));
        }
    return std::sqrt(acc * d * d);
}

double xi_grid_l2(const std::function<double(Vec2, Vec2)>& symbol, PhaseSigns signs, double t,
                  const FreqFn& F, const FreqFn& G, const ShellTriple& sh, int xi_points,
                  int eta_points) {
    double bx = 1.7 * std::ldexp(1.0, sh.out.k);
    double dxi = 2.0 * bx / xi_points;
    std::vector<Vec2> pts;
    for (int i = 0; i < xi_points; ++i)
        for (int j = 0; j < xi_points; ++j)
            pts.push_back({-bx + (i + 0.5) * dxi, -bx + (j + 0.5) * dxi});
    auto q = q_direct(symbol, signs, t, F, G, pts, eta_box_halfwidth(sh), eta_points);
    double acc = 0.0;
    for (const auto& v : q) acc += std::norm(v);
    return std::sqrt(acc) * dxi;
}

double set_size_factor(const ShellTriple& sh) {
    auto half = [](int a, int b) { return std::pow(2.0, 0.5 * (a + b)); };
    double sp = std::min({half(sh.out.k, sh.out.p), half(sh.left.k, sh.left.p),
                          half(sh.right.k, sh.right.p)});
    double sq = std::min({half(sh.out.k, *sh.out.q), half(sh.left.k, *sh.left.q),
                          half(sh.right.k, *sh.right.q)});
    return sp * sq;
}

}  // namespace

SetSizeResult setsize_check(const MultId& id, const ShellTriple& sh, PhaseSigns signs, double t,
                            const FreqFn& F, const FreqFn& G, int xi_points, int eta_points) {
    auto mchi = localized_multiplier(id, sh);
    SetSizeResult out{};
    out.lhs = xi_grid_l2(mchi, signs, t, F, G, sh, xi_points, eta_points);
    out.set_size = set_size_factor(sh);

    // sup |m chi| over a scan of the same grids
    double bx = 1.7 * std::ldexp(1.0, sh.out.k);
    double be = eta_box_halfwidth(sh);
    int ns = 48;
    for (int a = 0; a < ns; ++a)
        for (int b = 0; b < ns; ++b)
            for (int c = 0; c < ns; ++c)
                for (int d = 0; d < ns; ++d) {
                    Vec2 xi{-bx + (a + 0.5) * 2 * bx / ns, -bx + (b + 0.5) * 2 * bx / ns};
                    Vec2 eta{-be + (c + 0.5) * 2 * be / ns, -be + (d + 0.5) * 2 * be / ns};
                    out.m_inf = std::max(out.m_inf, std::abs(mchi(xi, eta)));
                }
    out.f_l2 = leg_l2(F, sh.left, 200);
    out.g_l2 = leg_l2(G, sh.right, 200);
    double denom = out.set_size * out.m_inf * out.f_l2 * out.g_l2;
    out.ratio = denom > 0.0 ? out.lhs / denom : 0.0;
    return out;
}

BoundaryResult nonresonant_boundary_eval(const MultId& id, const ShellTriple& sh,
                                         PhaseSigns signs, double t, double lambda,
                                         const FreqFn& F, const FreqFn& G, int xi_points,
                                         int eta_points) {
    auto mchi = localized_multiplier(id, sh);
    auto symbol = [&, lambda](Vec2 xi, Vec2 eta) {
        double m = mchi(xi, eta);
        if (m == 0.0) return 0.0;
        double ph = phase(signs.outer, signs.mu, signs.nu, xi, eta);
        double cut = 1.0 - psi_bump(ph / lambda);
        if (cut == 0.0) return 0.0;
        return m * cut / ph;
    };
    BoundaryResult out{};
    out.lhs = xi_grid_l2(symbol, signs, t, F, G, sh, xi_points, eta_points);
    out.bound = std::ldexp(1.0, sh.out.k + sh.p_max()) / lambda * set_size_factor(sh) *
                leg_l2(F, sh.left, 200) * leg_l2(G, sh.right, 200);
    return out;
}

void write_q_csv(const std::string& path, const std::vector<Vec2>& xi_pts,
                 const std::vector<cplx>& values) {
    std::ofstream f(path);
    f << "xi1,xi2,re,im\n";
    for (size_t i = 0; i < xi_pts.size(); ++i)
        f << fmt17(xi_pts[i].x) << "," << fmt17(xi_pts[i].y) << "," << fmt17(values[i].real())
          << "," << fmt17(values[i].imag()) << "\n";
}

}  // namespace stratwave
