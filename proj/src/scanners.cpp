#include "stratwave/scanners.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>

#include "stratwave/bumps.hpp"
#include "stratwave/report_io.hpp"

namespace stratwave {

namespace {

// uniform doubles straight from the engine bits, reproducible across builds
double uni(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }
double uni(std::mt19937_64& rng, double a, double b) { return a + (b - a) * uni(rng); }
int rsign(std::mt19937_64& rng) { return rng() & 1 ? +1 : -1; }

}  // namespace

int ShellTriple::p_max() const { return std::max({out.p, left.p, right.p}); }

int ShellTriple::q_max() const {
    if (!out.q || !left.q || !right.q)
        throw std::invalid_argument("q_max needs q on all three legs");
    return std::max({*out.q, *left.q, *right.q});
}

int ShellTriple::k_min() const { return std::min({out.k, left.k, right.k}); }
int ShellTriple::k_max() const { return std::max({out.k, left.k, right.k}); }

std::string ShellTriple::id() const {
    auto leg = [](const LegIndex& l) {
        std::string s = "k" + std::to_string(l.k) + "p" + std::to_string(l.p);
        if (l.q) s += "q" + std::to_string(*l.q);
        return s;
    };
    return leg(out) + "_" + leg(left) + "_" + leg(right);
}

double leg_weight(const LegIndex& leg, Vec2 v) {
    double r = v.len();
    double w = phi_bump(std::ldexp(r, -leg.k));
    if (w == 0.0) return 0.0;
    double s = r == 0.0 ? 0.0 : std::abs(v.y) / r;
    w *= bucket_weight(leg.p, kAngularFloor, 0, s);
    if (leg.q) {
        double lam = r == 0.0 ? 0.0 : std::abs(v.x) / r;
        w *= bucket_weight(*leg.q, kAngularFloor, 0, lam);
    }
    return w;
}

double chi_weight(const ShellTriple& sh, Vec2 xi, Vec2 eta) {
    double w = leg_weight(sh.out, xi);
    if (w == 0.0) return 0.0;
    w *= leg_weight(sh.left, xi - eta);
    if (w == 0.0) return 0.0;
    return w * leg_weight(sh.right, eta);
}

namespace {

Vec2 draw_leg(std::mt19937_64& rng, const LegIndex& leg) {
    double rho = std::ldexp(uni(rng, 0.35, 1.65), leg.k);
    double s, lam;
    if (leg.q && *leg.q < leg.p) {
        lam = std::min(1.0, std::ldexp(uni(rng, 0.3, 1.7), *leg.q));
        s = std::sqrt(std::max(0.0, 1.0 - lam * lam));
    } else {
        s = std::min(1.0, std::ldexp(uni(rng, 0.3, 1.7), leg.p));
        lam = std::sqrt(std::max(0.0, 1.0 - s * s));
    }
    return Vec2{rsign(rng) * rho * lam, rsign(rng) * rho * s};
}

struct AcceptedSample {
    Vec2 xi, eta;
    double chi;
};

// rejection-sample (xi, eta) pairs with chi > 1/2
template <typename Visit>
std::size_t sample_shell(const ShellTriple& sh, const ScanConfig& cfg, Visit&& visit) {
    std::mt19937_64 rng(cfg.seed);
    std::size_t budget = cfg.max_trials ? cfg.max_trials : 2000 * cfg.samples;
    std::size_t accepted = 0;
    for (std::size_t trial = 0; trial < budget && accepted < cfg.samples; ++trial) {
        Vec2 xi = draw_leg(rng, sh.out);
        Vec2 eta = draw_leg(rng, sh.right);
        double chi = chi_weight(sh, xi, eta);
        if (chi <= 0.5) continue;
        ++accepted;
        visit(AcceptedSample{xi, eta, chi});
    }
    if (accepted == 0)
        throw EmptyRegionError("no samples accepted in shell configuration " + sh.id());
    return accepted;
}

}  // namespace

ScanRecord scan_null_structure(const ShellTriple& sh, const MultId& id, const ScanConfig& cfg) {
    bool with_q = sh.out.q && sh.left.q && sh.right.q;
    double denom = std::ldexp(1.0, sh.out.k + sh.p_max() + (with_q ? sh.q_max() : 0));
    ScanRecord rec;
    rec.config_id = sh.id() + "_" + id.name();
    rec.statistic = "sup |m chi| / 2^(k+p_max" + std::string(with_q ? "+q_max)" : ")");
    rec.value = 0.0;
    rec.samples = sample_shell(sh, cfg, [&](const AcceptedSample& s) {
        double v = std::abs(eval_multiplier(id, s.xi, s.eta)) * s.chi / denom;
        if (v > rec.value) {
            rec.value = v;
            rec.argmax_xi = s.xi;
            rec.argmax_eta = s.eta;
        }
    });
    return rec;
}

std::vector<ScanRecord> scan_null_structure_kinds(const ShellTriple& sh,
                                                  const std::vector<MultId>& ids,
                                                  const ScanConfig& cfg) {
    bool with_q = sh.out.q && sh.left.q && sh.right.q;
    double denom = std::ldexp(1.0, sh.out.k + sh.p_max() + (with_q ? sh.q_max() : 0));
    std::vector<ScanRecord> recs(ids.size());
    for (size_t i = 0; i < ids.size(); ++i) {
        recs[i].config_id = sh.id() + "_" + ids[i].name();
        recs[i].statistic = "sup |m chi| / 2^(k+p_max" + std::string(with_q ? "+q_max)" : ")");
        recs[i].value = 0.0;
    }
    std::size_t accepted = sample_shell(sh, cfg, [&](const AcceptedSample& s) {
        for (size_t i = 0; i < ids.size(); ++i) {
            double v = std::abs(eval_multiplier(ids[i], s.xi, s.eta)) * s.chi / denom;
            if (v > recs[i].value) {
                recs[i].value = v;
                recs[i].argmax_xi = s.xi;
                recs[i].argmax_eta = s.eta;
            }
        }
    });
    for (ScanRecord& r : recs) r.samples = accepted;
    return recs;
}

ScanRecord scan_sigma_lower_bound(const ShellTriple& sh, int outer, int mu, int nu,
                                  const ScanConfig& cfg) {
    double phase_cut = std::ldexp(1.0, sh.q_max() - 10);
    double denom = std::ldexp(1.0, sh.k_min() + sh.k_max() + sh.p_max() + sh.q_max());
    ScanRecord rec;
    rec.config_id = sh.id() + "_phi" + (outer > 0 ? "+" : "-") + (mu > 0 ? "+" : "-") +
                    (nu > 0 ? "+" : "-");
    rec.statistic = "min |sigma| / 2^(k_min+k_max+p_max+q_max) on near-resonant set";
    rec.value = std::numeric_limits<double>::infinity();
    std::size_t hits = 0;
    sample_shell(sh, cfg, [&](const AcceptedSample& s) {
        if (std::abs(phase(outer, mu, nu, s.xi, s.eta)) >= phase_cut) return;
        ++hits;
        double v = std::abs(sigma_sym(s.xi, s.eta)) / denom;
        if (v < rec.value) {
            rec.value = v;
            rec.argmax_xi = s.xi;
            rec.argmax_eta = s.eta;
        }
    });
    rec.samples = hits;
    return rec;
}

double calibrate_sigma_constant(const ShellTriple& sh, int outer, int mu, int nu,
                                int grid_per_axis) {
    double phase_cut = std::ldexp(1.0, sh.q_max() - 10);
    double denom = std::ldexp(1.0, sh.k_min() + sh.k_max() + sh.p_max() + sh.q_max());
    double best = std::numeric_limits<double>::infinity();
    int g = grid_per_axis;
    auto leg_point = [](const LegIndex& leg, double urho, double uang, int s1, int s2) {
        double rho = std::ldexp(0.35 + 1.3 * urho, leg.k);
        double s, lam;
        if (leg.q && *leg.q < leg.p) {
            lam = std::min(1.0, std::ldexp(0.3 + 1.4 * uang, *leg.q));
            s = std::sqrt(std::max(0.0, 1.0 - lam * lam));
        } else {
            s = std::min(1.0, std::ldexp(0.3 + 1.4 * uang, leg.p));
            lam = std::sqrt(std::max(0.0, 1.0 - s * s));
        }
        return Vec2{s1 * rho * lam, s2 * rho * s};
    };
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < g; ++b)
            for (int sa = -1; sa <= 1; sa += 2)
                for (int sb = -1; sb <= 1; sb += 2) {
                    Vec2 xi = leg_point(sh.out, (a + 0.5) / g, (b + 0.5) / g, sa, sb);
                    for (int c = 0; c < g; ++c)
                        for (int d = 0; d < g; ++d)
                            for (int sc = -1; sc <= 1; sc += 2)
                                for (int sd = -1; sd <= 1; sd += 2) {
                                    Vec2 eta =
                                        leg_point(sh.right, (c + 0.5) / g, (d + 0.5) / g, sc, sd);
                                    if (chi_weight(sh, xi, eta) <= 0.5) continue;
                                    if (std::abs(phase(outer, mu, nu, xi, eta)) >= phase_cut)
                                        continue;
                                    best = std::min(best,
                                                    std::abs(sigma_sym(xi, eta)) / denom);
                                }
                }
    return best;
}

CaseOrgReport verify_case_organisation(const ScanConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    CaseOrgReport rep;
    auto draw = [&]() {
        double rho = std::ldexp(1.0, uni(rng, -10.0, 10.0));
        double s = std::min(1.0, std::ldexp(1.0, uni(rng, -30.0, 0.8)));
        double lam = std::sqrt(std::max(0.0, 1.0 - s * s));
        return Vec2{rsign(rng) * rho * lam, rsign(rng) * rho * s};
    };
    auto kp_of = [](Vec2 v, int& k, int& p) {
        double r = v.len();
        k = bucket_of(r, -60, 60);
        double s = r == 0.0 ? 0.0 : std::abs(v.y) / r;
        p = bucket_of(s, kAngularFloor, 0);
    };
    std::size_t budget = cfg.max_trials ? cfg.max_trials : 20000 * cfg.samples;
    for (std::size_t trial = 0; trial < budget; ++trial) {
        bool done = rep.case_counts[0] >= cfg.samples && rep.case_counts[1] >= cfg.samples &&
                    rep.case_counts[2] >= cfg.samples;
        if (done) break;
        ++rep.drawn;
        Vec2 xi = draw(), eta = draw();
        Vec2 dd = xi - eta;
        if (dd.len() == 0.0 || eta.len() == 0.0 || xi.len() == 0.0) continue;
        int k, p, k1, p1, k2, p2;
        kp_of(xi, k, p);
        kp_of(dd, k1, p1);
        kp_of(eta, k2, p2);
        int pmax = std::max(p1, p2);
        if (p > std::min(p1, p2) || p > pmax - 10) continue;
        ++rep.hypothesis_hits;
        bool ok = true;
        if (std::abs(k1 - k2) <= 4) {
            ++rep.case_counts[0];
            ok = p <= std::min(p1, p2) - 3 && std::abs(p1 - p2) <= 5;
        } else if (k1 < k2 - 4) {
            ++rep.case_counts[1];
            bool near = std::abs(k - k2) <= 2 && pmax == p1;
            bool brA = p <= p2 - 10 && p2 - 10 <= p1 - 12 && p2 + k2 - 2 <= p1 + k1 &&
                       p1 + k1 <= p2 + k2 + 2;
            bool brB = std::abs(p - p2) <= 10 && p1 + k1 <= p2 + k2 + 3;
            ok = near && (brA || brB);
        } else {
            ++rep.case_counts[2];
            bool near = std::abs(k - k1) <= 2 && pmax == p2;
            bool brA = p <= p1 - 10 && p1 - 10 <= p2 - 12 && p1 + k1 - 2 <= p2 + k2 &&
                       p2 + k2 <= p1 + k1 + 2;
            bool brB = std::abs(p - p1) <= 10 && p2 + k2 <= p1 + k1 + 3;
            ok = near && (brA || brB);
        }
        if (!ok) ++rep.violations;
    }
    return rep;
}

std::vector<ResonantMeasure> resonant_measure_check(const ShellTriple& sh, int outer, int mu,
                                                    int nu, const std::vector<double>& lambdas,
                                                    double kappa_lower, const ScanConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    // a fixed family of output frequencies to take the sup over
    std::vector<Vec2> xis;
    std::size_t guard = 0;
    while (xis.size() < 48 && ++guard < 200000) {
        Vec2 xi = draw_leg(rng, sh.out);
        if (leg_weight(sh.out, xi) > 0.5) xis.push_back(xi);
    }
    if (xis.empty()) throw EmptyRegionError("output shell unreachable: " + sh.id());

    double b2 = 1.7 * std::ldexp(1.0, sh.right.k);
    double area = 4.0 * b2 * b2;
    auto dlam1 = [](Vec2 v) {
        double r = v.len();
        return r == 0.0 ? 0.0 : v.y * v.y / (r * r * r);
    };
    std::size_t n_eta = std::max<std::size_t>(cfg.samples / 25, 2000);

    std::vector<ResonantMeasure> out;
    for (double lam : lambdas) {
        ResonantMeasure rm{lam, 0.0, 0.0, std::numeric_limits<double>::infinity()};
        std::mt19937_64 sub(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
        for (const Vec2& xi : xis) {
            double acc = 0.0;
            for (std::size_t i = 0; i < n_eta; ++i) {
                Vec2 eta{uni(sub, -b2, b2), uni(sub, -b2, b2)};
                double chi = chi_weight(sh, xi, eta);
                if (chi == 0.0) continue;
                double ph = phase(outer, mu, nu, xi, eta);
                double w = chi * psi_bump(ph / lam);
                if (w == 0.0) continue;
                acc += w * w;
                double grad = std::abs(mu * dlam1(xi - eta) - nu * dlam1(eta));
                rm.grad_min = std::min(rm.grad_min, grad);
            }
            rm.measure = std::max(rm.measure, area * acc / double(n_eta));
        }
        rm.bound = std::ldexp(1.0, sh.right.k + sh.right.p) * lam / kappa_lower;
        out.push_back(rm);
    }
    return out;
}

double resonant_part(const MultId& id, int outer, int mu, int nu, double lambda, Vec2 xi,
                     Vec2 eta) {
    return psi_bump(phase(outer, mu, nu, xi, eta) / lambda) * eval_multiplier(id, xi, eta);
}

double nonresonant_part(const MultId& id, int outer, int mu, int nu, double lambda, Vec2 xi,
                        Vec2 eta) {
    return eval_multiplier(id, xi, eta) - resonant_part(id, outer, mu, nu, lambda, xi, eta);
}

double w_norm_estimate(const ShellTriple& sh,
                       const std::function<double(Vec2, Vec2)>& symbol, int grid_per_axis) {
    int N = grid_per_axis;
    // the radial windows vanish identically beyond 1.6 * 2^k, so the box is
    // matched to the support to spend the grid on the window itself
    double bx = 1.6 * std::ldexp(1.0, sh.out.k);
    double be = 1.6 * std::ldexp(1.0, sh.right.k);
    std::vector<cplx> data(size_t(N) * N * N * N);
    auto coord = [N](int a, double b) { return -b + (2.0 * b) * (a + 0.5) / N; };
    size_t idx = 0;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d, ++idx) {
                    Vec2 xi{coord(a, bx), coord(b, bx)};
                    Vec2 eta{coord(c, be), coord(d, be)};
                    double chi = chi_weight(sh, xi, eta);
                    data[idx] = chi == 0.0 ? 0.0 : chi * symbol(xi, eta);
                }
    int dims[4] = {N, N, N, N};
    fftw_plan plan = fftw_plan_dft(4, dims, reinterpret_cast<fftw_complex*>(data.data()),
                                   reinterpret_cast<fftw_complex*>(data.data()),
                                   FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    double s = 0.0;
    for (const auto& c : data) s += std::abs(c);
    return s / (double(N) * N * N * N);
}

void write_scan_csv(const std::string& path, const std::vector<ScanRecord>& records) {
    std::ofstream f(path);
    f << "config_id,samples,statistic,value,argmax_xi1,argmax_xi2,argmax_eta1,argmax_eta2\n";
    for (const auto& r : records) {
        f << r.config_id << "," << r.samples << ",\"" << r.statistic << "\"," << fmt17(r.value)
          << "," << fmt17(r.argmax_xi.x) << "," << fmt17(r.argmax_xi.y) << ","
          << fmt17(r.argmax_eta.x) << "," << fmt17(r.argmax_eta.y) << "\n";
    }
}

}  // namespace stratwave
