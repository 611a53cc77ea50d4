// PURPOSE: end-to-end acceptance gate.  Runs every headline quantitative
// check of the library in one binary: linear decay rates, the decay
// decomposition, exact symbol identities, the Monte Carlo symbol scans, the
// bilinear quadrature checks, the norm machinery, the solvers, and a
// report-only long norm trajectory.  Each numbered criterion prints exactly
// one [PASS]/[FAIL] line with its measured value and pinned tolerance; the
// exit status is the number of hard failures (the trajectory report never
// gates).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "stratwave/bilinear.hpp"
#include "stratwave/checks.hpp"
#include "stratwave/dyadic.hpp"
#include "stratwave/evolution.hpp"
#include "stratwave/norms.hpp"
#include "stratwave/presets.hpp"
#include "stratwave/scanners.hpp"
#include "stratwave/spectral_ops.hpp"
#include "stratwave/symbols.hpp"

using namespace stratwave;

namespace {

int g_failures = 0;
std::chrono::steady_clock::time_point g_t0;

void start() { g_t0 = std::chrono::steady_clock::now(); }

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - g_t0).count();
    std::printf("[%s] C%d %s: %s (%.1fs)\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

double sup_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.coeff.size(); ++i) m = std::max(m, std::abs(a.coeff[i] - b.coeff[i]));
    return m;
}

bool within_factor_two(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) return false;
    double r = a / b;
    return r <= 2.0 && r >= 0.5;
}

// C1: sup-norm decay of the unit-shell semigroup evolution matches t^(-1/2)
void criterion_decay_slope() {
    start();
    GridSpec g{1024, 160.0};
    Field prof = ring_profile(g, 1.0, 4.0, 1.0, 3.0, 0.7);
    std::vector<double> times;
    for (double t = 4.0; t <= 512.0; t *= 2.0) times.push_back(t);
    double slope = fit_log_slope(decay_experiment(prof, 0, times));
    report(1, "decay slope", std::abs(slope + 0.5) <= 0.07,
           "slope=" + fmt(slope) + " window -0.5+/-0.07");
}

// C2: in the regime 2^p <= t^(-1/2), the shell sup norm scales like
// 2^p 2^(k-4k+) times the decay norm, uniformly over (p, t)
void criterion_small_p() {
    start();
    GridSpec g{512, 160.0};
    Field prof = ring_profile(g, 1.0, 4.0, 1.0, 3.0, 0.7);
    NormConfig cfg;
    double dn = d_norm(prof, cfg);
    DyadicRange range(g);
    struct Pair {
        int p;
        double t;
    };
    std::vector<Pair> pairs = {{-2, 16.0}, {-3, 64.0}, {-4, 256.0}};
    std::vector<double> ratios;
    for (const Pair& pr : pairs) {
        Field ev = apply_semigroup(prof, pr.t, +1);
        Field shell = project(ev, DyadicIndex{0, pr.p, {}, {}}, range);
        double val = linf_norm(fft_inverse(shell));
        ratios.push_back(val / (std::ldexp(1.0, pr.p) * dn));
    }
    double lo = ratios[0], hi = ratios[0];
    for (double r : ratios) {
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    bool pass = lo > 0.0 && std::isfinite(hi) && hi / lo <= 2.0;
    report(2, "small-p shell ratio",
           pass, "ratios=" + fmt(ratios[0]) + "/" + fmt(ratios[1]) + "/" + fmt(ratios[2]) +
                     " spread=" + fmt(hi / lo) + " limit 2");
}

// C3: the angular split of a shell profile is exact, and the high-angular
// piece obeys its dyadic bound stably under time doubling
void criterion_decay_decomposition() {
    start();
    GridSpec g{512, 160.0};
    Field prof = ring_profile(g, 1.0, 4.0, 1.0, 3.0, 0.7);
    NormConfig cfg;
    DecaySplit a = decay_decomposition(prof, 0, -2, 32.0, cfg);
    DecaySplit b = decay_decomposition(prof, 0, -2, 64.0, cfg);
    double ra = a.piece2_l2 / a.piece2_bound;
    double rb = b.piece2_l2 / b.piece2_bound;
    bool pass = a.split_residual <= 1e-10 && b.split_residual <= 1e-10 && ra <= 1.0 &&
                rb <= 1.0 && within_factor_two(ra, rb);
    report(3, "decay decomposition",
           pass, "split=" + fmt(std::max(a.split_residual, b.split_residual)) +
                     " (<=1e-10), bound ratios " + fmt(ra) + "/" + fmt(rb) + " (<=1, x2 stable)");
}

// C4: closed-form phase/multiplier identities against finite differences
void criterion_identities() {
    start();
    bool pass = true;
    double worst = 0.0;
    for (const FdCheck& c : fd_crosscheck_suite(1e-4)) {
        worst = std::max(worst, c.err);
        bool ok = c.err <= 1e-6 && (c.err <= 1e-11 || std::abs(c.order - 2.0) <= 0.4);
        pass = pass && ok;
    }
    report(4, "symbol identities", pass, "worst residual=" + fmt(worst) + " (<=1e-6, order 2)");
}

// C5: null-structure size bound for all seven multiplier kinds across three
// shell regimes, stable between 1e4 and 1e5 samples
void criterion_null_structure() {
    start();
    std::vector<ShellTriple> regimes = {
        {{0, 0, {}}, {0, 0, {}}, {0, 0, {}}},    // balanced unit shells
        {{0, -6, {}}, {0, 0, {}}, {0, 0, {}}},   // degenerate output angle
        {{1, 0, {}}, {1, -3, {}}, {0, 0, {}}},   // split radial scales
    };
    bool pass = true;
    double sup = 0.0, spread = 0.0;
    for (const ShellTriple& sh : regimes) {
        ScanConfig small, large;
        small.samples = 10000;
        large.samples = 100000;
        std::vector<ScanRecord> rs = scan_null_structure_kinds(sh, primary_multiplier_kinds(),
                                                               small);
        std::vector<ScanRecord> rl = scan_null_structure_kinds(sh, primary_multiplier_kinds(),
                                                               large);
        for (size_t i = 0; i < rs.size(); ++i) {
            sup = std::max(sup, rl[i].value);
            spread = std::max(spread, std::max(rs[i].value, rl[i].value) /
                                          std::min(rs[i].value, rl[i].value));
            pass = pass && within_factor_two(rs[i].value, rl[i].value) && rl[i].value <= 8.0;
        }
    }
    report(5, "null structure scan", pass,
           "sup ratio=" + fmt(sup) + " (<=8), worst sample-doubling spread=" + fmt(spread) +
               " (<=2), 7 kinds x 3 regimes");
}

// C6: near-resonant samples keep |sigma| above the calibrated constant
void criterion_sigma_dichotomy() {
    start();
    ShellTriple sh{{0, -12, 0}, {0, 0, -1}, {0, 0, -1}};
    ScanConfig sc;
    sc.samples = 100000;
    ScanRecord r = scan_sigma_lower_bound(sh, +1, +1, +1, sc);
    bool pass = r.samples > 0 && r.value >= kSigmaLowerC0;
    report(6, "sigma lower bound", pass,
           "min=" + fmt(r.value) + " >= c0=" + fmt(kSigmaLowerC0) + " on " +
               std::to_string(r.samples) + " near-resonant hits");
}

// C7: dyadic case organisation holds on every hypothesis sample
void criterion_case_organisation() {
    start();
    ScanConfig sc;
    sc.samples = 100000;
    CaseOrgReport rep = verify_case_organisation(sc);
    std::size_t least = std::min({rep.case_counts[0], rep.case_counts[1], rep.case_counts[2]});
    bool pass = rep.violations == 0 && least >= sc.samples;
    report(7, "case organisation", pass,
           std::to_string(rep.violations) + " violations, per-case counts >= " +
               std::to_string(least));
}

// C8: one-step integration by parts in eta and the quadratic symmetrizations
void criterion_ibp_symmetrize() {
    start();
    std::vector<CheckLine> lines = check_ibp(192, 1e-6);
    std::vector<CheckLine> sym = check_symmetrize(96, 1e-8);
    lines.insert(lines.end(), sym.begin(), sym.end());
    double worst = 0.0;
    for (const CheckLine& l : lines)
        if (l.limit <= 1e-5) worst = std::max(worst, l.value);
    report(8, "ibp + symmetrization", all_pass(lines),
           "worst gated residual=" + fmt(worst) + " (ibp<=1e-6, symmetrization<=1e-8)");
}

// C9: set-size bound over randomized profile pairs, the nonresonant boundary
// bound, and near-linear growth of the resonant measure in the threshold
void criterion_set_size() {
    start();
    ShellTriple sh{{0, 0, 0}, {0, -2, 0}, {0, -2, 0}};
    MultId id{MultFamily::M, +1, +1, +1};
    PhaseSigns signs{+1, +1, +1};
    std::mt19937_64 rng(42);
    auto uni = [&](double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(rng);
    };
    auto random_ring = [&]() {
        return gaussian_ring(cplx(uni(0.5, 1.5), uni(-0.5, 0.5)), uni(4.0, 12.0),
                             uni(0.7, 1.3), uni(2.0, 8.0), uni(-3.0, 3.0));
    };
    bool pass = true;
    double worst_ratio = 0.0, worst_spread = 0.0;
    for (int i = 0; i < 30; ++i) {
        ProfileFn F = random_ring(), G = random_ring();
        SetSizeResult c = setsize_check(id, sh, signs, 0.5, F.value, G.value, 12, 32);
        SetSizeResult f = setsize_check(id, sh, signs, 0.5, F.value, G.value, 12, 64);
        worst_ratio = std::max(worst_ratio, f.ratio);
        worst_spread = std::max(worst_spread,
                                std::max(c.ratio, f.ratio) / std::min(c.ratio, f.ratio));
        pass = pass && f.ratio <= 1.0 && within_factor_two(c.ratio, f.ratio);
    }
    double worst_boundary = 0.0;
    for (int i = 0; i < 5; ++i) {
        ProfileFn F = random_ring(), G = random_ring();
        BoundaryResult b = nonresonant_boundary_eval(id, sh, signs, 0.5, 0.25, F.value, G.value,
                                                     12, 48);
        double r = b.bound > 0.0 ? b.lhs / b.bound : 1e9;
        worst_boundary = std::max(worst_boundary, r);
        pass = pass && r <= 1.0;
    }
    ShellTriple msh{{0, 0, -2}, {-2, 0, -1}, {0, 0, -2}};
    ScanConfig sc;
    sc.samples = 2500000;
    std::vector<ResonantMeasure> rows =
        resonant_measure_check(msh, +1, +1, -1, {0.01, 0.02, 0.04}, 1.0, sc);
    double g1 = rows[1].measure / rows[0].measure;
    double g2 = rows[2].measure / rows[1].measure;
    bool linear = g1 >= 1.4 && g1 <= 2.6 && g2 >= 1.4 && g2 <= 2.6;
    for (const ResonantMeasure& r : rows) pass = pass && r.measure <= 0.1 * r.bound;
    pass = pass && linear;
    report(9, "set size / boundary / resonant measure", pass,
           "set-size max=" + fmt(worst_ratio) + " spread=" + fmt(worst_spread) +
               ", boundary max=" + fmt(worst_boundary) + ", measure doublings " + fmt(g1) + "/" +
               fmt(g2) + " (window [1.4,2.6])");
}

// C10: the 4-D Fourier l1 estimate of the localized symbols is finite and
// settles under grid doubling
void criterion_w_norm() {
    start();
    ShellTriple sh{{0, 0, {}}, {0, 0, {}}, {0, 0, {}}};
    bool pass = true;
    std::string detail;
    for (MultFamily fam : {MultFamily::M0, MultFamily::M}) {
        MultId id{fam, +1, +1, +1};
        auto sym = [id](Vec2 xi, Vec2 eta) { return eval_multiplier(id, xi, eta); };
        double w16 = w_norm_estimate(sh, sym, 16);
        double w32 = w_norm_estimate(sh, sym, 32);
        double change = std::abs(w32 - w16) / w16;
        pass = pass && std::isfinite(w32) && w16 > 0.0 && change < 0.5;
        if (!detail.empty()) detail += ", ";
        detail += id.name() + ": " + fmt(w16) + "->" + fmt(w32) + " change=" + fmt(change);
    }
    report(10, "w-norm grid stability", pass, detail + " (<50%)");
}

// C11: angular partition of unity, Parseval, Bernstein, commutator with S
void criterion_angular() {
    start();
    std::vector<CheckLine> lines = check_angular();
    double pou = lines.empty() ? 1.0 : lines[0].value;
    report(11, "angular machinery", all_pass(lines),
           "partition=" + fmt(pou) + " (<=1e-4), " + std::to_string(lines.size()) +
               " checks (Parseval, Bernstein l=2..6, [S,R_l])");
}

// C12: pointwise Fourier control constant across the profile family
void criterion_fourier_sup() {
    start();
    std::vector<CheckLine> lines = check_fouriersup();
    double spread = lines.empty() ? 0.0 : lines.back().value;
    report(12, "Fourier sup control", all_pass(lines),
           "6-member family, spread=" + fmt(spread) + " (<=2), per-field ratio <= " +
               fmt(lines.empty() ? 0.0 : lines[0].limit));
}

// C13: conservation, cross-formulation agreement, and temporal order of the
// solvers
void criterion_solver() {
    start();
    bool pass = true;
    std::string detail;

    {  // SQG L2 conservation over a long run
        GridSpec g{256, 40.0};
        FlowState s = sqg_initial(g, 0.05);
        double n0 = l2_norm_spectral(s.comp[0]);
        SolverConfig cfg;
        cfg.dt = 2e-3;
        cfg.t_final = 10.0;
        RunResult r = run_simulation(s, cfg);
        double drift = 0.0;
        for (const MonitorRow& row : r.rows) drift = std::max(drift, std::abs(row.l2 - n0) / n0);
        pass = pass && !r.aborted && drift <= 1e-8;
        detail += "sqg drift=" + fmt(drift) + " (<=1e-8)";
    }
    {  // Boussinesq energy identity along the flow
        GridSpec g{128, 40.0};
        FlowState s = boussinesq_initial(g, 0.05);
        SolverConfig cfg;
        cfg.dt = 2e-3;
        cfg.t_final = 1.0;
        RunResult r = run_simulation(s, cfg);
        double worst = 0.0;
        for (const MonitorRow& row : r.rows) worst = std::max(worst, row.energy_residual);
        pass = pass && !r.aborted && worst <= 1e-10;
        detail += ", energy=" + fmt(worst) + " (<=1e-10)";
    }
    {  // omega-rho versus Z formulation
        GridSpec g{128, 40.0};
        FlowState a = boussinesq_initial(g, 0.01);
        FlowState b = omega_rho_to_z(a);
        SolverConfig cfg;
        cfg.dt = 2e-3;
        cfg.t_final = 1.0;
        FlowState ra = run_simulation(a, cfg).state;
        FlowState rb = z_to_omega_rho(run_simulation(b, cfg).state);
        double d = std::max(sup_diff(ra.comp[0], rb.comp[0]), sup_diff(ra.comp[1], rb.comp[1]));
        pass = pass && d <= 1e-5;
        detail += ", cross-form=" + fmt(d) + " (<=1e-5)";
    }
    {  // temporal self-convergence
        GridSpec g{64, 20.0};
        double T = 0.5;
        auto run_at = [&](double dt) {
            SolverConfig cfg;
            cfg.dt = dt;
            cfg.t_final = T;
            return run_simulation(sqg_initial(g, 2.0), cfg).state;
        };
        FlowState ref = run_at(T / 256.0);
        double e1 = sup_diff(run_at(T / 16.0).comp[0], ref.comp[0]);
        double e2 = sup_diff(run_at(T / 32.0).comp[0], ref.comp[0]);
        double order = std::log2(e1 / e2);
        pass = pass && order >= 3.7;
        detail += ", order=" + fmt(order) + " (>=3.7)";
    }
    report(13, "solvers", pass, detail);
}

// C14: long low-amplitude run with profile-norm tracking.  Reported only:
// desk-scale resolution cannot support an assertion about the asymptotic
// regime, so growth beyond the 3x watermark is printed, not failed.
void criterion_norm_trajectory() {
    start();
    GridSpec g{512, 40.0};
    FlowState s = sqg_initial(g, 0.02);
    NormConfig nc;
    Field prof0 = to_profiles(s)[0];
    double b0 = b_norm(prof0, nc), x0 = x_norm(prof0, nc);
    double n0 = l2_norm_spectral(s.comp[0]);
    double bmax = b0, xmax = x0, drift = 0.0;
    SolverConfig cfg;
    cfg.dt = 0.25;
    for (int seg = 0; seg < 8; ++seg) {
        cfg.t_final = 25.0;
        RunResult r = run_simulation(s, cfg);
        s = std::move(r.state);
        if (r.aborted) {
            report(14, "norm trajectory (report only)", true, "aborted mid-run");
            return;
        }
        Field prof = to_profiles(s)[0];
        bmax = std::max(bmax, b_norm(prof, nc));
        xmax = std::max(xmax, x_norm(prof, nc));
        drift = std::max(drift, std::abs(l2_norm_spectral(s.comp[0]) - n0) / n0);
    }
    report(14, "norm trajectory (report only)", true,
           "T=200 eps=0.02 n=512: B max/initial=" + fmt(bmax / b0) +
               ", X max/initial=" + fmt(xmax / x0) + " (3x watermark), L2 drift=" + fmt(drift));
}

}  // namespace

int main() {
    criterion_decay_slope();
    criterion_small_p();
    criterion_decay_decomposition();
    criterion_identities();
    criterion_null_structure();
    criterion_sigma_dichotomy();
    criterion_case_organisation();
    criterion_ibp_symmetrize();
    criterion_set_size();
    criterion_w_norm();
    criterion_angular();
    criterion_fourier_sup();
    criterion_solver();
    criterion_norm_trajectory();
    std::printf("%d of 14 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
