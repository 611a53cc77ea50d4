// stratwave: command line front end.
//
// Subcommands:
//   decay   stationary-phase sup-norm decay of the semigroup on one shell
//   scan    multiplier scanners (null, sigma, case, measure, wnorm)
//   check   verification suites (identities, ibp, symmetrize, setsize,
//           angular, fouriersup)
//   solve   time evolution (sqg, boussinesq, boussinesq_z)
//
// Options come from an optional UTF-8 config file of `key = value` lines
// (# starts a comment) plus `--key value` command line overrides; the merged
// configuration is echoed to <out>/resolved_config.txt.
//
// Exit codes: 0 pass, 2 configuration error, 3 numerical abort, 4 bound
// violation, 5 empty sampling region.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "stratwave/bilinear.hpp"
#include "stratwave/checks.hpp"
#include "stratwave/norms.hpp"
#include "stratwave/presets.hpp"
#include "stratwave/report_io.hpp"
#include "stratwave/scanners.hpp"

using namespace stratwave;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Conf = std::map<std::string, std::string>;

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Conf load_config(const std::string& path) {
    Conf c;
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key or value");
        c[key] = val;
    }
    return c;
}

void apply_overrides(Conf& c, const std::vector<std::string>& extras) {
    for (size_t i = 0; i < extras.size(); ++i) {
        const std::string& tok = extras[i];
        if (tok.rfind("--", 0) != 0)
            throw ConfigError("expected --key value, got: " + tok);
        if (i + 1 >= extras.size()) throw ConfigError("missing value for " + tok);
        c[tok.substr(2)] = extras[++i];
    }
}

double get_num(const Conf& c, const std::string& key, double dflt) {
    auto it = c.find(key);
    if (it == c.end()) return dflt;
    try {
        size_t pos = 0;
        double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value for " + key + ": " + it->second);
    }
}

int get_int(const Conf& c, const std::string& key, int dflt) {
    double v = get_num(c, key, dflt);
    if (v != std::floor(v)) throw ConfigError("expected integer for " + key);
    return int(v);
}

std::string get_str(const Conf& c, const std::string& key, const std::string& dflt) {
    auto it = c.find(key);
    return it == c.end() ? dflt : it->second;
}

void echo_resolved(const Conf& c, const std::string& out_dir, const std::string& sub) {
    std::ofstream f(out_dir + "/resolved_config.txt");
    f << "subcommand = " << sub << "\n";
    for (const auto& [k, v] : c) f << k << " = " << v << "\n";
}

ShellTriple shell_from_conf(const Conf& c, bool need_q) {
    ShellTriple sh;
    auto leg = [&](const std::string& suffix) {
        LegIndex l;
        l.k = get_int(c, "k" + suffix, 0);
        l.p = get_int(c, "p" + suffix, 0);
        if (need_q || c.count("q" + suffix)) l.q = get_int(c, "q" + suffix, 0);
        return l;
    };
    sh.out = leg("");
    sh.left = leg("1");
    sh.right = leg("2");
    return sh;
}

int run_decay(const Conf& c, const std::string& out_dir) {
    GridSpec g(get_int(c, "n", 1024), get_num(c, "box", 160.0));
    int k = get_int(c, "k", 0);
    Field prof = ring_profile(g, 1.0, get_num(c, "a", 4.0), get_num(c, "r0", 1.0),
                              get_num(c, "b", 3.0), get_num(c, "tau0", 0.7));
    std::vector<double> times;
    for (double t = get_num(c, "t_min", 4.0); t <= get_num(c, "t_max", 512.0); t *= 2.0)
        times.push_back(t);
    auto pts = decay_experiment(prof, k, times);
    std::ofstream f(out_dir + "/decay.csv");
    f << "t,linf\n";
    for (const auto& p : pts) f << fmt17(p.t) << "," << fmt17(p.linf) << "\n";
    double slope = fit_log_slope(pts);
    std::cout << "decay slope: " << fmt17(slope) << "\n";
    double tol = get_num(c, "slope_tol", 0.07);
    if (std::abs(slope + 0.5) > tol)
        throw BoundViolation("slope " + fmt17(slope) + " outside -0.5 +/- " + fmt17(tol));
    return 0;
}

int run_scan(const Conf& c, const std::string& out_dir) {
    std::string kind = get_str(c, "target", "null");
    ScanConfig sc;
    sc.seed = std::uint64_t(get_num(c, "seed", 20260826));
    sc.samples = std::size_t(get_num(c, "samples", 100000));
    std::vector<ScanRecord> recs;
    if (kind == "null") {
        ShellTriple sh = shell_from_conf(c, false);
        recs = scan_null_structure_kinds(sh, primary_multiplier_kinds(), sc);
    } else if (kind == "sigma") {
        ShellTriple sh = shell_from_conf(c, true);
        ScanRecord r = scan_sigma_lower_bound(sh, get_int(c, "outer", +1), get_int(c, "mu", +1),
                                              get_int(c, "nu", +1), sc);
        recs.push_back(r);
        double c0 = get_num(c, "c0", kSigmaLowerC0);
        if (r.samples > 0 && r.value < c0)
            throw BoundViolation("sigma ratio " + fmt17(r.value) + " below c0 " + fmt17(c0));
    } else if (kind == "case") {
        CaseOrgReport rep = verify_case_organisation(sc);
        std::cout << "hypothesis hits: " << rep.hypothesis_hits << " cases: "
                  << rep.case_counts[0] << "/" << rep.case_counts[1] << "/"
                  << rep.case_counts[2] << " violations: " << rep.violations << "\n";
        if (rep.violations > 0) throw BoundViolation("case organisation violations");
        return 0;
    } else if (kind == "measure") {
        ShellTriple sh = shell_from_conf(c, true);
        std::vector<double> lams;
        std::stringstream ss(get_str(c, "lambdas", "0.01,0.02,0.04"));
        std::string tok;
        while (std::getline(ss, tok, ',')) lams.push_back(std::stod(tok));
        auto rows = resonant_measure_check(sh, get_int(c, "outer", +1), get_int(c, "mu", +1),
                                           get_int(c, "nu", -1), lams,
                                           get_num(c, "kappa_lower", 0.1), sc);
        std::ofstream f(out_dir + "/resonant.csv");
        f << "lambda,measure,bound,grad_min\n";
        for (const auto& r : rows)
            f << fmt17(r.lambda) << "," << fmt17(r.measure) << "," << fmt17(r.bound) << ","
              << fmt17(r.grad_min) << "\n";
        return 0;
    } else if (kind == "wnorm") {
        ShellTriple sh = shell_from_conf(c, false);
        MultId id = primary_multiplier_kinds()[size_t(get_int(c, "mult", 0))];
        auto sym = [id](Vec2 xi, Vec2 eta) { return eval_multiplier(id, xi, eta); };
        int gsz = get_int(c, "grid", 16);
        std::cout << "w-norm estimate (" << gsz << "): " << fmt17(w_norm_estimate(sh, sym, gsz))
                  << "\n";
        return 0;
    } else {
        throw ConfigError("unknown scan target: " + kind);
    }
    write_scan_csv(out_dir + "/scan.csv", recs);
    return 0;
}

int run_check(const Conf& c, const std::string&) {
    std::string suite = get_str(c, "suite", "identities");
    if (suite == "identities") {
        double tol = get_num(c, "tol", 1e-6);
        bool ok = true;
        for (const FdCheck& chk : fd_crosscheck_suite(get_num(c, "h", 1e-4))) {
            bool pass = chk.err <= tol;
            ok = ok && pass;
            std::cout << (pass ? "[ok]   " : "[FAIL] ") << chk.name << " err=" << fmt17(chk.err)
                      << " order=" << fmt17(chk.order) << "\n";
        }
        if (!ok) throw BoundViolation("identity check over tolerance");
        return 0;
    }
    std::vector<CheckLine> lines;
    if (suite == "ibp") {
        lines = check_ibp(get_int(c, "points", 192), get_num(c, "tol", 1e-6));
    } else if (suite == "symmetrize") {
        lines = check_symmetrize(get_int(c, "points", 96), get_num(c, "tol", 1e-8));
    } else if (suite == "setsize") {
        lines = check_setsize();
    } else if (suite == "angular") {
        lines = check_angular();
    } else if (suite == "fouriersup") {
        lines = check_fouriersup();
    } else {
        throw ConfigError("unknown check suite: " + suite);
    }
    for (const CheckLine& l : lines)
        std::cout << (l.pass ? "[ok]   " : "[FAIL] ") << l.name << " value=" << fmt17(l.value)
                  << " limit=" << fmt17(l.limit) << "\n";
    if (!all_pass(lines)) throw BoundViolation("check suite over tolerance: " + suite);
    return 0;
}

int run_solve(const Conf& c, const std::string& out_dir) {
    GridSpec g(get_int(c, "n", 256), get_num(c, "box", 40.0));
    std::string model = get_str(c, "model", "sqg");
    double eps = get_num(c, "eps", 0.05);
    FlowState init;
    if (model == "sqg") {
        init = sqg_initial(g, eps);
    } else if (model == "boussinesq") {
        init = boussinesq_initial(g, eps);
    } else if (model == "boussinesq_z") {
        init = omega_rho_to_z(boussinesq_initial(g, eps));
    } else {
        throw ConfigError("unknown model: " + model);
    }
    SolverConfig sc;
    sc.dt = get_num(c, "dt", 2e-3);
    sc.t_final = get_num(c, "T", 10.0);
    sc.monitor_norms = get_int(c, "monitor_norms", 0) != 0;
    sc.trajectory_csv = out_dir + "/trajectory.csv";
    sc.checkpoint_path = out_dir + "/state.chk";
    RunResult res = run_simulation(std::move(init), sc);
    if (res.cfl_warning) std::cout << "warning: CFL advisory exceeded\n";
    if (res.aborted) throw NumericalAbort("non-finite field values during the run");
    std::cout << "final t=" << fmt17(res.state.time) << " l2=" << fmt17(res.rows.back().l2)
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dispersive SQG / stratified Boussinesq laboratory"};
    app.require_subcommand(1);
    std::string config_path, out_dir = ".";
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--out", out_dir, "output directory");

    std::map<std::string, CLI::App*> subs;
    for (const char* name : {"decay", "scan", "check", "solve"}) {
        CLI::App* s = app.add_subcommand(name);
        s->allow_extras();
        subs[name] = s;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Conf conf;
        if (!config_path.empty()) conf = load_config(config_path);
        CLI::App* active = app.get_subcommands().front();
        apply_overrides(conf, active->remaining());
        echo_resolved(conf, out_dir, active->get_name());
        if (active == subs["decay"]) return run_decay(conf, out_dir);
        if (active == subs["scan"]) return run_scan(conf, out_dir);
        if (active == subs["check"]) return run_check(conf, out_dir);
        if (active == subs["solve"]) return run_solve(conf, out_dir);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalAbort& e) {
        std::cerr << "numerical abort: " << e.what() << "\n";
        return 3;
    } catch (const BoundViolation& e) {
        std::cerr << "bound violation: " << e.what() << "\n";
        return 4;
    } catch (const EmptyRegionError& e) {
        std::cerr << "empty region: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
