#include "stratwave/evolution.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "stratwave/report_io.hpp"
#include "stratwave/spectral_ops.hpp"

namespace stratwave {

namespace {

Field axpy(const Field& a, double c, const Field& b) {
    Field out = a;
    for (size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] += c * b.coeff[i];
    return out;
}

// velocity of an SQG state: u_hat = i xi_perp |xi|^(-1) theta_hat
void velocity_sqg(const Field& th, Field& u1, Field& u2) {
    const GridSpec& g = th.grid;
    u1 = Field(g);
    u2 = Field(g);
    for (int a1 = 0; a1 < g.n; ++a1) {
        double x1 = g.freq(a1);
        for (int a2 = 0; a2 < g.n; ++a2) {
            double x2 = g.freq(a2);
            double r = std::hypot(x1, x2);
            if (r == 0.0) continue;
            cplx v = th.at(a1, a2) / r;
            u1.at(a1, a2) = cplx(0.0, -x2) * v;
            u2.at(a1, a2) = cplx(0.0, x1) * v;
        }
    }
}

// velocity of a vorticity field: u_hat = -i xi_perp |xi|^(-2) omega_hat
void velocity_omega(const Field& om, Field& u1, Field& u2) {
    const GridSpec& g = om.grid;
    u1 = Field(g);
    u2 = Field(g);
    for (int a1 = 0; a1 < g.n; ++a1) {
        double x1 = g.freq(a1);
        for (int a2 = 0; a2 < g.n; ++a2) {
            double x2 = g.freq(a2);
            double r2 = x1 * x1 + x2 * x2;
            if (r2 == 0.0) continue;
            cplx v = om.at(a1, a2) / r2;
            u1.at(a1, a2) = cplx(0.0, x2) * v;
            u2.at(a1, a2) = cplx(0.0, -x1) * v;
        }
    }
}

// F(u . grad f), dealiased
Field advect(const Field& u1, const Field& u2, const Field& f) {
    Field p1 = fft_inverse(u1);
    Field p2 = fft_inverse(u2);
    Field d1 = fft_inverse(apply_ddx(f, 0));
    Field d2 = fft_inverse(apply_ddx(f, 1));
    Field prod(f.grid);
    for (size_t i = 0; i < prod.coeff.size(); ++i)
        prod.coeff[i] = p1.coeff[i] * d1.coeff[i] + p2.coeff[i] * d2.coeff[i];
    return dealias(fft_forward(prod));
}

void z_fields(const FlowState& s, Field& om, Field& rho) {
    om = apply_modgrad_pow(axpy(s.comp[0], 1.0, s.comp[1]), 1.0);
    for (auto& c : om.coeff) c *= 0.5;
    rho = axpy(s.comp[0], -1.0, s.comp[1]);
    for (auto& c : rho.coeff) c *= 0.5;
}

std::vector<Field> nonlinear_rhs(const FlowState& s) {
    switch (s.rep) {
        case Representation::SqgTheta: {
            Field u1, u2;
            velocity_sqg(s.comp[0], u1, u2);
            Field adv = advect(u1, u2, s.comp[0]);
            for (auto& c : adv.coeff) c = -c;
            return {adv};
        }
        case Representation::BoussinesqOmegaRho: {
            const Field& om = s.comp[0];
            const Field& rho = s.comp[1];
            Field u1, u2;
            velocity_omega(om, u1, u2);
            Field dom = advect(u1, u2, om);
            Field drho = advect(u1, u2, rho);
            const GridSpec& g = s.grid;
            for (int a1 = 0; a1 < g.n; ++a1) {
                double x1 = g.freq(a1);
                for (int a2 = 0; a2 < g.n; ++a2) {
                    double x2 = g.freq(a2);
                    double r2 = x1 * x1 + x2 * x2;
                    cplx dom_v = -dom.at(a1, a2) - cplx(0.0, x1) * rho.at(a1, a2);
                    cplx drho_v = -drho.at(a1, a2);
                    if (r2 > 0.0) drho_v -= cplx(0.0, x1) * om.at(a1, a2) / r2;
                    dom.at(a1, a2) = dom_v;
                    drho.at(a1, a2) = drho_v;
                }
            }
            return {dom, drho};
        }
        case Representation::BoussinesqZ: {
            Field om, rho;
            z_fields(s, om, rho);
            Field u1, u2;
            velocity_omega(om, u1, u2);
            Field a_om = advect(u1, u2, om);
            Field a_rho = advect(u1, u2, rho);
            Field inv_a_om = apply_modgrad_pow(a_om, -1.0);
            Field zp(s.grid), zm(s.grid);
            for (size_t i = 0; i < zp.coeff.size(); ++i) {
                zp.coeff[i] = -inv_a_om.coeff[i] - a_rho.coeff[i];
                zm.coeff[i] = -inv_a_om.coeff[i] + a_rho.coeff[i];
            }
            return {zp, zm};
        }
    }
    return {};
}

// sign of the semigroup absorbed by the integrating factor per component
int linear_sign(Representation rep, size_t idx) {
    if (rep == Representation::SqgTheta) return -1;
    if (rep == Representation::BoussinesqZ) return idx == 0 ? -1 : +1;
    return 0;
}

std::vector<Field> apply_linear(Representation rep, const std::vector<Field>& u, double dt) {
    std::vector<Field> out;
    for (size_t i = 0; i < u.size(); ++i) {
        int s = linear_sign(rep, i);
        out.push_back(s == 0 ? u[i] : apply_semigroup(u[i], dt, s));
    }
    return out;
}

}  // namespace

FlowState omega_rho_to_z(const FlowState& s) {
    if (s.rep != Representation::BoussinesqOmegaRho)
        throw std::invalid_argument("expected an (omega, rho) state");
    Field inv_om = apply_modgrad_pow(s.comp[0], -1.0);
    FlowState out;
    out.grid = s.grid;
    out.rep = Representation::BoussinesqZ;
    out.time = s.time;
    out.comp = {axpy(inv_om, +1.0, s.comp[1]), axpy(inv_om, -1.0, s.comp[1])};
    return out;
}

FlowState z_to_omega_rho(const FlowState& s) {
    if (s.rep != Representation::BoussinesqZ)
        throw std::invalid_argument("expected a Z state");
    FlowState out;
    out.grid = s.grid;
    out.rep = Representation::BoussinesqOmegaRho;
    out.time = s.time;
    Field om, rho;
    z_fields(s, om, rho);
    out.comp = {om, rho};
    return out;
}

std::vector<Field> to_profiles(const FlowState& s) {
    std::vector<Field> out;
    for (size_t i = 0; i < s.comp.size(); ++i) {
        int sg = linear_sign(s.rep, i);
        out.push_back(sg == 0 ? s.comp[i] : apply_semigroup(s.comp[i], s.time, -sg));
    }
    return out;
}

void step(FlowState& s, double dt) {
    auto scale_sum = [&](std::vector<Field> base, double c, const std::vector<Field>& add) {
        for (size_t i = 0; i < base.size(); ++i) base[i] = axpy(base[i], c, add[i]);
        return base;
    };
    FlowState work = s;

    std::vector<Field> k1 = nonlinear_rhs(s);

    work.comp = apply_linear(s.rep, scale_sum(s.comp, dt / 2.0, k1), dt / 2.0);
    work.time = s.time + dt / 2.0;
    std::vector<Field> k2 = nonlinear_rhs(work);

    std::vector<Field> e_half = apply_linear(s.rep, s.comp, dt / 2.0);
    work.comp = scale_sum(e_half, dt / 2.0, k2);
    std::vector<Field> k3 = nonlinear_rhs(work);

    std::vector<Field> e_full = apply_linear(s.rep, s.comp, dt);
    work.comp = scale_sum(e_full, dt, apply_linear(s.rep, k3, dt / 2.0));
    work.time = s.time + dt;
    std::vector<Field> k4 = nonlinear_rhs(work);

    std::vector<Field> acc = apply_linear(s.rep, k1, dt);
    std::vector<Field> mid = apply_linear(s.rep, scale_sum(k2, 1.0, k3), dt / 2.0);
    for (size_t i = 0; i < s.comp.size(); ++i) {
        Field next = e_full[i];
        next = axpy(next, dt / 6.0, acc[i]);
        next = axpy(next, dt / 3.0, mid[i]);
        next = axpy(next, dt / 6.0, k4[i]);
        s.comp[i] = next;
    }
    s.time += dt;
}

double cfl_speed(const FlowState& s) {
    Field u1, u2;
    if (s.rep == Representation::SqgTheta) {
        velocity_sqg(s.comp[0], u1, u2);
    } else {
        Field om = s.comp[0];
        if (s.rep == Representation::BoussinesqZ) {
            Field rho;
            z_fields(s, om, rho);
        }
        velocity_omega(om, u1, u2);
    }
    Field p1 = fft_inverse(u1);
    Field p2 = fft_inverse(u2);
    double vmax = 0.0;
    for (size_t i = 0; i < p1.coeff.size(); ++i)
        vmax = std::max(vmax, std::hypot(std::abs(p1.coeff[i]), std::abs(p2.coeff[i])));
    return vmax * s.grid.freq_max();
}

double energy_identity_residual(const FlowState& s) {
    if (s.rep == Representation::SqgTheta) return 0.0;
    Field om, rho, zp, zm;
    if (s.rep == Representation::BoussinesqZ) {
        zp = s.comp[0];
        zm = s.comp[1];
        z_fields(s, om, rho);
    } else {
        om = s.comp[0];
        rho = s.comp[1];
        Field inv_om = apply_modgrad_pow(om, -1.0);
        zp = axpy(inv_om, +1.0, rho);
        zm = axpy(inv_om, -1.0, rho);
    }
    double unorm = l2_norm_spectral(apply_modgrad_pow(om, -1.0));
    double lhs = unorm * unorm + std::pow(l2_norm_spectral(rho), 2);
    double zpn = l2_norm_spectral(zp), zmn = l2_norm_spectral(zm);
    double rhs = 0.5 * (zpn * zpn + zmn * zmn);
    return lhs > 0.0 ? std::abs(lhs - rhs) / lhs : 0.0;
}

namespace {

double state_l2(const FlowState& s) {
    if (s.rep == Representation::SqgTheta) return l2_norm_spectral(s.comp[0]);
    if (s.rep == Representation::BoussinesqOmegaRho) {
        double u = l2_norm_spectral(apply_modgrad_pow(s.comp[0], -1.0));
        double r = l2_norm_spectral(s.comp[1]);
        return std::sqrt(u * u + r * r);
    }
    double p = l2_norm_spectral(s.comp[0]), m = l2_norm_spectral(s.comp[1]);
    return std::sqrt(0.5 * (p * p + m * m));
}

double state_sobolev(const FlowState& s, int n0) {
    double acc = 0.0;
    for (const Field& f : s.comp) acc += std::pow(sobolev_norm(f, n0), 2);
    if (s.rep == Representation::BoussinesqZ) acc *= 0.5;
    return std::sqrt(acc);
}

MonitorRow make_row(const FlowState& s, const SolverConfig& cfg) {
    MonitorRow row;
    row.t = s.time;
    row.l2 = state_l2(s);
    row.energy_residual = energy_identity_residual(s);
    row.sobolev = state_sobolev(s, cfg.norms.n0);

    std::vector<Field> prof = to_profiles(s);
    std::vector<Field> tower = prof;
    for (int j = 1; j <= cfg.norms.s_tower_depth; ++j) {
        double acc = 0.0;
        for (auto& f : tower) {
            f = scaling_vf_spectral(f);
            acc += std::pow(l2_norm_spectral(f), 2);
        }
        if (s.rep == Representation::BoussinesqZ) acc *= 0.5;
        row.s_tower.push_back(std::sqrt(acc));
    }
    if (cfg.monitor_norms) {
        for (const Field& f : prof) {
            row.b = std::max(row.b, b_norm(f, cfg.norms));
            row.x = std::max(row.x, x_norm(f, cfg.norms));
            row.d = std::max(row.d, d_norm(f, cfg.norms));
        }
    }
    return row;
}

}  // namespace

RunResult run_simulation(FlowState init, const SolverConfig& cfg) {
    RunResult res;
    res.state = std::move(init);
    long total = std::lround(cfg.t_final / cfg.dt);
    long cadence = std::max<long>(1, (long)std::floor(cfg.t_final / (100.0 * cfg.dt)));

    res.rows.push_back(make_row(res.state, cfg));
    if (cfg.dt * cfl_speed(res.state) > 0.5) res.cfl_warning = true;

    for (long i = 0; i < total; ++i) {
        step(res.state, cfg.dt);
        bool last = i + 1 == total;
        if ((i + 1) % cadence == 0 || last) {
            MonitorRow row = make_row(res.state, cfg);
            if (!std::isfinite(row.l2)) {
                res.aborted = true;
                res.rows.push_back(row);
                break;
            }
            if (cfg.dt * cfl_speed(res.state) > 0.5) res.cfl_warning = true;
            res.rows.push_back(row);
        }
    }
    if (!cfg.trajectory_csv.empty()) write_trajectory_csv(cfg.trajectory_csv, res.rows);
    if (!cfg.checkpoint_path.empty() && !res.aborted)
        write_checkpoint(cfg.checkpoint_path, res.state);
    return res;
}

void write_trajectory_csv(const std::string& path, const std::vector<MonitorRow>& rows) {
    std::ofstream f(path);
    f << "t,l2,energy_identity_residual,sobolev";
    size_t depth = rows.empty() ? 0 : rows.front().s_tower.size();
    for (size_t j = 1; j <= depth; ++j) f << ",s" << j;
    f << ",b,x,d\n";
    for (const auto& r : rows) {
        f << fmt17(r.t) << "," << fmt17(r.l2) << "," << fmt17(r.energy_residual) << ","
          << fmt17(r.sobolev);
        for (double s : r.s_tower) f << "," << fmt17(s);
        f << "," << fmt17(r.b) << "," << fmt17(r.x) << "," << fmt17(r.d) << "\n";
    }
}

namespace {

constexpr std::uint32_t kCheckpointVersion = 1;

}  // namespace

void write_checkpoint(const std::string& path, const FlowState& s) {
    std::ofstream f(path, std::ios::binary);
    f.write("STRW", 4);
    std::uint32_t v = kCheckpointVersion, n = s.grid.n;
    std::uint8_t rep = std::uint8_t(s.rep), nc = std::uint8_t(s.comp.size());
    f.write(reinterpret_cast<const char*>(&v), 4);
    f.write(reinterpret_cast<const char*>(&n), 4);
    f.write(reinterpret_cast<const char*>(&s.grid.box_size), 8);
    f.write(reinterpret_cast<const char*>(&rep), 1);
    f.write(reinterpret_cast<const char*>(&s.time), 8);
    f.write(reinterpret_cast<const char*>(&nc), 1);
    for (const Field& c : s.comp)
        f.write(reinterpret_cast<const char*>(c.coeff.data()),
                std::streamsize(c.coeff.size() * sizeof(cplx)));
}

FlowState read_checkpoint(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    char magic[4];
    f.read(magic, 4);
    if (!f || std::memcmp(magic, "STRW", 4) != 0)
        throw std::runtime_error("not a checkpoint file: " + path);
    std::uint32_t v = 0, n = 0;
    double box = 0.0, time = 0.0;
    std::uint8_t rep = 0, nc = 0;
    f.read(reinterpret_cast<char*>(&v), 4);
    f.read(reinterpret_cast<char*>(&n), 4);
    f.read(reinterpret_cast<char*>(&box), 8);
    f.read(reinterpret_cast<char*>(&rep), 1);
    f.read(reinterpret_cast<char*>(&time), 8);
    f.read(reinterpret_cast<char*>(&nc), 1);
    if (v != kCheckpointVersion) throw std::runtime_error("unsupported checkpoint version");
    FlowState s;
    s.grid = GridSpec(int(n), box);
    s.rep = Representation(rep);
    s.time = time;
    for (int i = 0; i < nc; ++i) {
        Field c(s.grid);
        f.read(reinterpret_cast<char*>(c.coeff.data()),
               std::streamsize(c.coeff.size() * sizeof(cplx)));
        s.comp.push_back(std::move(c));
    }
    if (!f) throw std::runtime_error("truncated checkpoint: " + path);
    return s;
}

}  // namespace stratwave
