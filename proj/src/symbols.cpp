#include "stratwave/symbols.hpp"

#include <cmath>

namespace stratwave {

double Vec2::len() const { return std::hypot(x, y); }

double lambda_of(Vec2 v) {
    double r = v.len();
    return r == 0.0 ? 0.0 : v.x / r;
}

double sigma_sym(Vec2 xi, Vec2 eta) { return (xi - eta).dot(eta.perp()); }

double phase(int outer, int mu, int nu, Vec2 xi, Vec2 eta) {
    return outer * lambda_of(xi) - mu * lambda_of(xi - eta) - nu * lambda_of(eta);
}

std::string MultId::name() const {
    auto s = [](int v) { return v > 0 ? "+" : "-"; };
    switch (family) {
        case MultFamily::M0: return "m0";
        case MultFamily::M: return std::string("m") + s(outer) + "^" + s(mu) + s(mu);
        case MultFamily::MPM: return std::string("m") + s(outer) + "^+-";
        case MultFamily::N: return std::string("n") + s(outer) + "^" + s(mu) + s(nu);
    }
    return "?";
}

double eval_multiplier(const MultId& id, Vec2 xi, Vec2 eta) {
    Vec2 d = xi - eta;
    double axi = xi.len(), ad = d.len(), ae = eta.len();
    if (ad < kDegenerateTol || ae < kDegenerateTol) return 0.0;
    double sg = sigma_sym(xi, eta);
    if (id.family == MultFamily::M0)
        return 0.5 * sg / (ad * ae) * (ad - ae);
    if (axi < kDegenerateTol) return 0.0;
    // xi.(xi-eta)_perp and (xi-eta)_perp.eta both reduce to -sigma
    double C = -sg / (axi * ad);
    double D = -sg / (ad * ae);
    switch (id.family) {
        case MultFamily::M:
            return -0.125 * C * (ae * ae - ad * ad) / ae
                   - (id.outer * id.mu) * 0.125 * D * (ad - ae);
        case MultFamily::MPM:
            return -0.25 * C * (ae * ae - ad * ad) / ae + id.outer * 0.25 * D * (ad + ae);
        case MultFamily::N:
            return -0.25 * C * ae - (id.outer * id.nu) * 0.25 * D * ae;
        default: return 0.0;
    }
}

std::vector<MultId> primary_multiplier_kinds() {
    std::vector<MultId> out;
    out.push_back({MultFamily::M0, +1, +1, +1});
    for (int outer : {+1, -1})
        for (int mu : {+1, -1}) out.push_back({MultFamily::M, outer, mu, mu});
    for (int outer : {+1, -1}) out.push_back({MultFamily::MPM, outer, +1, -1});
    return out;
}

double S_eta_phase(int, int mu, int, Vec2 xi, Vec2 eta) {
    Vec2 d = xi - eta;
    double ad = d.len();
    if (ad < kDegenerateTol) return 0.0;
    return mu * d.y / (ad * ad * ad) * sigma_sym(xi, eta);
}

double S_xi_minus_eta_phase(int, int, int nu, Vec2 xi, Vec2 eta) {
    double ae = eta.len();
    if (ae < kDegenerateTol) return 0.0;
    return nu * eta.y / (ae * ae * ae) * sigma_sym(xi, eta);
}

double W_xi_phase(int outer, int mu, int, Vec2 xi, Vec2 eta) {
    double axi = xi.len();
    if (axi < kDegenerateTol) return 0.0;
    double out = -outer * xi.y / axi;
    Vec2 d = xi - eta;
    double ad = d.len();
    if (ad >= kDegenerateTol) out += mu * d.y / (ad * ad * ad) * xi.dot(d);
    return out;
}

double D_eta_phase(int, int mu, int nu, Vec2 xi, Vec2 eta) {
    Vec2 d = xi - eta;
    double ad = d.len(), ae = eta.len();
    double out = 0.0;
    if (ad >= kDegenerateTol) {
        double lam = lambda_of(d);
        out += mu * (ae / ad) * (1.0 - lam * lam);
    }
    double lame = lambda_of(eta);
    out -= nu * (1.0 - lame * lame);
    return out;
}

namespace {

double dir_eta(const Symbol2& f, Vec2 xi, Vec2 eta, Vec2 dir, double h) {
    return (f(xi, eta + dir * h) - f(xi, eta - dir * h)) / (2.0 * h);
}

double dir_xi(const Symbol2& f, Vec2 xi, Vec2 eta, Vec2 dir, double h) {
    return (f(xi + dir * h, eta) - f(xi - dir * h, eta)) / (2.0 * h);
}

}  // namespace

double fd_S_eta(const Symbol2& f, Vec2 xi, Vec2 eta, double h) {
    return dir_eta(f, xi, eta, eta, h);
}
double fd_W_eta(const Symbol2& f, Vec2 xi, Vec2 eta, double h) {
    return dir_eta(f, xi, eta, eta.perp(), h);
}
double fd_S_xi(const Symbol2& f, Vec2 xi, Vec2 eta, double h) {
    return dir_xi(f, xi, eta, xi, h);
}
double fd_W_xi(const Symbol2& f, Vec2 xi, Vec2 eta, double h) {
    return dir_xi(f, xi, eta, xi.perp(), h);
}
double fd_S_xi_minus_eta(const Symbol2& f, Vec2 xi, Vec2 eta, double h) {
    return dir_eta(f, xi, eta, xi - eta, h);
}
double fd_W_xi_minus_eta(const Symbol2& f, Vec2 xi, Vec2 eta, double h) {
    return dir_eta(f, xi, eta, (xi - eta).perp(), h);
}
double fd_D_eta(const Symbol2& f, Vec2 xi, Vec2 eta, double h) {
    return dir_eta(f, xi, eta, Vec2{eta.len(), 0.0}, h);
}

namespace {

struct SamplePoint {
    Vec2 xi, eta;
};

const std::vector<SamplePoint>& sample_points() {
    static const std::vector<SamplePoint> pts = {
        {{2.0, 1.0}, {1.0, 0.3}},   {{0.7, -1.3}, {1.1, 0.9}},
        {{-1.2, 0.8}, {0.4, -1.6}}, {{3.1, 0.2}, {-0.9, 1.4}},
        {{0.5, 2.7}, {1.8, -0.6}},
    };
    return pts;
}

// max relative error of fd(h) against exact over points and sign triples
double suite_err(const std::function<double(int, int, int, Vec2, Vec2, double)>& fd,
                 const std::function<double(int, int, int, Vec2, Vec2)>& exact, double h) {
    double worst = 0.0;
    for (const auto& sp : sample_points())
        for (int outer : {+1, -1})
            for (int mu : {+1, -1})
                for (int nu : {+1, -1}) {
                    double a = fd(outer, mu, nu, sp.xi, sp.eta, h);
                    double b = exact(outer, mu, nu, sp.xi, sp.eta);
                    worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
                }
    return worst;
}

FdCheck make_check(const std::string& name,
                   const std::function<double(int, int, int, Vec2, Vec2, double)>& fd,
                   const std::function<double(int, int, int, Vec2, Vec2)>& exact, double h) {
    double e1 = suite_err(fd, exact, h);
    double e2 = suite_err(fd, exact, h / 2.0);
    double order = e2 > 0.0 ? std::log2(e1 / e2) : 2.0;
    return {name, e1, order};
}

}  // namespace

std::vector<FdCheck> fd_crosscheck_suite(double h) {
    std::vector<FdCheck> out;
    auto ph = [](int o, int m, int n) {
        return [o, m, n](Vec2 xi, Vec2 eta) { return phase(o, m, n, xi, eta); };
    };

    out.push_back(make_check(
        "S_eta acting on the phase",
        [&](int o, int m, int n, Vec2 xi, Vec2 eta, double hh) {
            return fd_S_eta(ph(o, m, n), xi, eta, hh);
        },
        S_eta_phase, h));

    out.push_back(make_check(
        "S_(xi-eta) acting on the phase",
        [&](int o, int m, int n, Vec2 xi, Vec2 eta, double hh) {
            return fd_S_xi_minus_eta(ph(o, m, n), xi, eta, hh);
        },
        S_xi_minus_eta_phase, h));

    out.push_back(make_check(
        "W_xi acting on the phase",
        [&](int o, int m, int n, Vec2 xi, Vec2 eta, double hh) {
            return fd_W_xi(ph(o, m, n), xi, eta, hh);
        },
        W_xi_phase, h));

    out.push_back(make_check(
        "D_eta acting on the phase",
        [&](int o, int m, int n, Vec2 xi, Vec2 eta, double hh) {
            return fd_D_eta(ph(o, m, n), xi, eta, hh);
        },
        D_eta_phase, h));

    out.push_back(make_check(
        "S_eta acting on sigma (equals sigma)",
        [](int, int, int, Vec2 xi, Vec2 eta, double hh) {
            return fd_S_eta([](Vec2 x, Vec2 e) { return sigma_sym(x, e); }, xi, eta, hh);
        },
        [](int, int, int, Vec2 xi, Vec2 eta) { return sigma_sym(xi, eta); }, h));

    // every multiplier is homogeneous of degree one: (S_xi + S_eta) m = m
    for (const MultId& id : primary_multiplier_kinds()) {
        out.push_back(make_check(
            "degree-one homogeneity of " + id.name(),
            [id](int, int, int, Vec2 xi, Vec2 eta, double hh) {
                auto m = [id](Vec2 x, Vec2 e) { return eval_multiplier(id, x, e); };
                return fd_S_xi(m, xi, eta, hh) + fd_S_eta(m, xi, eta, hh);
            },
            [id](int, int, int, Vec2 xi, Vec2 eta) { return eval_multiplier(id, xi, eta); },
            h));
    }

    // resolution of a Cartesian derivative through S and W:
    // d/dxi1 f = (-xi2 W_xi f + xi1 S_xi f)/|xi|^2, tested on Lambda
    out.push_back(make_check(
        "d/dxi1 resolved through S_xi and W_xi",
        [](int, int, int, Vec2 xi, Vec2 eta, double hh) {
            auto lam = [](Vec2 x, Vec2) { return lambda_of(x); };
            return dir_xi(lam, xi, eta, Vec2{1.0, 0.0}, hh);
        },
        [](int, int, int, Vec2 xi, Vec2) { return xi.y * xi.y / std::pow(xi.len(), 3); }, h));

    // S_eta written in the (S_(xi-eta), W_(xi-eta)) frame, applied to the phase
    out.push_back(make_check(
        "S_eta decomposed in the xi-eta frame",
        [&](int o, int m, int n, Vec2 xi, Vec2 eta, double hh) {
            Vec2 d = xi - eta;
            double ad2 = d.dot(d);
            return eta.dot(d) / ad2 * fd_S_xi_minus_eta(ph(o, m, n), xi, eta, hh)
                   + eta.dot(d.perp()) / ad2 * fd_W_xi_minus_eta(ph(o, m, n), xi, eta, hh);
        },
        S_eta_phase, h));

    // D_eta = (|eta|/|xi-eta|) D_(xi-eta) on the phase
    out.push_back(make_check(
        "D_eta as a rescaled D_(xi-eta)",
        [&](int o, int m, int n, Vec2 xi, Vec2 eta, double hh) {
            Vec2 d = xi - eta;
            auto f = ph(o, m, n);
            double ddir = (f(xi, eta - Vec2{d.len(), 0.0} * hh) -
                           f(xi, eta + Vec2{d.len(), 0.0} * hh)) / (-2.0 * hh);
            return eta.len() / d.len() * ddir;
        },
        D_eta_phase, h));

    return out;
}

}  // namespace stratwave
