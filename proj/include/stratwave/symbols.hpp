// Closed forms for the interaction phases, the null-form multipliers, and the
// actions of the scaling/rotation vector fields on them.
//
// Throughout, sigma(xi, eta) = (xi - eta) . eta_perp with v_perp = (-v2, v1),
// so sigma = xi2 eta1 - xi1 eta2.  All multipliers vanish like sigma along
// parallel interactions.  Any evaluation whose formula divides by |xi|,
// |xi - eta| or |eta| returns 0 when that length is below 1e-14.

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace stratwave {

struct Vec2 {
    double x = 0.0, y = 0.0;
    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double c) const { return {c * x, c * y}; }
    Vec2 perp() const { return {-y, x}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double len() const;
};

constexpr double kDegenerateTol = 1e-14;

double lambda_of(Vec2 v);              // v.x/|v|, 0 at the origin
double sigma_sym(Vec2 xi, Vec2 eta);   // (xi-eta) . eta_perp

// Phi(xi, eta) = outer*Lambda(xi) - mu*Lambda(xi-eta) - nu*Lambda(eta),
// signs in {-1, +1}
double phase(int outer, int mu, int nu, Vec2 xi, Vec2 eta);

// The seven multiplier kinds: the scalar-transport null form M0, the
// symmetrized equal-sign forms M (mu = nu), the mixed-sign form MPM, and the
// unsymmetrized forms N.
enum class MultFamily { M0, M, MPM, N };

struct MultId {
    MultFamily family = MultFamily::M0;
    int outer = +1;          // output-mode sign, unused for M0
    int mu = +1, nu = +1;    // input-mode signs; M uses mu==nu, MPM fixes (+,-)

    std::string name() const;
};

double eval_multiplier(const MultId& id, Vec2 xi, Vec2 eta);

// all seven kinds (M0, four M, two MPM) in a fixed order
std::vector<MultId> primary_multiplier_kinds();

// analytic vector field actions on the phase
double S_eta_phase(int outer, int mu, int nu, Vec2 xi, Vec2 eta);
double S_xi_minus_eta_phase(int outer, int mu, int nu, Vec2 xi, Vec2 eta);
double W_xi_phase(int outer, int mu, int nu, Vec2 xi, Vec2 eta);
double D_eta_phase(int outer, int mu, int nu, Vec2 xi, Vec2 eta);

// finite-difference directional derivatives of a symbol (central, step h)
using Symbol2 = std::function<double(Vec2, Vec2)>;
double fd_S_eta(const Symbol2& f, Vec2 xi, Vec2 eta, double h);
double fd_W_eta(const Symbol2& f, Vec2 xi, Vec2 eta, double h);
double fd_S_xi(const Symbol2& f, Vec2 xi, Vec2 eta, double h);
double fd_W_xi(const Symbol2& f, Vec2 xi, Vec2 eta, double h);
double fd_S_xi_minus_eta(const Symbol2& f, Vec2 xi, Vec2 eta, double h);
double fd_W_xi_minus_eta(const Symbol2& f, Vec2 xi, Vec2 eta, double h);
double fd_D_eta(const Symbol2& f, Vec2 xi, Vec2 eta, double h);

// catalog of identities checked analytic-vs-finite-difference; `order` is the
// observed convergence rate under step halving
struct FdCheck {
    std::string name;
    double err;    // relative error at the base step
    double order;
};
std::vector<FdCheck> fd_crosscheck_suite(double h = 1e-4);

}  // namespace stratwave
