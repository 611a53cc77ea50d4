// Direct quadrature for the oscillatory bilinear forms
//   Q_m(F, G)(xi) = int exp(i t Phi(xi, eta)) m(xi, eta) F(xi - eta) G(eta) d eta
// with closed-form frequency profiles, plus the checks built on it: the
// one-step integration by parts in S_eta, the symmetrization identities, the
// set-size bound, and the nonresonant normal-form boundary evaluation.

#pragma once

#include <functional>

#include "stratwave/scanners.hpp"
#include "stratwave/symbols.hpp"

namespace stratwave {

using FreqFn = std::function<cplx(Vec2)>;

// a frequency profile with its scaling and rotation derivatives
struct ProfileFn {
    FreqFn value;
    FreqFn S;  // zeta . grad
    FreqFn W;  // zeta_perp . grad
};

// amp * exp(-a (|zeta| - r0)^2) * exp(-b (1 - cos(tau - tau0)))
ProfileFn gaussian_ring(cplx amp, double a, double r0, double b, double tau0);

struct PhaseSigns {
    int outer = +1, mu = +1, nu = +1;
};

constexpr int kMaxQuadPoints = 512;  // per-axis guard for the eta quadrature

// half-width of the eta box: the right-leg shell support dilated by 1.5
double eta_box_halfwidth(const ShellTriple& sh);

std::vector<cplx> q_direct(const std::function<double(Vec2, Vec2)>& symbol, PhaseSigns signs,
                           double t, const FreqFn& F, const FreqFn& G,
                           const std::vector<Vec2>& xi_pts, double box_halfwidth, int points);

// multiplier * chi as a plain symbol
std::function<double(Vec2, Vec2)> localized_multiplier(const MultId& id, const ShellTriple& sh);

// relative residual of the exact identity
//   Q_{m chi}(F, G) = (i/t) [ Q_{2A + S_eta A}(F, G)
//                             + Q_{A c1}(SF, G) + Q_{A c2}(WF, G) + Q_A(F, SG) ]
// with A = m chi / S_eta Phi, c1 = -eta.(xi-eta)/|xi-eta|^2,
// c2 = -eta.(xi-eta)_perp/|xi-eta|^2; S_eta A is a central difference with
// relative step h (Richardson-checked internally against h/2)
struct IbpResult {
    double residual;          // max_xi |lhs - rhs| / max_xi |lhs|
    double fd_richardson;     // shift of the residual when h is halved
};
IbpResult ibp_step_check(const MultId& id, const ShellTriple& sh, PhaseSigns signs, double t,
                         const ProfileFn& F, const ProfileFn& G, const std::vector<Vec2>& xi_pts,
                         int points, double h = 1e-5);

// max relative deviation of the symmetrization identities
//   Q_{n^{mu mu}}(F, F) + (outer mu / 2) Q_{m0}(F, F) = Q_{m^{mu mu}}(F, F)
//   Q_{n^{+-}}(F+, F-) + Q_{n^{-+}}(F-, F+) = Q_{m^{+-}}(F+, F-)
double symmetrization_equal_signs(int outer, int mu, const ShellTriple& sh, double t,
                                  const FreqFn& F, const std::vector<Vec2>& xi_pts, int points);
double symmetrization_mixed_signs(int outer, const ShellTriple& sh, double t, const FreqFn& Fp,
                                  const FreqFn& Fm, const std::vector<Vec2>& xi_pts, int points);

// ||Q_{m chi}(F, G)||_2 over a xi grid against |S| ||m chi||_inf ||F_loc|| ||G_loc||
struct SetSizeResult {
    double lhs;      // quadrature L2 of the output
    double set_size; // the min-min area factor |S|
    double m_inf;    // sup |m chi| over the sampled support
    double f_l2, g_l2;
    double ratio;    // lhs / (set_size * m_inf * f_l2 * g_l2)
};
SetSizeResult setsize_check(const MultId& id, const ShellTriple& sh, PhaseSigns signs, double t,
                            const FreqFn& F, const FreqFn& G, int xi_points, int eta_points);

// L2 over a xi grid of Q with symbol m chi (1 - psi(Phi/lambda))/Phi, with the
// reference bound 2^(k + p_max) lambda^{-1} |S| ||F_loc|| ||G_loc||
struct BoundaryResult {
    double lhs;
    double bound;
};
BoundaryResult nonresonant_boundary_eval(const MultId& id, const ShellTriple& sh,
                                         PhaseSigns signs, double t, double lambda,
                                         const FreqFn& F, const FreqFn& G, int xi_points,
                                         int eta_points);

void write_q_csv(const std::string& path, const std::vector<Vec2>& xi_pts,
                 const std::vector<cplx>& values);

}  // namespace stratwave
