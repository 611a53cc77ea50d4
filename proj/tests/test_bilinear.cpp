// PURPOSE: validates the direct eta quadrature against a closed-form Gaussian
// convolution, then smoke-tests the integration-by-parts step, the
// symmetrization identities, and the set-size/boundary bound evaluators on
// small grids.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stratwave/bilinear.hpp"

using namespace stratwave;

namespace {

// shells chosen so S_eta Phi stays away from zero on the support: a strongly
// tilted output fed by two near-horizontal inputs
ShellTriple ibp_shells() {
    ShellTriple sh;
    sh.out = {0, -5, {}};
    sh.left = {0, 0, {}};
    sh.right = {0, 0, {}};
    return sh;
}

std::vector<Vec2> xi_line(const ShellTriple& sh, int count) {
    std::vector<Vec2> pts;
    double r = std::pow(2.0, sh.out.k);
    double s = std::pow(2.0, sh.out.p);
    for (int i = 0; i < count; ++i) {
        double rho = r * (0.8 + 0.4 * i / std::max(1, count - 1));
        pts.push_back({rho * std::sqrt(1.0 - 0.25 * s * s), rho * 0.5 * s});
    }
    return pts;
}

}  // namespace

TEST_CASE("quadrature matches the Gaussian convolution formula") {
    // t = 0, symbol 1:  int exp(-a|xi-eta|^2) exp(-b|eta|^2) d eta
    //                   = pi/(a+b) exp(-(ab/(a+b)) |xi|^2)
    double a = 1.3, b = 0.7;
    FreqFn F = [a](Vec2 z) { return cplx(std::exp(-a * (z.x * z.x + z.y * z.y)), 0.0); };
    FreqFn G = [b](Vec2 z) { return cplx(std::exp(-b * (z.x * z.x + z.y * z.y)), 0.0); };
    std::vector<Vec2> pts = {{0.0, 0.0}, {0.5, 0.2}, {-1.0, 0.7}};
    auto one = [](Vec2, Vec2) { return 1.0; };
    auto q = q_direct(one, PhaseSigns{}, 0.0, F, G, pts, 8.0, 96);
    for (size_t i = 0; i < pts.size(); ++i) {
        double r2 = pts[i].x * pts[i].x + pts[i].y * pts[i].y;
        double expect = M_PI / (a + b) * std::exp(-(a * b / (a + b)) * r2);
        CHECK(q[i].real() == doctest::Approx(expect).epsilon(1e-6));
        CHECK(std::abs(q[i].imag()) < 1e-12);
    }
}

TEST_CASE("quadrature refinement converges on shell-localized symbols") {
    // the shell gate makes the integrand compactly supported and smooth, so
    // the midpoint rule converges fast; the bare dispersion phase is not
    // smooth at eta = 0 and eta = xi, which the gate excises
    ShellTriple sh;
    sh.out = {0, 0, {}};
    sh.left = {0, 0, {}};
    sh.right = {0, 0, {}};
    ProfileFn F = gaussian_ring(cplx(1.0, 0.0), 5.0, 1.0, 3.0, 0.4);
    std::vector<Vec2> pts = {{0.75, 0.75}};
    auto sym = localized_multiplier({MultFamily::M0, +1, +1, +1}, sh);
    double box = eta_box_halfwidth(sh);
    auto coarse = q_direct(sym, PhaseSigns{}, 2.0, F.value, F.value, pts, box, 96);
    auto mid = q_direct(sym, PhaseSigns{}, 2.0, F.value, F.value, pts, box, 192);
    auto fine = q_direct(sym, PhaseSigns{}, 2.0, F.value, F.value, pts, box, 384);
    CHECK(std::abs(mid[0] - fine[0]) < std::abs(coarse[0] - fine[0]));
    CHECK(std::abs(mid[0] - fine[0]) < 1e-9);
}

TEST_CASE("integration by parts residual is quadrature-limited") {
    // rings at unbalanced radii keep the multiplier away from its
    // ad = ae cancellation, and opposite angular centers put the legs on the
    // two tilted branches feeding a near-horizontal output
    ShellTriple sh = ibp_shells();
    ProfileFn F = gaussian_ring(cplx(1.0, 0.3), 10.0, 1.3, 6.0, -1.2);
    ProfileFn G = gaussian_ring(cplx(0.8, -0.2), 10.0, 0.7, 6.0, 1.2);
    std::vector<Vec2> pts = {{0.72, 0.011}, {0.76, 0.012}, {0.8, 0.012}};
    IbpResult r = ibp_step_check({MultFamily::M, +1, +1, +1}, sh, PhaseSigns{+1, +1, +1}, 4.0,
                                 F, G, pts, 96);
    CHECK(r.residual < 5e-3);
    IbpResult r2 = ibp_step_check({MultFamily::M, +1, +1, +1}, sh, PhaseSigns{+1, +1, +1}, 4.0,
                                  F, G, pts, 192);
    CHECK(r2.residual < r.residual);
    CHECK(r2.residual < 1e-4);
    CHECK(r2.fd_richardson < 1e-6);
}

TEST_CASE("symmetrization identities hold at quadrature accuracy") {
    ShellTriple sh;
    sh.out = {0, 0, {}};
    sh.left = {0, 0, {}};
    sh.right = {0, 0, {}};
    ProfileFn F = gaussian_ring(cplx(1.0, 0.0), 5.0, 1.0, 3.0, 0.4);
    ProfileFn Gm = gaussian_ring(cplx(0.6, 0.4), 5.0, 1.0, 3.0, -0.6);
    // xi on the quadrature lattice (spacing 2 * 2.4 / 64 = 0.075) makes the
    // eta -> xi - eta change of variables map the midpoint grid onto itself,
    // so the discrete identity is exact whenever the symbol identity is
    std::vector<Vec2> pts = {{0.75, 0.75}, {0.825, 0.675}, {0.9, 0.6}};
    CHECK(symmetrization_equal_signs(+1, +1, sh, 1.0, F.value, pts, 64) < 1e-8);
    CHECK(symmetrization_equal_signs(-1, -1, sh, 1.0, F.value, pts, 64) < 1e-8);
    CHECK(symmetrization_mixed_signs(+1, sh, 1.0, F.value, Gm.value, pts, 64) < 1e-8);
}

TEST_CASE("set size bound holds with margin") {
    // the area factor reads the q index on every leg
    ShellTriple sh;
    sh.out = {0, 0, 0};
    sh.left = {0, -2, 0};
    sh.right = {0, -2, 0};
    ProfileFn F = gaussian_ring(cplx(1.0, 0.0), 5.0, 1.0, 3.0, 0.1);
    SetSizeResult r = setsize_check({MultFamily::M0, +1, +1, +1}, sh, PhaseSigns{+1, +1, +1},
                                    0.5, F.value, F.value, 12, 48);
    CHECK(r.lhs > 0.0);
    CHECK(r.set_size > 0.0);
    CHECK(r.ratio < 4.0);
}

TEST_CASE("nonresonant boundary term obeys the lambda bound") {
    ShellTriple sh;
    sh.out = {0, 0, 0};
    sh.left = {0, -2, 0};
    sh.right = {0, -2, 0};
    ProfileFn F = gaussian_ring(cplx(1.0, 0.0), 5.0, 1.0, 3.0, 0.1);
    BoundaryResult r = nonresonant_boundary_eval({MultFamily::M, +1, +1, +1}, sh,
                                                 PhaseSigns{+1, +1, +1}, 0.5, 0.25, F.value,
                                                 F.value, 12, 48);
    CHECK(r.lhs > 0.0);
    CHECK(r.lhs <= r.bound * 4.0);
}
