// PURPOSE: closed-form oracles for the phases and multipliers, the
// finite-difference identity suite, pointwise symmetrization identities, and
// scanner plumbing (determinism, empty regions, quick bound scans).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stratwave/scanners.hpp"
#include "stratwave/symbols.hpp"

using namespace stratwave;

TEST_CASE("sigma and phase oracle values") {
    Vec2 xi{2.0, 1.0}, eta{1.0, 0.0};
    CHECK(sigma_sym(xi, eta) == doctest::Approx(1.0));
    // Phi_+^{++} = Lambda(xi) - Lambda(xi-eta) - Lambda(eta)
    double expect = 2.0 / std::sqrt(5.0) - 1.0 / std::sqrt(2.0) - 1.0;
    CHECK(phase(+1, +1, +1, xi, eta) == doctest::Approx(expect).epsilon(1e-15));
    CHECK(phase(-1, +1, -1, xi, eta) ==
          doctest::Approx(-2.0 / std::sqrt(5.0) - 1.0 / std::sqrt(2.0) + 1.0).epsilon(1e-15));
}

TEST_CASE("multiplier oracle values at a rational point") {
    Vec2 xi{2.0, 1.0}, eta{1.0, 0.0};
    double s2 = std::sqrt(2.0);
    // m0 = (1/2) sigma/(|xi-eta||eta|) (|xi-eta| - |eta|) = (sqrt2 - 1)/(2 sqrt2)
    CHECK(eval_multiplier({MultFamily::M0, +1, +1, +1}, xi, eta) ==
          doctest::Approx((s2 - 1.0) / (2.0 * s2)).epsilon(1e-15));
    // m_+^{++}: -(1/8) C (|eta|^2-|xi-eta|^2)/|eta| - (1/8) D (|xi-eta|-|eta|)
    // with C = -1/sqrt(10), D = -1/sqrt(2)
    double expect = -0.125 * (-1.0 / std::sqrt(10.0)) * (1.0 - 2.0) -
                    0.125 * (-1.0 / s2) * (s2 - 1.0);
    CHECK(eval_multiplier({MultFamily::M, +1, +1, +1}, xi, eta) ==
          doctest::Approx(expect).epsilon(1e-15));
    // degenerate denominators return zero
    CHECK(eval_multiplier({MultFamily::M0, +1, +1, +1}, xi, xi) == 0.0);
    CHECK(eval_multiplier({MultFamily::M, +1, +1, +1}, Vec2{0.0, 0.0}, eta) == 0.0);
}

TEST_CASE("vector field action oracle on the phase") {
    Vec2 xi{2.0, 1.0}, eta{1.0, 0.0};
    // S_eta Phi_+^{++} = (xi2-eta2)/|xi-eta|^3 sigma = 1/(2 sqrt2)
    CHECK(S_eta_phase(+1, +1, +1, xi, eta) ==
          doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
    // S_(xi-eta) Phi = eta2/|eta|^3 sigma = 0 here
    CHECK(S_xi_minus_eta_phase(+1, +1, +1, xi, eta) == doctest::Approx(0.0));
}

TEST_CASE("multipliers vanish on parallel interactions") {
    for (const MultId& id : primary_multiplier_kinds())
        for (double c : {0.3, 1.0, 2.5}) {
            Vec2 eta{0.8, 0.45};
            Vec2 xi = eta * (1.0 + c);
            CHECK(std::abs(eval_multiplier(id, xi, eta)) < 1e-14);
        }
}

TEST_CASE("finite difference identity suite") {
    for (const FdCheck& c : fd_crosscheck_suite(1e-4)) {
        INFO(c.name);
        CHECK(c.err <= 1e-6);
        if (c.err > 1e-11) CHECK(c.order == doctest::Approx(2.0).epsilon(0.15));
    }
}

TEST_CASE("pointwise symmetrization identities") {
    std::vector<std::pair<Vec2, Vec2>> pts = {
        {{2.0, 1.0}, {1.0, 0.3}}, {{0.7, -1.3}, {1.1, 0.9}}, {{-1.2, 0.8}, {0.4, -1.6}}};
    for (auto [xi, eta] : pts) {
        Vec2 d = xi - eta;
        double m0 = eval_multiplier({MultFamily::M0, +1, +1, +1}, xi, eta);
        for (int outer : {+1, -1})
            for (int mu : {+1, -1}) {
                // sym(n^{mu mu}) + (outer mu / 2) m0 == sym(m^{mu mu})
                MultId n{MultFamily::N, outer, mu, mu};
                MultId m{MultFamily::M, outer, mu, mu};
                double lhs = 0.5 * (eval_multiplier(n, xi, eta) + eval_multiplier(n, xi, d)) +
                             0.5 * outer * mu * m0;
                double rhs = 0.5 * (eval_multiplier(m, xi, eta) + eval_multiplier(m, xi, d));
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
            }
        for (int outer : {+1, -1}) {
            // n^{+-}(xi, eta) + n^{-+}(xi, xi-eta) == m^{+-}(xi, eta)
            double lhs = eval_multiplier({MultFamily::N, outer, +1, -1}, xi, eta) +
                         eval_multiplier({MultFamily::N, outer, -1, +1}, xi, d);
            double rhs = eval_multiplier({MultFamily::MPM, outer, +1, -1}, xi, eta);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("shell sampling determinism and empty regions") {
    ShellTriple sh;
    sh.out = {0, 0, {}};
    sh.left = {0, 0, {}};
    sh.right = {0, 0, {}};
    ScanConfig cfg;
    cfg.samples = 5000;
    MultId id{MultFamily::M0, +1, +1, +1};
    ScanRecord a = scan_null_structure(sh, id, cfg);
    ScanRecord b = scan_null_structure(sh, id, cfg);
    CHECK(a.value == b.value);
    CHECK(a.samples == b.samples);
    CHECK(a.argmax_xi.x == b.argmax_xi.x);
    CHECK(a.value > 0.0);

    ShellTriple impossible = sh;
    impossible.out.k = 6;  // |xi| ~ 64 cannot come from two order-one legs
    CHECK_THROWS_AS(scan_null_structure(impossible, id, cfg), EmptyRegionError);
}

TEST_CASE("null structure quick scan stays bounded") {
    ScanConfig cfg;
    cfg.samples = 20000;
    ShellTriple sh;
    sh.out = {0, -6, {}};
    sh.left = {0, 0, {}};
    sh.right = {0, 0, {}};
    for (const MultId& id : primary_multiplier_kinds()) {
        ScanRecord r = scan_null_structure(sh, id, cfg);
        INFO(id.name());
        CHECK(r.value < 8.0);
    }
}

TEST_CASE("case organisation quick scan has no violations") {
    ScanConfig cfg;
    cfg.samples = 5000;
    CaseOrgReport rep = verify_case_organisation(cfg);
    CHECK(rep.case_counts[0] >= cfg.samples);
    CHECK(rep.case_counts[1] >= cfg.samples);
    CHECK(rep.case_counts[2] >= cfg.samples);
    CHECK(rep.violations == 0);
}

TEST_CASE("normal form split reassembles the multiplier") {
    MultId id{MultFamily::M, +1, +1, +1};
    Vec2 xi{2.0, 1.0}, eta{1.0, 0.3};
    double lam = 0.05;
    double total = resonant_part(id, +1, +1, +1, lam, xi, eta) +
                   nonresonant_part(id, +1, +1, +1, lam, xi, eta);
    CHECK(total == doctest::Approx(eval_multiplier(id, xi, eta)).epsilon(1e-15));
}
