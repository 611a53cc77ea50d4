// PURPOSE: spectral core invariants: transform round trips, Plancherel,
// semigroup group law and unitarity, exactness of the scaling/rotation vector
// fields against closed forms, dealias support, Hermitian symmetry.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stratwave/grid.hpp"
#include "stratwave/spectral_ops.hpp"

using namespace stratwave;

namespace {

Field radial_gaussian(const GridSpec& g) {
    Field f(g);
    for (int a1 = 0; a1 < g.n; ++a1) {
        double x = g.coord(a1);
        for (int a2 = 0; a2 < g.n; ++a2) {
            double y = g.coord(a2);
            f.at(a1, a2) = std::exp(-(x * x + y * y));
        }
    }
    return f;
}

}  // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS(GridSpec(100, 40.0));
    CHECK_THROWS(GridSpec(4, 40.0));
    CHECK_THROWS(GridSpec(64, -1.0));
    GridSpec g(64, 40.0);
    CHECK(g.mode(0) == 0);
    CHECK(g.mode(63) == -1);
    CHECK(g.store(-1) == 63);
    CHECK(g.freq(1) == doctest::Approx(2.0 * GridSpec::pi() / 40.0));
}

TEST_CASE("fft round trip and Plancherel") {
    GridSpec g(128, 40.0);
    Field f = radial_gaussian(g);
    Field spec = fft_forward(f);
    Field back = fft_inverse(spec);
    double err = 0.0;
    for (size_t i = 0; i < f.coeff.size(); ++i)
        err = std::max(err, std::abs(f.coeff[i] - back.coeff[i]));
    CHECK(err < 1e-13);
    CHECK(l2_norm_spectral(spec) ==
          doctest::Approx(l2_norm_physical(f)).epsilon(1e-12));
    // closed form: || exp(-|x|^2) ||_2 = sqrt(pi/2)
    CHECK(l2_norm_physical(f) ==
          doctest::Approx(std::sqrt(GridSpec::pi() / 2.0)).epsilon(1e-12));
    CHECK(hermitian_symmetry_error(spec) < 1e-15);
}

TEST_CASE("semigroup group law and unitarity") {
    GridSpec g(64, 40.0);
    Field spec = fft_forward(radial_gaussian(g));
    Field a = apply_semigroup(apply_semigroup(spec, 1.3, +1), 2.4, +1);
    Field b = apply_semigroup(spec, 3.7, +1);
    double err = 0.0;
    for (size_t i = 0; i < a.coeff.size(); ++i)
        err = std::max(err, std::abs(a.coeff[i] - b.coeff[i]));
    CHECK(err < 1e-12);
    CHECK(l2_norm_spectral(b) == doctest::Approx(l2_norm_spectral(spec)).epsilon(1e-13));
    Field c = apply_semigroup(b, 3.7, -1);
    err = 0.0;
    for (size_t i = 0; i < c.coeff.size(); ++i)
        err = std::max(err, std::abs(c.coeff[i] - spec.coeff[i]));
    CHECK(err < 1e-12);
}

TEST_CASE("riesz symbol values") {
    CHECK(lambda_symbol(0.0, 0.0) == 0.0);
    CHECK(lambda_symbol(3.0, 4.0) == doctest::Approx(0.6));
    CHECK(lambda_symbol(-2.0, 0.0) == doctest::Approx(-1.0));
}

TEST_CASE("scaling field on a radial gaussian") {
    // S exp(-|x|^2) = -2 |x|^2 exp(-|x|^2)
    GridSpec g(256, 40.0);
    VfResult r = apply_scaling_vf(radial_gaussian(g));
    CHECK(!r.boundary_warning);
    double err = 0.0;
    for (int a1 = 0; a1 < g.n; ++a1) {
        double x = g.coord(a1);
        for (int a2 = 0; a2 < g.n; ++a2) {
            double y = g.coord(a2);
            double r2 = x * x + y * y;
            err = std::max(err, std::abs(r.field.at(a1, a2) - cplx(-2.0 * r2 * std::exp(-r2))));
        }
    }
    CHECK(err < 1e-8);
}

TEST_CASE("rotation field kills radial functions and rotates plane waves") {
    GridSpec g(256, 40.0);
    VfResult r = apply_rotation_vf(radial_gaussian(g));
    double err = 0.0;
    for (const auto& c : r.field.coeff) err = std::max(err, std::abs(c));
    CHECK(err < 1e-8);

    // W (x1 exp(-|x|^2)) = -x2 exp(-|x|^2)
    Field f(g);
    for (int a1 = 0; a1 < g.n; ++a1)
        for (int a2 = 0; a2 < g.n; ++a2) {
            double x = g.coord(a1), y = g.coord(a2);
            f.at(a1, a2) = x * std::exp(-(x * x + y * y));
        }
    VfResult w = apply_rotation_vf(f);
    err = 0.0;
    for (int a1 = 0; a1 < g.n; ++a1)
        for (int a2 = 0; a2 < g.n; ++a2) {
            double x = g.coord(a1), y = g.coord(a2);
            err = std::max(err,
                           std::abs(w.field.at(a1, a2) - cplx(-y * std::exp(-(x * x + y * y)))));
        }
    CHECK(err < 1e-8);
}

TEST_CASE("boundary mass warning latches for off-center fields") {
    GridSpec g(64, 40.0);
    Field f(g);
    for (int a1 = 0; a1 < g.n; ++a1)
        for (int a2 = 0; a2 < g.n; ++a2) {
            double x = g.coord(a1) - 15.0, y = g.coord(a2);
            f.at(a1, a2) = std::exp(-(x * x + y * y));
        }
    CHECK(apply_scaling_vf(f).boundary_warning);
}

TEST_CASE("dealias zeroes the outer third") {
    GridSpec g(64, 40.0);
    Field spec(g);
    for (auto& c : spec.coeff) c = 1.0;
    Field cut = dealias(spec);
    CHECK(cut.at(g.store(21), 0) == cplx(1.0));
    CHECK(cut.at(g.store(22), 0) == cplx(0.0));
    CHECK(cut.at(0, g.store(-22)) == cplx(0.0));
}

TEST_CASE("derivative symbol is exact on a band-limited wave") {
    GridSpec g(64, 40.0);
    Field spec(g);
    spec.at(g.store(3), g.store(-5)) = 1.0;
    Field d = fft_inverse(apply_ddx(spec, 0));
    Field p = fft_inverse(spec);
    double k1 = g.dxi() * 3.0;
    double err = 0.0;
    for (size_t i = 0; i < d.coeff.size(); ++i)
        err = std::max(err, std::abs(d.coeff[i] - cplx(0.0, k1) * p.coeff[i]));
    CHECK(err < 1e-12);
}
