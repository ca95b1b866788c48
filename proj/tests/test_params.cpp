#include "wolf/errors.hpp"
#include "wolf/params.hpp"

#include <doctest.h>

#include <cmath>

using namespace wolf;

namespace {
constexpr double kDt = 5.7e-6;
}

TEST_SUITE("params") {

TEST_CASE("string coefficients for the default parameter set") {
    StringParams p; // defaults: T=120, rho=7800, A=1.8e-6, E=2e11, I=9.8e-14
    p.length = 0.5;
    const StringCoeffs c = derive_string_coeffs(p, kDt);

    // Hand-computed from the material constants.
    CHECK(c.wave_speed == doctest::Approx(92.45003).epsilon(1e-6));
    CHECK(c.stiffness_coeff == doctest::Approx(1.1815293).epsilon(1e-6));
    CHECK(c.intervals == 135);
    CHECK(c.dx == doctest::Approx(0.5 / 135).epsilon(1e-12));
    CHECK(c.dt == kDt);
    CHECK(c.tau == 0.0);
    CHECK(c.force_scale ==
          doctest::Approx(kDt * kDt / (7800.0 * 1.8e-6 * c.dx)).epsilon(1e-12));

    // Stability: lambda + 4 mu <= 1 with some slack from the floor().
    const double s = c.lambda + 4.0 * c.mu;
    CHECK(s <= 1.0);
    CHECK(s > 0.9);
}

TEST_CASE("string grid bound solves the stability equality") {
    StringParams p;
    const double rho_a = p.density * p.area;
    const double c = std::sqrt(p.tension / rho_a);
    const double r = std::sqrt(p.youngs_modulus * p.moment_inertia / rho_a);
    const double dx = string_dx_bound(c, r, kDt);

    const double lambda = std::pow(c * kDt / dx, 2);
    const double mu = std::pow(r * kDt / (dx * dx), 2);
    CHECK(lambda + 4.0 * mu == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("plate coefficients for the default parameter set") {
    PlateParams p; // defaults: 0.5 m side, T=7.5e4, rho=470, E=1e10, h=4e-3
    const PlateCoeffs c = derive_plate_coeffs(p, kDt);

    CHECK(c.bending_rigidity == doctest::Approx(56.888889).epsilon(1e-6));
    CHECK(c.wave_speed == doctest::Approx(199.73387).epsilon(1e-6));
    CHECK(c.stiffness_coeff == doctest::Approx(5.5009133).epsilon(1e-6));

    // 44 intervals -> 45 nodes per side.
    CHECK(c.intervals == 44);
    CHECK(c.nodes() == 45);
    CHECK(c.dx == doctest::Approx(0.5 / 44).epsilon(1e-12));

    // Von Neumann bound of the combined scheme.
    const double s = 2.0 * c.lambda + 16.0 * c.mu;
    CHECK(s <= 1.0);
    CHECK(s > 0.9);
}

TEST_CASE("plate grid bound degenerates to the bending limit") {
    // Membrane-free limit: the bound is set purely by the fourth-order term.
    const double r = 5.5;
    CHECK(plate_dx_bound(0.0, r, kDt) ==
          doctest::Approx(2.0 * std::sqrt(r * kDt)).epsilon(1e-15));
    // Bending-free limit: pure wave CFL with the sqrt(2) of two dimensions.
    const double c = 200.0;
    CHECK(plate_dx_bound(c, 0.0, kDt) ==
          doctest::Approx(std::sqrt(2.0) * c * kDt).epsilon(1e-15));
}

TEST_CASE("suppressor stiffness") {
    CHECK(suppressor_stiffness(8.5e-3, 246.9) ==
          doctest::Approx(20456.0).epsilon(1e-4));
    SuppressorParams su;
    su.mass = 8.5e-3;
    su.frequency = 246.9;
    CHECK(su.stiffness() == suppressor_stiffness(8.5e-3, 246.9));
}

TEST_CASE("fraction_to_index nearest-node mapping") {
    CHECK(fraction_to_index(0.5, 101) == 50);
    CHECK(fraction_to_index(0.25, 9) == 2);
    CHECK(fraction_to_index(0.70, 45) == 31); // 0.7 * 44 = 30.8

    CHECK_THROWS_AS(fraction_to_index(0.001, 101), ValidationError);
    CHECK_THROWS_AS(fraction_to_index(0.999, 101), ValidationError);
    CHECK_THROWS_AS(fraction_to_index(-0.1, 101), ValidationError);
    CHECK_THROWS_AS(fraction_to_index(1.1, 101), ValidationError);
    CHECK_THROWS_AS(fraction_to_index(0.5, 2), ValidationError);
}

TEST_CASE("parameter validation") {
    StringParams s;
    s.tension = -1.0;
    CHECK_THROWS_AS(s.validate(), ValidationError);

    PlateParams p;
    p.poisson = 0.7;
    CHECK_THROWS_AS(p.validate(), ValidationError);

    SuppressorParams su;
    su.mass = 0.0;
    CHECK_THROWS_AS(su.validate(), ValidationError);
    su = SuppressorParams{};
    su.position = {1.5, 0.5};
    CHECK_THROWS_AS(su.validate(), ValidationError);

    SimGridConfig g;
    g.dt = 0.0;
    CHECK_THROWS_AS(g.validate(), ValidationError);

    IndicatorParams ind;
    CHECK_THROWS_AS(ind.validate(0.5), ValidationError); // t_star = 0.9 >= T
    ind.t_star = 0.4;
    CHECK_NOTHROW(ind.validate(0.5));

    CHECK_THROWS_AS(derive_string_coeffs(StringParams{}, -1.0), ValidationError);

    // A huge dt makes the grid too coarse to carry the stencil.
    StringParams tiny;
    tiny.length = 0.01;
    CHECK_THROWS_AS(derive_string_coeffs(tiny, 1.0e-3), ValidationError);
}

} // TEST_SUITE
