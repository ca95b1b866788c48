#include "wolf/coupling.hpp"
#include "wolf/params.hpp"

#include <doctest.h>

#include <vector>

using namespace wolf;

TEST_SUITE("coupling") {

TEST_CASE("spring forces follow the displacement differences") {
    BridgeParams bridge;
    LumpedState lumped(1);
    lumped.z_br_curr = 2.0e-4;

    SuppressorParams su;
    su.mass = 8.5e-3;
    su.frequency = 246.9;
    su.damping = 2.1;
    std::vector<SuppressorParams> sups{su};
    lumped.z_su_curr[0] = -1.0e-4;
    lumped.z_su_vel[0] = 0.05;

    CouplingInputs in;
    in.u_at_bridge = 5.0e-5;
    in.w_foot_left = 1.0e-5;
    in.w_foot_right = -2.0e-5;
    const std::vector<double> w_su{3.0e-5};
    const std::vector<double> wv_su{-0.01};
    in.w_at_su = w_su;
    in.w_vel_at_su = wv_su;

    CouplingForces f;
    compute_forces(in, lumped, bridge, sups, f);

    CHECK(f.string_bridge ==
          doctest::Approx(bridge.k_string * (2.0e-4 - 5.0e-5)).epsilon(1e-15));
    CHECK(f.foot_left ==
          doctest::Approx(bridge.k_left * (2.0e-4 - 1.0e-5)).epsilon(1e-15));
    CHECK(f.foot_right ==
          doctest::Approx(bridge.k_right * (2.0e-4 + 2.0e-5)).epsilon(1e-15));
    CHECK(f.suppressor.size() == 1);
    const double expect = su.stiffness() * (-1.0e-4 - 3.0e-5) +
                          su.damping * (0.05 + 0.01);
    CHECK(f.suppressor[0] == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("lumped mass under constant force accelerates quadratically") {
    const double m = 0.02;
    const double dt = 1.0e-4;
    const double f = 3.0;

    double zp = 0.0, z = 0.0;
    for (int n = 1; n <= 50; ++n) {
        const double zn = step_lumped_mass(zp, z, f, m, dt);
        zp = z;
        z = zn;
        // Leapfrog from rest: z(n) = (f/2m) dt^2 n (n+1) exactly.
        CHECK(z == doctest::Approx(0.5 * f / m * dt * dt * n * (n + 1.0))
                       .epsilon(1e-9));
    }
}

TEST_CASE("bridge reacts to the sum of its three springs") {
    BridgeParams bridge;
    LumpedState lumped(0);
    lumped.z_br_prev = 1.0e-5;
    lumped.z_br_curr = 2.0e-5;

    CouplingForces f;
    f.string_bridge = 0.3;
    f.foot_left = -0.1;
    f.foot_right = 0.05;

    step_lumped(lumped, f, bridge, {}, 1.0e-5);
    const double net = -(0.3 - 0.1 + 0.05);
    const double expect =
        2.0 * 2.0e-5 - 1.0e-5 + 1.0e-10 * net / bridge.mass;
    CHECK(lumped.z_br_curr == doctest::Approx(expect).epsilon(1e-14));
    CHECK(lumped.z_br_prev == 2.0e-5);
}

TEST_CASE("suppressor velocity lags one step behind the update") {
    BridgeParams bridge;
    SuppressorParams su;
    std::vector<SuppressorParams> sups{su};
    const double dt = 1.0e-5;

    LumpedState lumped(1);
    lumped.z_su_prev[0] = 1.0e-6;
    lumped.z_su_curr[0] = 3.0e-6;

    CouplingForces f;
    f.suppressor = {0.02};

    const double z_before_prev = lumped.z_su_prev[0];
    step_lumped(lumped, f, bridge, sups, dt);

    // After the step, vel = (z^{n+1} - z^{n-1}) / 2 dt: the central
    // difference centered at the step we just left.
    const double expect_next =
        2.0 * 3.0e-6 - 1.0e-6 + dt * dt * (-0.02) / su.mass;
    CHECK(lumped.z_su_curr[0] == doctest::Approx(expect_next).epsilon(1e-14));
    CHECK(lumped.z_su_vel[0] ==
          doctest::Approx((expect_next - z_before_prev) / (2.0 * dt))
              .epsilon(1e-12));
    CHECK(lumped.z_su_prev[0] == 3.0e-6);
}

TEST_CASE("forces buffer is reused without stale entries") {
    BridgeParams bridge;
    LumpedState two(2);
    LumpedState zero(0);

    CouplingInputs in;
    const std::vector<double> w2{0.0, 0.0}, v2{0.0, 0.0};
    in.w_at_su = w2;
    in.w_vel_at_su = v2;
    std::vector<SuppressorParams> sups{SuppressorParams{}, SuppressorParams{}};

    CouplingForces f;
    compute_forces(in, two, bridge, sups, f);
    CHECK(f.suppressor.size() == 2);

    in.w_at_su = {};
    in.w_vel_at_su = {};
    compute_forces(in, zero, bridge, {}, f);
    CHECK(f.suppressor.empty());
}

} // TEST_SUITE
