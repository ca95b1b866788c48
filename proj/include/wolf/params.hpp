#pragma once

#include <cstddef>

namespace wolf {

// Grid arrays carry two ghost layers on every side so the five-point
// (string) and thirteen-point (plate) stencils can be applied uniformly
// at the physical boundary nodes.
inline constexpr int kGhostLayers = 2;

// Displacement magnitude above which a run is treated as blown up.
inline constexpr double kMaxDisplacement = 1.0e3;

// A position on the plate given as fractions of the side length.
struct Position {
    double x = 0.0;
    double y = 0.0;
};

struct StringParams {
    double length = 0.5;            // speaking length [m]
    double tension = 120.0;         // [N]
    double density = 7800.0;        // [kg/m^3]
    double area = 1.8e-6;           // cross section [m^2]
    double youngs_modulus = 2.0e11; // [Pa]
    double moment_inertia = 9.8e-14;// area moment [m^4]
    double damping = 0.0;           // velocity damping beta [1/s]

    void validate() const;
};

struct PlateParams {
    double side = 0.5;              // square side [m]
    double tension = 7.5e4;         // membrane tension [N/m]
    double density = 470.0;         // [kg/m^3]
    double youngs_modulus = 1.0e10; // [Pa]
    double thickness = 4.0e-3;      // [m]
    double poisson = 0.25;
    double damping = 0.0;           // velocity damping beta [1/s]

    void validate() const;
};

struct BridgeParams {
    double mass = 0.02;             // [kg]
    double k_string = 490.0;        // string-to-bridge spring [N/m]
    double k_left = 7.0e4;          // left foot spring [N/m]
    double k_right = 3.0e4;         // right foot spring [N/m]
    double string_attach = 0.70;    // fraction of string length
    Position foot_left{0.42, 0.48};
    Position foot_right{0.42, 0.52};

    void validate() const;
};

struct SuppressorParams {
    double mass = 8.5e-3;           // [kg]
    double frequency = 246.9;       // tuning frequency [Hz]
    double damping = 2.1;           // dashpot zeta [N s/m]
    Position position{0.5, 0.5};    // attachment point on the plate

    // Spring constant m (2 pi f)^2 of the tuned oscillator.
    double stiffness() const;

    void validate() const;
};

struct SimGridConfig {
    double dt = 5.7e-6;             // time step [s]
    double total_time = 1.0;        // simulated duration [s]
    double exc_point = 0.50;        // excitation point, fraction of string
    Position rec_point{0.42, 0.18}; // plate recording point

    long steps() const;

    void validate() const;
};

struct IndicatorParams {
    double theta = 0.01;            // envelope smoothing window [s]
    double f_lo = 2.0;              // beating band lower edge [Hz]
    double f_hi = 13.0;             // beating band upper edge [Hz]
    double f_max = 100.0;           // total-energy band edge [Hz]
    double t_star = 0.9;            // tail window start [s]
    double log_floor = 1.0e-12;     // spectrum magnitude floor

    // total_time is needed to check t_star falls inside the run.
    void validate(double total_time) const;
};

// Scheme coefficients for one string at a fixed time step.
struct StringCoeffs {
    double wave_speed = 0.0;        // sqrt(T / rho A)
    double stiffness_coeff = 0.0;   // sqrt(E I / rho A)
    double dx = 0.0;
    int intervals = 0;              // grid intervals M; nodes = M + 1
    double lambda = 0.0;            // (c dt / dx)^2
    double mu = 0.0;                // (r dt / dx^2)^2
    double tau = 0.0;               // beta dt / 2
    double force_scale = 0.0;       // dt^2 / (rho A dx)
    double dt = 0.0;

    int nodes() const { return intervals + 1; }
};

// Scheme coefficients for the plate at a fixed time step.
struct PlateCoeffs {
    double wave_speed = 0.0;        // sqrt(T / rho h)
    double stiffness_coeff = 0.0;   // sqrt(D / rho h)
    double bending_rigidity = 0.0;  // D = E h^3 / 12 (1 - nu^2)
    double dx = 0.0;
    int intervals = 0;              // intervals per side; nodes = M + 1
    double lambda = 0.0;
    double mu = 0.0;
    double tau = 0.0;
    double force_scale = 0.0;       // dt^2 / (rho h dx^2)
    double dt = 0.0;

    int nodes() const { return intervals + 1; }
};

// Smallest stable grid spacing of the damped stiff-string scheme:
// the positive root of lambda + 4 mu = 1.
double string_dx_bound(double wave_speed, double stiffness_coeff, double dt);

// Smallest stable grid spacing of the plate scheme. Each term is the
// binding constraint in the pure-membrane / pure-bending limit.
double plate_dx_bound(double wave_speed, double stiffness_coeff, double dt);

StringCoeffs derive_string_coeffs(const StringParams& p, double dt);
PlateCoeffs derive_plate_coeffs(const PlateParams& p, double dt);

// Spring constant of a tuned mass: m (2 pi f)^2.
double suppressor_stiffness(double mass, double frequency);

// Nearest grid node to `fraction` of the span, as a physical node index
// in [1, node_count - 2]. Boundary hits are rejected: every coupling and
// readout point must be a moving node.
int fraction_to_index(double fraction, int node_count);

} // namespace wolf
