#pragma once

#include "wolf/params.hpp"
#include "wolf/string_fdtd.hpp"

#include <array>

namespace wolf {

struct PluckParams {
    double amplitude = 1.0;    // peak force [N]
    double duration = 4.55e-3; // pulse length [s]

    void validate() const;
};

struct BowParams {
    double speed = 0.2;        // bow velocity [m/s]
    double normal_force = 1.0; // [N]
    double max_force = 2.5;    // stick threshold on the theoretical force [N]
    double mu_static = 0.6;
    double mu_dynamic = 0.2;
    double eps = 1.0e-2;       // dead band of the relaxed sign [m/s]

    void validate() const;
};

enum class BowMode { Stick, Slip };

// Friction state carried between steps; starts stuck (the attack).
struct BowPhase {
    BowMode mode = BowMode::Stick;
};

// Half-sine-squared force pulse: amplitude * sin^2(pi t / duration) for
// 0 <= t <= duration, zero afterwards.
double pluck_force(double t, const PluckParams& p);

// Sign with a dead band: 0 whenever |x| <= eps.
double relaxed_sign(double x, double eps);

// Force that, applied at the bow node with the given spreading weight,
// would make that node move exactly at bow speed over the next step.
// Inverts the string update in closed form.
double theoretical_stick_force(const StringState& s, const StringCoeffs& c,
                               int bow_node, double bow_speed,
                               double center_weight);

// One evaluation of the friction law at the bow node. Sticks while the
// theoretical force stays below max_force, otherwise slips; either way
// the applied force is the Coulomb value for the current regime.
double bow_force(const StringState& s, const StringCoeffs& c,
                 const BowParams& p, int bow_node, BowPhase& phase);

// Triangular spreading of the bow force over the node and its
// neighbours with weights 1/4, 1/2, 1/4. All three nodes must be
// interior; the caller checks that when it picks the bow node.
std::array<PointLoad, 3> spread_bow(double force, int bow_node);

} // namespace wolf
