#include "wolf/excitation.hpp"
#include "wolf/errors.hpp"

#include <cmath>
#include <numbers>

namespace wolf {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ValidationError(what);
}

// Weight of the bow node itself in the triangular spreading.
constexpr double kBowCenterWeight = 0.5;

} // namespace

void PluckParams::validate() const {
    require(duration > 0.0, "pluck.duration must be > 0");
    require(std::isfinite(amplitude), "pluck.amplitude must be finite");
}

void BowParams::validate() const {
    require(speed != 0.0 && std::isfinite(speed), "bow.speed must be nonzero");
    require(normal_force > 0.0, "bow.normal_force must be > 0");
    require(max_force > 0.0, "bow.max_force must be > 0");
    require(mu_static > 0.0, "bow.mu_static must be > 0");
    require(mu_dynamic > 0.0, "bow.mu_dynamic must be > 0");
    require(mu_dynamic <= mu_static, "bow.mu_dynamic must be <= bow.mu_static");
    require(eps > 0.0, "bow.eps must be > 0");
}

double pluck_force(double t, const PluckParams& p) {
    if (t < 0.0 || t > p.duration) return 0.0;
    const double s = std::sin(std::numbers::pi * t / p.duration);
    return p.amplitude * s * s;
}

double relaxed_sign(double x, double eps) {
    if (x > eps) return 1.0;
    if (x < -eps) return -1.0;
    return 0.0;
}

double theoretical_stick_force(const StringState& s, const StringCoeffs& c,
                               int bow_node, double bow_speed,
                               double center_weight) {
    const double target = s.at(bow_node) + bow_speed * c.dt;
    const double bracket = string_scheme_bracket(s, c, bow_node);
    return ((1.0 + c.tau) * target - bracket) / (c.force_scale * center_weight);
}

double bow_force(const StringState& s, const StringCoeffs& c,
                 const BowParams& p, int bow_node, BowPhase& phase) {
    const double v_rel = string_velocity_at(s, bow_node, c.dt) - p.speed;
    const double f_star =
        theoretical_stick_force(s, c, bow_node, p.speed, kBowCenterWeight);

    const bool stick = std::fabs(f_star) < p.max_force;
    phase.mode = stick ? BowMode::Stick : BowMode::Slip;
    const double mu = stick ? p.mu_static : p.mu_dynamic;
    return -p.normal_force * mu * relaxed_sign(v_rel, p.eps);
}

std::array<PointLoad, 3> spread_bow(double force, int bow_node) {
    return {PointLoad{bow_node - 1, 0.25 * force},
            PointLoad{bow_node, 0.5 * force},
            PointLoad{bow_node + 1, 0.25 * force}};
}

} // namespace wolf
