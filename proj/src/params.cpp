#include "wolf/params.hpp"
#include "wolf/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace wolf {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ValidationError(what);
}

void require_fraction(double v, const char* what) {
    if (!(v > 0.0 && v < 1.0)) {
        std::ostringstream os;
        os << what << " must lie strictly inside (0, 1), got " << v;
        throw ValidationError(os.str());
    }
}

} // namespace

void StringParams::validate() const {
    require(length > 0.0, "string.length must be > 0");
    require(tension > 0.0, "string.tension must be > 0");
    require(density > 0.0, "string.density must be > 0");
    require(area > 0.0, "string.area must be > 0");
    require(youngs_modulus > 0.0, "string.youngs_modulus must be > 0");
    require(moment_inertia > 0.0, "string.moment_inertia must be > 0");
    require(damping >= 0.0, "string.damping must be >= 0");
}

void PlateParams::validate() const {
    require(side > 0.0, "plate.side must be > 0");
    require(tension > 0.0, "plate.tension must be > 0");
    require(density > 0.0, "plate.density must be > 0");
    require(youngs_modulus > 0.0, "plate.youngs_modulus must be > 0");
    require(thickness > 0.0, "plate.thickness must be > 0");
    require(poisson >= 0.0 && poisson < 0.5, "plate.poisson must lie in [0, 0.5)");
    require(damping >= 0.0, "plate.damping must be >= 0");
}

void BridgeParams::validate() const {
    require(mass > 0.0, "bridge.mass must be > 0");
    require(k_string > 0.0, "bridge.k_string must be > 0");
    require(k_left > 0.0, "bridge.k_left must be > 0");
    require(k_right > 0.0, "bridge.k_right must be > 0");
    require_fraction(string_attach, "bridge.string_attach");
    require_fraction(foot_left.x, "bridge.foot_left.x");
    require_fraction(foot_left.y, "bridge.foot_left.y");
    require_fraction(foot_right.x, "bridge.foot_right.x");
    require_fraction(foot_right.y, "bridge.foot_right.y");
}

double SuppressorParams::stiffness() const {
    return suppressor_stiffness(mass, frequency);
}

void SuppressorParams::validate() const {
    require(mass > 0.0, "suppressor.mass must be > 0");
    require(frequency > 0.0, "suppressor.frequency must be > 0");
    require(damping >= 0.0, "suppressor.damping must be >= 0");
    require_fraction(position.x, "suppressor.position.x");
    require_fraction(position.y, "suppressor.position.y");
}

long SimGridConfig::steps() const {
    return std::lround(total_time / dt);
}

void SimGridConfig::validate() const {
    require(dt > 0.0, "sim.dt must be > 0");
    require(total_time > 0.0, "sim.total_time must be > 0");
    require(steps() >= 1, "sim.total_time must cover at least one step");
    require_fraction(exc_point, "sim.exc_point");
    require_fraction(rec_point.x, "sim.rec_point.x");
    require_fraction(rec_point.y, "sim.rec_point.y");
}

void IndicatorParams::validate(double total_time) const {
    require(theta > 0.0, "indicators.theta must be > 0");
    require(f_lo >= 0.0, "indicators.f_lo must be >= 0");
    require(f_hi > f_lo, "indicators.f_hi must be > f_lo");
    require(f_max >= f_hi, "indicators.f_max must be >= f_hi");
    require(t_star >= 0.0, "indicators.t_star must be >= 0");
    require(t_star < total_time, "indicators.t_star must be < total_time");
    require(log_floor > 0.0, "indicators.log_floor must be > 0");
}

double string_dx_bound(double wave_speed, double stiffness_coeff, double dt) {
    const double a = wave_speed * dt;
    const double b = stiffness_coeff * dt;
    return std::sqrt(0.5 * (a * a + std::sqrt(a * a * a * a + 16.0 * b * b)));
}

double plate_dx_bound(double wave_speed, double stiffness_coeff, double dt) {
    const double membrane = std::numbers::sqrt2 * wave_speed * dt;
    const double bending = 2.0 * std::sqrt(stiffness_coeff * dt);
    return std::max(membrane, bending);
}

StringCoeffs derive_string_coeffs(const StringParams& p, double dt) {
    p.validate();
    require(dt > 0.0, "sim.dt must be > 0");

    StringCoeffs c;
    c.dt = dt;
    const double rho_a = p.density * p.area;
    c.wave_speed = std::sqrt(p.tension / rho_a);
    c.stiffness_coeff = std::sqrt(p.youngs_modulus * p.moment_inertia / rho_a);

    const double dx_min = string_dx_bound(c.wave_speed, c.stiffness_coeff, dt);
    c.intervals = static_cast<int>(std::floor(p.length / dx_min));
    if (c.intervals < 8) {
        std::ostringstream os;
        os << "string grid too coarse: " << c.intervals
           << " intervals (need >= 8); shorten dt or lengthen the string";
        throw ValidationError(os.str());
    }
    c.dx = p.length / c.intervals;

    const double lam = c.wave_speed * dt / c.dx;
    const double mu = c.stiffness_coeff * dt / (c.dx * c.dx);
    c.lambda = lam * lam;
    c.mu = mu * mu;
    c.tau = p.damping * dt / 2.0;
    c.force_scale = dt * dt / (rho_a * c.dx);
    return c;
}

PlateCoeffs derive_plate_coeffs(const PlateParams& p, double dt) {
    p.validate();
    require(dt > 0.0, "sim.dt must be > 0");

    PlateCoeffs c;
    c.dt = dt;
    const double rho_h = p.density * p.thickness;
    c.bending_rigidity = p.youngs_modulus * std::pow(p.thickness, 3) /
                         (12.0 * (1.0 - p.poisson * p.poisson));
    c.wave_speed = std::sqrt(p.tension / rho_h);
    c.stiffness_coeff = std::sqrt(c.bending_rigidity / rho_h);

    const double dx_min = plate_dx_bound(c.wave_speed, c.stiffness_coeff, dt);
    c.intervals = static_cast<int>(std::floor(p.side / dx_min));
    if (c.intervals < 8) {
        std::ostringstream os;
        os << "plate grid too coarse: " << c.intervals
           << " intervals (need >= 8); shorten dt or enlarge the plate";
        throw ValidationError(os.str());
    }
    c.dx = p.side / c.intervals;

    const double lam = c.wave_speed * dt / c.dx;
    const double mu = c.stiffness_coeff * dt / (c.dx * c.dx);
    c.lambda = lam * lam;
    c.mu = mu * mu;
    c.tau = p.damping * dt / 2.0;
    c.force_scale = dt * dt / (rho_h * c.dx * c.dx);
    return c;
}

double suppressor_stiffness(double mass, double frequency) {
    const double w = 2.0 * std::numbers::pi * frequency;
    return mass * w * w;
}

int fraction_to_index(double fraction, int node_count) {
    require(node_count >= 3, "grid must have at least one interior node");
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
        std::ostringstream os;
        os << "contact fraction " << fraction << " outside [0, 1]";
        throw ValidationError(os.str());
    }
    const int idx = static_cast<int>(std::lround(fraction * (node_count - 1)));
    if (idx <= 0 || idx >= node_count - 1) {
        std::ostringstream os;
        os << "contact fraction " << fraction
           << " maps to a clamped boundary node; move it into the interior";
        throw ValidationError(os.str());
    }
    return idx;
}

} // namespace wolf
