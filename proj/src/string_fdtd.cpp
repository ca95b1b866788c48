#include "wolf/string_fdtd.hpp"
#include "wolf/errors.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace wolf {

namespace {

// Interior node count below which the parallel loop is not worth the
// fork/join overhead.
constexpr int kParallelThreshold = 1 << 14;

inline double node_update(const double* cur, double prev_old,
                          const StringCoeffs& c, int ai) {
    const double u = cur[ai];
    const double lap = cur[ai + 1] - 2.0 * u + cur[ai - 1];
    const double bih = cur[ai + 2] - 4.0 * cur[ai + 1] + 6.0 * u -
                       4.0 * cur[ai - 1] + cur[ai - 2];
    const double bracket =
        2.0 * u + (c.tau - 1.0) * prev_old + c.lambda * lap - c.mu * bih;
    return bracket / (1.0 + c.tau);
}

inline bool out_of_range(double v) {
    return !(std::fabs(v) <= kMaxDisplacement);
}

void add_loads(StringState& s, const StringCoeffs& c,
               std::span<const PointLoad> loads, bool& bad) {
    const double gain = c.force_scale / (1.0 + c.tau);
    for (const auto& load : loads) {
        if (load.node < 1 || load.node > s.intervals - 1) {
            std::ostringstream os;
            os << "string load at node " << load.node
               << " is outside the interior [1, " << s.intervals - 1 << "]";
            throw ValidationError(os.str());
        }
        double& v = s.prev[load.node + kGhostLayers];
        v += gain * load.force;
        bad |= out_of_range(v);
    }
}

void finish_step(StringState& s, bool bad) {
    if (bad) {
        std::ostringstream os;
        os << "string state blew up advancing to step " << s.time_index + 1;
        throw SimulationError(os.str());
    }
    std::swap(s.prev, s.curr);
    ++s.time_index;
    apply_string_bcs(s);
}

} // namespace

void apply_string_bcs(StringState& s) {
    auto& a = s.curr;
    const int m = s.intervals;
    a[kGhostLayers] = 0.0;
    a[m + kGhostLayers] = 0.0;
    a[1] = -a[3];
    a[0] = -a[4];
    a[m + 3] = -a[m + 1];
    a[m + 4] = -a[m];
}

double string_scheme_bracket(const StringState& s, const StringCoeffs& c,
                             int physical_node) {
    const int ai = physical_node + kGhostLayers;
    return node_update(s.curr.data(), s.prev[ai], c, ai) * (1.0 + c.tau);
}

double string_velocity_at(const StringState& s, int physical_node, double dt) {
    const int ai = physical_node + kGhostLayers;
    return (s.curr[ai] - s.prev[ai]) / dt;
}

void step_string(StringState& s, const StringCoeffs& c,
                 std::span<const PointLoad> loads) {
    const double* cur = s.curr.data();
    double* nxt = s.prev.data();
    const int m = s.intervals;
    bool bad = false;

#pragma omp parallel for schedule(static) reduction(| : bad) \
    if (m >= kParallelThreshold)
    for (int i = 1; i <= m - 1; ++i) {
        const int ai = i + kGhostLayers;
        const double v = node_update(cur, nxt[ai], c, ai);
        nxt[ai] = v;
        bad |= out_of_range(v);
    }

    add_loads(s, c, loads, bad);
    finish_step(s, bad);
}

namespace reference {

void step_string(StringState& s, const StringCoeffs& c,
                 std::span<const PointLoad> loads) {
    const double* cur = s.curr.data();
    double* nxt = s.prev.data();
    const int m = s.intervals;
    bool bad = false;

    for (int i = 1; i <= m - 1; ++i) {
        const int ai = i + kGhostLayers;
        const double v = node_update(cur, nxt[ai], c, ai);
        nxt[ai] = v;
        bad |= out_of_range(v);
    }

    add_loads(s, c, loads, bad);
    finish_step(s, bad);
}

} // namespace reference

} // namespace wolf
