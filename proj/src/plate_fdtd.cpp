#include "wolf/plate_fdtd.hpp"
#include "wolf/errors.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace wolf {

namespace {

// Interior site count below which the parallel row loop is skipped.
constexpr long kParallelThreshold = 1L << 14;

inline bool out_of_range(double v) {
    return !(std::fabs(v) <= kMaxDisplacement);
}

// Update one interior row. `ar` is the array row index; columns span the
// interior. Writes the new level into `nxt`, reads the old one from the
// same place (each site only reads its own previous value there).
inline bool update_plate_row(const double* cur, double* nxt, int stride,
                             int ar, int aj_begin, int aj_end,
                             const PlateCoeffs& c) {
    const double* r0 = cur + ar * std::size_t(stride);
    const double* rm1 = r0 - stride;
    const double* rp1 = r0 + stride;
    const double* rm2 = r0 - 2 * std::size_t(stride);
    const double* rp2 = r0 + 2 * std::size_t(stride);
    double* out = nxt + ar * std::size_t(stride);

    const double inv = 1.0 / (1.0 + c.tau);
    bool bad = false;
    for (int aj = aj_begin; aj < aj_end; ++aj) {
        const double u = r0[aj];
        const double ax1 = rm1[aj] + rp1[aj] + r0[aj - 1] + r0[aj + 1];
        const double di = rm1[aj - 1] + rm1[aj + 1] + rp1[aj - 1] + rp1[aj + 1];
        const double ax2 = rm2[aj] + rp2[aj] + r0[aj - 2] + r0[aj + 2];
        const double lap = ax1 - 4.0 * u;
        const double bih = 20.0 * u - 8.0 * ax1 + 2.0 * di + ax2;
        const double bracket =
            2.0 * u + (c.tau - 1.0) * out[aj] + c.lambda * lap - c.mu * bih;
        const double v = bracket * inv;
        out[aj] = v;
        bad |= out_of_range(v);
    }
    return bad;
}

void add_loads(PlateState& s, const PlateCoeffs& c,
               std::span<const PlateLoad> loads, bool& bad) {
    const double gain = c.force_scale / (1.0 + c.tau);
    const int m = s.intervals;
    for (const auto& load : loads) {
        if (load.px < 1 || load.px > m - 1 || load.py < 1 || load.py > m - 1) {
            std::ostringstream os;
            os << "plate load at node (" << load.px << ", " << load.py
               << ") is outside the interior [1, " << m - 1 << "]^2";
            throw ValidationError(os.str());
        }
        double& v = s.prev[s.index(load.px, load.py)];
        v += gain * load.force;
        bad |= out_of_range(v);
    }
}

void finish_step(PlateState& s, bool bad) {
    if (bad) {
        std::ostringstream os;
        os << "plate state blew up advancing to step " << s.time_index + 1;
        throw SimulationError(os.str());
    }
    std::swap(s.prev, s.curr);
    ++s.time_index;
    apply_plate_bcs(s);
}

} // namespace

BilinearWeights bilinear_weights(Position frac, int intervals) {
    BilinearWeights w;
    double gx = frac.x * intervals;
    double gy = frac.y * intervals;
    w.px0 = std::min(static_cast<int>(std::floor(gx)), intervals - 1);
    w.py0 = std::min(static_cast<int>(std::floor(gy)), intervals - 1);
    const double fx = gx - w.px0;
    const double fy = gy - w.py0;
    w.w00 = (1.0 - fx) * (1.0 - fy);
    w.w01 = (1.0 - fx) * fy;
    w.w10 = fx * (1.0 - fy);
    w.w11 = fx * fy;
    return w;
}

double sample_bilinear(const PlateState& s, const BilinearWeights& w) {
    return w.w00 * s.at(w.px0, w.py0) + w.w01 * s.at(w.px0, w.py0 + 1) +
           w.w10 * s.at(w.px0 + 1, w.py0) + w.w11 * s.at(w.px0 + 1, w.py0 + 1);
}

double sample_bilinear_prev(const PlateState& s, const BilinearWeights& w) {
    return w.w00 * s.at_prev(w.px0, w.py0) + w.w01 * s.at_prev(w.px0, w.py0 + 1) +
           w.w10 * s.at_prev(w.px0 + 1, w.py0) +
           w.w11 * s.at_prev(w.px0 + 1, w.py0 + 1);
}

double plate_velocity_at(const PlateState& s, const BilinearWeights& w, double dt) {
    return (sample_bilinear(s, w) - sample_bilinear_prev(s, w)) / dt;
}

int spread_bilinear(const BilinearWeights& w, double force, PlateLoad out[4]) {
    int n = 0;
    const auto put = [&](int px, int py, double weight) {
        if (weight != 0.0) out[n++] = PlateLoad{px, py, weight * force};
    };
    put(w.px0, w.py0, w.w00);
    put(w.px0, w.py0 + 1, w.w01);
    put(w.px0 + 1, w.py0, w.w10);
    put(w.px0 + 1, w.py0 + 1, w.w11);
    return n;
}

void apply_plate_bcs(PlateState& s) {
    auto& a = s.curr;
    const int m = s.intervals;
    const int stride = s.stride();
    const auto row = [&](int ar) { return a.data() + ar * std::size_t(stride); };

    // Pin the physical edges.
    for (int aj = 2; aj <= m + 2; ++aj) {
        row(2)[aj] = 0.0;
        row(m + 2)[aj] = 0.0;
    }
    for (int ar = 2; ar <= m + 2; ++ar) {
        row(ar)[2] = 0.0;
        row(ar)[m + 2] = 0.0;
    }

    // Odd reflection into the ghost rows, physical columns only.
    for (int aj = 2; aj <= m + 2; ++aj) {
        row(1)[aj] = -row(3)[aj];
        row(0)[aj] = -row(4)[aj];
        row(m + 3)[aj] = -row(m + 1)[aj];
        row(m + 4)[aj] = -row(m)[aj];
    }
    // Odd reflection into the ghost columns, every row. Composing the two
    // reflections fills the corner blocks with the even diagonal image.
    for (int ar = 0; ar < stride; ++ar) {
        double* r = row(ar);
        r[1] = -r[3];
        r[0] = -r[4];
        r[m + 3] = -r[m + 1];
        r[m + 4] = -r[m];
    }
}

void step_plate(PlateState& s, const PlateCoeffs& c,
                std::span<const PlateLoad> loads) {
    const double* cur = s.curr.data();
    double* nxt = s.prev.data();
    const int m = s.intervals;
    const int stride = s.stride();
    bool bad = false;

#pragma omp parallel for schedule(static) reduction(| : bad) \
    if (std::size_t(m - 1) * (m - 1) >= kParallelThreshold)
    for (int i = 1; i <= m - 1; ++i) {
        bad |= update_plate_row(cur, nxt, stride, i + kGhostLayers, 3, m + 2, c);
    }

    add_loads(s, c, loads, bad);
    finish_step(s, bad);
}

namespace reference {

void step_plate(PlateState& s, const PlateCoeffs& c,
                std::span<const PlateLoad> loads) {
    const double* cur = s.curr.data();
    double* nxt = s.prev.data();
    const int m = s.intervals;
    const int stride = s.stride();
    bool bad = false;

    for (int i = 1; i <= m - 1; ++i) {
        bad |= update_plate_row(cur, nxt, stride, i + kGhostLayers, 3, m + 2, c);
    }

    add_loads(s, c, loads, bad);
    finish_step(s, bad);
}

} // namespace reference

} // namespace wolf
