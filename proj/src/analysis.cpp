#include "wolf/analysis.hpp"

#include "wolf/errors.hpp"
#include "wolf/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace wolf {

namespace {

// Index with mirror reflection: ... y2 y1 | y0 y1 ... yN-1 | yN-2 ...
inline std::size_t mirror(long i, long n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * (n - 1) - i;
    return static_cast<std::size_t>(i);
}

} // namespace

std::vector<double> normalize_unit(std::span<const double> y) {
    if (y.empty()) return {};
    const auto [mn_it, mx_it] = std::minmax_element(y.begin(), y.end());
    const double mn = *mn_it;
    const double mx = *mx_it;
    const double range = mx - mn;
    const double scale = std::max({std::fabs(mn), std::fabs(mx), 1.0});
    if (!(range > 1.0e-15 * scale)) return std::vector<double>(y.size(), 0.0);

    std::vector<double> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = (y[i] - mn) / range;
    return out;
}

std::vector<double> analytic_envelope(std::span<const double> y) {
    const std::size_t n = y.size();
    if (n == 0) return {};

    std::vector<std::complex<double>> data(y.begin(), y.end());
    fft_inplace(data, false);

    // Keep DC (and Nyquist for even n), double the positive frequencies,
    // zero the negative ones.
    const std::size_t half = n / 2;
    if (n % 2 == 0) {
        for (std::size_t k = 1; k < half; ++k) data[k] *= 2.0;
        for (std::size_t k = half + 1; k < n; ++k) data[k] = 0.0;
    } else {
        for (std::size_t k = 1; k <= half; ++k) data[k] *= 2.0;
        for (std::size_t k = half + 1; k < n; ++k) data[k] = 0.0;
    }

    fft_inplace(data, true);
    std::vector<double> env(n);
    for (std::size_t i = 0; i < n; ++i) env[i] = std::abs(data[i]);
    return env;
}

std::vector<double> moving_average(std::span<const double> y, double window_s,
                                   double rate) {
    const long n = static_cast<long>(y.size());
    if (n == 0) return {};

    long w = std::lround(window_s * rate);
    w = std::max(w, 1L);
    if (w > n) {
        std::ostringstream os;
        os << "smoothing window of " << w << " samples exceeds the signal ("
           << n << " samples)";
        throw ValidationError(os.str());
    }
    const long lo = (w - 1) / 2;
    const long hi = w - 1 - lo;

    double sum = 0.0;
    for (long k = -lo; k <= hi; ++k) sum += y[mirror(k, n)];

    std::vector<double> out(n);
    const double inv = 1.0 / static_cast<double>(w);
    out[0] = sum * inv;
    for (long i = 1; i < n; ++i) {
        sum += y[mirror(i + hi, n)] - y[mirror(i - 1 - lo, n)];
        out[i] = sum * inv;
    }
    return out;
}

void detrend_mean(std::vector<double>& y) {
    if (y.empty()) return;
    const double mean =
        std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
    for (double& v : y) v -= mean;
}

double band_energy_ratio(std::span<const double> y, double rate, double f_lo,
                         double f_hi, double f_max) {
    const std::size_t n = y.size();
    if (n == 0) return 0.0;

    const auto spec = fft_real(y);
    const double df = rate / static_cast<double>(n);
    const std::size_t half = n / 2;

    double band = 0.0;
    double total = 0.0;
    double grand = 0.0;
    for (std::size_t k = 0; k <= half; ++k) {
        const double e = std::norm(spec[k]);
        grand += e;
        const double f = k * df;
        if (f > f_max) continue;
        total += e;
        if (f >= f_lo && f <= f_hi) band += e;
    }
    // When almost none of the energy sits below f_max, the signal carries
    // no modulation on the scales the ratio is meant to grade; the
    // quotient of two leakage tails would be meaningless, so call it 0.
    if (!(total > 1.0e-2 * grand)) return 0.0;
    return band / total;
}

double wolf_note_indicator(std::span<const double> y, double rate,
                           const IndicatorParams& p) {
    const auto unit = normalize_unit(y);
    const auto env = analytic_envelope(unit);
    auto smooth = moving_average(env, p.theta, rate);
    detrend_mean(smooth);
    return band_energy_ratio(smooth, rate, p.f_lo, p.f_hi, p.f_max);
}

double tail_peak(std::span<const double> y, double rate, double t_star) {
    const long n = static_cast<long>(y.size());
    if (n == 0) return 0.0;

    // Sample k sits at time (k + 1) / rate.
    long start = static_cast<long>(std::ceil(t_star * rate - 1.0 - 1.0e-9));
    start = std::clamp(start, 0L, n - 1);

    double peak = 0.0;
    for (long i = start; i < n; ++i) peak = std::max(peak, std::fabs(y[i]));
    return peak;
}

double dominant_frequency(std::span<const double> y, double rate, double f_lo,
                          double f_hi) {
    const std::size_t n = y.size();
    if (n == 0) return 0.0;

    const auto spec = fft_real(y);
    const double df = rate / static_cast<double>(n);
    const std::size_t half = n / 2;

    double best_mag = -1.0;
    double best_f = 0.0;
    for (std::size_t k = 0; k <= half; ++k) {
        const double f = k * df;
        if (f < f_lo) continue;
        if (f > f_hi) break;
        const double m = std::abs(spec[k]);
        if (m > best_mag) {
            best_mag = m;
            best_f = f;
        }
    }
    return best_f;
}

Spectrum log_spectrum(std::span<const double> y, double rate,
                      double floor_eps) {
    Spectrum s;
    const std::size_t n = y.size();
    if (n == 0) return s;

    const auto spec = fft_real(y);
    const std::size_t half = n / 2;
    s.bin_hz = rate / static_cast<double>(n);
    s.values_db.resize(half + 1);
    for (std::size_t k = 0; k <= half; ++k) {
        s.values_db[k] = 20.0 * std::log10(std::max(std::abs(spec[k]), floor_eps));
    }
    return s;
}

double spectral_distance(const Spectrum& a, const Spectrum& b) {
    if (a.values_db.size() != b.values_db.size() ||
        std::fabs(a.bin_hz - b.bin_hz) > 1.0e-9 * std::max(a.bin_hz, b.bin_hz)) {
        throw ValidationError("spectra live on different bin grids");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < a.values_db.size(); ++k) {
        acc += std::fabs(a.values_db[k] - b.values_db[k]);
    }
    return acc * a.bin_hz;
}

std::vector<Spectrum> note_spectra(const std::vector<Recording>& recs,
                                   const IndicatorParams& p) {
    std::vector<Spectrum> out(recs.size());
#pragma omp parallel for schedule(dynamic) if (recs.size() > 1)
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto unit = normalize_unit(recs[i].body);
        out[i] = log_spectrum(unit, recs[i].sample_rate, p.log_floor);
    }
    return out;
}

IndicatorReport analyze_notes(const std::vector<Recording>& recs,
                              const IndicatorParams& p, int wolf_note,
                              const std::vector<Spectrum>* reference) {
    const std::size_t n = recs.size();
    if (n == 0) throw ValidationError("no recordings to analyze");
    if (wolf_note < 0 || wolf_note >= static_cast<int>(n)) {
        throw ValidationError("wolf note index out of range");
    }
    if (reference && reference->size() != n) {
        throw ValidationError("reference spectra count does not match the notes");
    }

    IndicatorReport rep;
    rep.j_wolf.resize(n);
    std::vector<double> tails(n);
    if (reference) rep.distance_db_hz.resize(n);

#pragma omp parallel for schedule(dynamic) if (n > 1)
    for (std::size_t i = 0; i < n; ++i) {
        rep.j_wolf[i] = wolf_note_indicator(recs[i].body, recs[i].sample_rate, p);
        tails[i] = tail_peak(recs[i].body, recs[i].sample_rate, p.t_star);
        if (reference) {
            const auto unit = normalize_unit(recs[i].body);
            const auto spec = log_spectrum(unit, recs[i].sample_rate, p.log_floor);
            rep.distance_db_hz[i] = spectral_distance((*reference)[i], spec);
        }
    }

    rep.wolf_max = *std::max_element(rep.j_wolf.begin(), rep.j_wolf.end());
    rep.sustain = -*std::min_element(tails.begin(), tails.end());

    if (reference && n > 1) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (static_cast<int>(i) != wolf_note) acc += rep.distance_db_hz[i];
        }
        rep.fidelity = acc / static_cast<double>(n - 1);
    } else {
        rep.fidelity = std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

} // namespace wolf
