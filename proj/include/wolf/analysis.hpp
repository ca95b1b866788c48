#pragma once

#include "wolf/params.hpp"
#include "wolf/simulator.hpp"

#include <span>
#include <vector>

namespace wolf {

// Affine rescaling of a waveform onto [0, 1]. A (numerically) constant
// signal maps to all zeros instead of dividing by a vanishing range.
std::vector<double> normalize_unit(std::span<const double> y);

// Magnitude of the analytic signal, computed by zeroing the negative
// frequencies of the DFT. This is the instantaneous amplitude; for an
// amplitude-modulated tone it recovers the modulation envelope.
std::vector<double> analytic_envelope(std::span<const double> y);

// Centered moving average with a window of round(window_s * rate)
// samples, using mirror reflection at both ends. Even windows extend one
// sample further to the right.
std::vector<double> moving_average(std::span<const double> y, double window_s,
                                   double rate);

// Subtract the mean in place.
void detrend_mean(std::vector<double>& y);

// Energy in [f_lo, f_hi] divided by energy in [0, f_max], from the DFT
// of `y` over non-negative frequencies, band edges inclusive. Returns 0
// for an all-zero signal, and likewise when [0, f_max] holds under 1% of
// the spectrum's energy: such a signal is unmodulated on the graded
// scales and the quotient would only compare two leakage tails.
double band_energy_ratio(std::span<const double> y, double rate, double f_lo,
                         double f_hi, double f_max);

// Beating strength of one waveform: normalize, envelope, smooth,
// detrend, then the energy fraction of the beating band. Lives in [0, 1]
// by construction.
double wolf_note_indicator(std::span<const double> y, double rate,
                           const IndicatorParams& p);

// Largest |y| over the tail window [t_star, end].
double tail_peak(std::span<const double> y, double rate, double t_star);

// Frequency of the largest DFT bin within [f_lo, f_hi].
double dominant_frequency(std::span<const double> y, double rate, double f_lo,
                          double f_hi);

// Log-magnitude spectrum over non-negative frequencies, in dB with the
// magnitude floored at `floor_eps` before the log.
struct Spectrum {
    std::vector<double> values_db;
    double bin_hz = 0.0;
};

// `y` is expected to be normalized with normalize_unit already.
Spectrum log_spectrum(std::span<const double> y, double rate, double floor_eps);

// L1 distance between two spectra on the same bin grid, times the bin
// width [dB Hz]. Mismatched grids are an error.
double spectral_distance(const Spectrum& a, const Spectrum& b);

// All indicators of one scenario run.
struct IndicatorReport {
    std::vector<double> j_wolf;        // beating strength per note
    double wolf_max = 0.0;             // worst beating over the set
    double sustain = 0.0;              // -(quietest tail peak)
    double fidelity = 0.0;             // mean timbre shift, NaN without reference
    std::vector<double> distance_db_hz; // per-note shift, empty without reference
};

// Spectra of the body waveforms, for use as a fidelity reference.
std::vector<Spectrum> note_spectra(const std::vector<Recording>& recs,
                                   const IndicatorParams& p);

// Evaluate every indicator over a set of per-note recordings. The
// fidelity terms need `reference` spectra from a suppressor-free run of
// the same notes; pass nullptr to skip them. The mean timbre shift
// excludes the wolf note itself.
IndicatorReport analyze_notes(const std::vector<Recording>& recs,
                              const IndicatorParams& p, int wolf_note,
                              const std::vector<Spectrum>* reference);

} // namespace wolf
