#pragma once

#include <span>
#include <string>
#include <vector>

namespace wolf {

struct WavData {
    std::vector<double> samples;
    int sample_rate = 0;
};

// Write a mono 16-bit PCM file. Samples are peak-normalized to 0.9 full
// scale first; an all-zero signal is written as silence.
void write_wav(const std::string& path, std::span<const double> samples,
               int sample_rate);

// Read a mono 16-bit PCM file written by write_wav (or any equivalent
// RIFF file). Anything else raises IoError.
WavData read_wav(const std::string& path);

// Keep every factor-th sample after an anti-aliasing low-pass (windowed
// sinc). factor == 1 returns a copy.
std::vector<double> decimate(std::span<const double> x, int factor);

} // namespace wolf
