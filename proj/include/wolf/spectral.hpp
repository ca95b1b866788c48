#pragma once

#include <complex>
#include <span>
#include <vector>

namespace wolf {

// In-place complex DFT. Forward is unnormalized; inverse divides by N,
// so fft(ifft(x)) == x up to rounding. Thread safe; plans are cached
// per length.
void fft_inplace(std::vector<std::complex<double>>& data, bool inverse);

// Forward DFT of a real signal.
std::vector<std::complex<double>> fft_real(std::span<const double> x);

} // namespace wolf
