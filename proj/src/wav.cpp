#include "wolf/wav.hpp"
#include "wolf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>

namespace wolf {

namespace {

#pragma pack(push, 1)
struct WavHeader {
    char riff[4] = {'R', 'I', 'F', 'F'};
    std::uint32_t riff_size = 0;
    char wave[4] = {'W', 'A', 'V', 'E'};
    char fmt[4] = {'f', 'm', 't', ' '};
    std::uint32_t fmt_size = 16;
    std::uint16_t format = 1; // PCM
    std::uint16_t channels = 1;
    std::uint32_t sample_rate = 0;
    std::uint32_t byte_rate = 0;
    std::uint16_t block_align = 2;
    std::uint16_t bits = 16;
    char data[4] = {'d', 'a', 't', 'a'};
    std::uint32_t data_size = 0;
};
#pragma pack(pop)

constexpr double kPeakTarget = 0.9;

} // namespace

void write_wav(const std::string& path, std::span<const double> samples,
               int sample_rate) {
    if (sample_rate <= 0) throw ValidationError("wav sample rate must be > 0");

    double peak = 0.0;
    for (double v : samples) peak = std::max(peak, std::fabs(v));
    const double scale = peak > 0.0 ? kPeakTarget / peak : 0.0;

    std::vector<std::int16_t> pcm(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double v = std::clamp(samples[i] * scale, -1.0, 1.0);
        pcm[i] = static_cast<std::int16_t>(std::lround(v * 32767.0));
    }

    WavHeader h;
    h.sample_rate = static_cast<std::uint32_t>(sample_rate);
    h.byte_rate = h.sample_rate * 2;
    h.data_size = static_cast<std::uint32_t>(pcm.size() * 2);
    h.riff_size = 36 + h.data_size;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(&h), sizeof(h));
    out.write(reinterpret_cast<const char*>(pcm.data()),
              static_cast<std::streamsize>(pcm.size() * 2));
    if (!out) throw IoError("short write to " + path);
}

WavData read_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);

    char riff[4], wave[4];
    std::uint32_t riff_size = 0;
    in.read(riff, 4);
    in.read(reinterpret_cast<char*>(&riff_size), 4);
    in.read(wave, 4);
    if (!in || std::memcmp(riff, "RIFF", 4) != 0 ||
        std::memcmp(wave, "WAVE", 4) != 0) {
        throw IoError(path + " is not a RIFF/WAVE file");
    }

    WavData out;
    std::uint16_t format = 0, channels = 0, bits = 0;
    bool have_fmt = false;

    // Walk the chunks; take the first data chunk after a PCM fmt chunk.
    while (in) {
        char id[4];
        std::uint32_t size = 0;
        in.read(id, 4);
        in.read(reinterpret_cast<char*>(&size), 4);
        if (!in) break;

        if (std::memcmp(id, "fmt ", 4) == 0) {
            std::vector<char> body(size);
            in.read(body.data(), size);
            if (size < 16) throw IoError(path + ": fmt chunk too small");
            std::memcpy(&format, body.data(), 2);
            std::memcpy(&channels, body.data() + 2, 2);
            std::uint32_t rate = 0;
            std::memcpy(&rate, body.data() + 4, 4);
            std::memcpy(&bits, body.data() + 14, 2);
            out.sample_rate = static_cast<int>(rate);
            have_fmt = true;
        } else if (std::memcmp(id, "data", 4) == 0) {
            if (!have_fmt) throw IoError(path + ": data chunk before fmt");
            if (format != 1 || channels != 1 || bits != 16) {
                throw IoError(path + ": only mono 16-bit PCM is supported");
            }
            const std::size_t n = size / 2;
            std::vector<std::int16_t> pcm(n);
            in.read(reinterpret_cast<char*>(pcm.data()),
                    static_cast<std::streamsize>(n * 2));
            if (!in) throw IoError(path + ": truncated data chunk");
            out.samples.resize(n);
            for (std::size_t i = 0; i < n; ++i) out.samples[i] = pcm[i] / 32768.0;
            return out;
        } else {
            in.seekg(size + (size & 1), std::ios::cur);
        }
    }
    throw IoError(path + ": no data chunk found");
}

std::vector<double> decimate(std::span<const double> x, int factor) {
    if (factor < 1) throw ValidationError("decimation factor must be >= 1");
    if (factor == 1) return {x.begin(), x.end()};
    if (x.empty()) return {};

    // Hann-windowed sinc low-pass with cutoff below the new Nyquist.
    const int half = 4 * factor;
    const double fc = 0.45 / factor;
    std::vector<double> h(2 * half + 1);
    double sum = 0.0;
    for (int m = -half; m <= half; ++m) {
        const double window =
            0.5 + 0.5 * std::cos(std::numbers::pi * m / (half + 1.0));
        const double t = 2.0 * fc * m;
        const double sinc =
            m == 0 ? 1.0 : std::sin(std::numbers::pi * t) / (std::numbers::pi * t);
        h[m + half] = 2.0 * fc * sinc * window;
        sum += h[m + half];
    }
    for (double& v : h) v /= sum;

    const long n = static_cast<long>(x.size());
    std::vector<double> out((n + factor - 1) / factor);
    for (std::size_t k = 0; k < out.size(); ++k) {
        const long center = static_cast<long>(k) * factor;
        double acc = 0.0;
        for (int m = -half; m <= half; ++m) {
            const long i = center + m;
            if (i >= 0 && i < n) acc += h[m + half] * x[i];
        }
        out[k] = acc;
    }
    return out;
}

} // namespace wolf
