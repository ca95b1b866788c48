#include "wolf/spectral.hpp"
#include "wolf/errors.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace wolf {

namespace {

// fftw_execute_dft is thread safe on distinct buffers; plan creation is
// not, so plans are built under a lock and reused. FFTW_ESTIMATE keeps
// planning deterministic, FFTW_UNALIGNED lets one plan serve any buffer.
class PlanCache {
public:
    fftw_plan get(std::size_t n, bool inverse) {
        std::scoped_lock lock(mutex_);
        auto key = std::make_pair(n, inverse);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        std::vector<std::complex<double>> scratch(n);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                                          inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!plan) throw SimulationError("FFT planning failed");
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, bool>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache instance;
    return instance;
}

} // namespace

void fft_inplace(std::vector<std::complex<double>>& data, bool inverse) {
    if (data.empty()) return;
    fftw_plan plan = cache().get(data.size(), inverse);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, buf, buf);
    if (inverse) {
        const double scale = 1.0 / static_cast<double>(data.size());
        for (auto& v : data) v *= scale;
    }
}

std::vector<std::complex<double>> fft_real(std::span<const double> x) {
    std::vector<std::complex<double>> data(x.begin(), x.end());
    fft_inplace(data, false);
    return data;
}

} // namespace wolf
