#include "core/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ltft {

namespace {

// FFTW plan creation is not thread safe; execution via fftw_execute_dft is.
// Plans are created once per (size, direction) with FFTW_ESTIMATE so the
// algorithm choice (and hence rounding) is reproducible across runs, and with
// FFTW_UNALIGNED so they can run on arbitrary buffers.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<fftw_complex> scratch(n);
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), scratch.data(), scratch.data(),
                                          sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!plan) throw std::runtime_error("fftw plan creation failed");
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

std::vector<cplx> transform(std::span<const cplx> x, int sign) {
    if (x.empty()) throw std::invalid_argument("empty input");
    std::vector<cplx> out(x.begin(), x.end());
    fftw_plan plan = PlanCache::instance().get(out.size(), sign);
    auto* data = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(plan, data, data);
    const double scale = 1.0 / std::sqrt(static_cast<double>(out.size()));
    for (cplx& v : out) v *= scale;
    return out;
}

}  // namespace

std::vector<cplx> dft(std::span<const cplx> x) { return transform(x, FFTW_FORWARD); }

std::vector<cplx> idft(std::span<const cplx> x) { return transform(x, FFTW_BACKWARD); }

std::vector<cplx> dft(const DiscreteSignal& s) { return dft(std::span<const cplx>(s.samples)); }

double bin_frequency(std::size_t k, std::size_t m, double rate) {
    const auto half = m / 2;
    const double idx = k <= half ? static_cast<double>(k)
                                 : static_cast<double>(k) - static_cast<double>(m);
    return idx * rate / static_cast<double>(m);
}

}  // namespace ltft
