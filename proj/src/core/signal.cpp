#include "core/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ltft {

DiscreteSignal::DiscreteSignal(std::vector<cplx> data, double sample_rate, double start)
    : samples(std::move(data)), rate(sample_rate), t0(start) {
    if (!(rate > 0.0)) throw std::invalid_argument("sample rate must be positive");
}

DiscreteSignal DiscreteSignal::zeros(const TimeGrid& grid) {
    DiscreteSignal s;
    s.samples.assign(grid.length, cplx{0.0, 0.0});
    s.rate = grid.rate;
    s.t0 = grid.t0;
    return s;
}

double DiscreteSignal::energy() const {
    double acc = 0.0;
    for (const cplx& v : samples) acc += std::norm(v);
    return acc / rate;
}

double DiscreteSignal::norm() const { return std::sqrt(energy()); }

double DiscreteSignal::max_abs() const {
    double m = 0.0;
    for (const cplx& v : samples) m = std::max(m, std::abs(v));
    return m;
}

bool DiscreteSignal::is_real(double tol) const {
    for (const cplx& v : samples)
        if (std::abs(v.imag()) > tol) return false;
    return true;
}

namespace {

// Offset of q's grid relative to s's grid in samples; throws unless the two
// grids sit on one lattice.
std::ptrdiff_t aligned_offset(const DiscreteSignal& s, const DiscreteSignal& q) {
    if (s.rate != q.rate) throw std::invalid_argument("rate mismatch");
    const double shift = (q.t0 - s.t0) * s.rate;
    const double rounded = std::round(shift);
    if (std::abs(shift - rounded) > 1e-6)
        throw std::invalid_argument("grids not aligned to a common lattice");
    return static_cast<std::ptrdiff_t>(rounded);
}

}  // namespace

cplx inner_product(const DiscreteSignal& s, const DiscreteSignal& q) {
    const std::ptrdiff_t off = aligned_offset(s, q);
    // q sample m aligns with s sample m + off
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, off);
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(s.size()),
                                                       off + static_cast<std::ptrdiff_t>(q.size()));
    cplx acc{0.0, 0.0};
    for (std::ptrdiff_t n = lo; n < hi; ++n)
        acc += s.samples[static_cast<std::size_t>(n)] *
               std::conj(q.samples[static_cast<std::size_t>(n - off)]);
    return acc / s.rate;
}

double relative_error(const DiscreteSignal& reference, const DiscreteSignal& candidate) {
    const std::ptrdiff_t off = aligned_offset(reference, candidate);
    const std::ptrdiff_t lo = std::min<std::ptrdiff_t>(0, off);
    const std::ptrdiff_t hi = std::max<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(reference.size()),
                                                       off + static_cast<std::ptrdiff_t>(candidate.size()));
    double diff = 0.0;
    for (std::ptrdiff_t n = lo; n < hi; ++n) {
        cplx a{0.0, 0.0}, b{0.0, 0.0};
        if (n >= 0 && n < static_cast<std::ptrdiff_t>(reference.size()))
            a = reference.samples[static_cast<std::size_t>(n)];
        const std::ptrdiff_t m = n - off;
        if (m >= 0 && m < static_cast<std::ptrdiff_t>(candidate.size()))
            b = candidate.samples[static_cast<std::size_t>(m)];
        diff += std::norm(a - b);
    }
    const double ref = reference.energy() * reference.rate;
    if (ref == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::sqrt(diff / ref);
}

double hann(double t) {
    if (std::abs(t) > 0.5) return 0.0;
    return 0.5 * (1.0 + std::cos(kTwoPi * t));
}

namespace {

double sinc(double z) {
    const double x = kPi * z;
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

}  // namespace

double hann_hat(double z) {
    return 0.5 * sinc(z) + 0.25 * (sinc(z - 1.0) + sinc(z + 1.0));
}

namespace {

// Smallest U with sup_{|u| >= U} |hat{h}(u)|^2 below 1e-12 of the peak.
// Scans unit windows of the (oscillating) transform.
double find_cutoff(const std::function<double(double)>& freq_abs2) {
    double peak = 0.0;
    for (int i = 0; i <= 64; ++i) peak = std::max(peak, freq_abs2(i / 64.0));
    const double threshold = 1e-12 * peak;
    constexpr double kMax = 4096.0;
    for (double u = 1.0; u < kMax; u += 1.0) {
        double m = 0.0;
        for (int i = 0; i < 32; ++i) m = std::max(m, freq_abs2(u + i / 32.0));
        if (m < threshold) {
            // require the next few windows to stay below as well
            bool clear = true;
            for (double v = u + 1.0; v < std::min(u + 8.0, kMax) && clear; v += 1.0)
                for (int i = 0; i < 32; ++i)
                    if (freq_abs2(v + i / 32.0) >= threshold) { clear = false; break; }
            if (clear) return u;
        }
    }
    return kMax;
}

}  // namespace

Window Window::make_hann() {
    Window w;
    w.eval_ = [](double t) { return hann(t); };
    w.name_ = "hann";
    w.hann_ = true;
    w.l1_ = 0.5;
    w.l2sq_ = 0.375;
    static const double cutoff = find_cutoff([](double u) {
        const double v = hann_hat(u);
        return v * v;
    });
    w.cutoff_ = cutoff;
    return w;
}

Window Window::from_function(std::string name, std::function<double(double)> h, int quad_points) {
    Window w;
    w.eval_ = std::move(h);
    w.name_ = std::move(name);
    w.hann_ = false;
    // Simpson quadrature over the support for the norms.
    const int n = quad_points | 1;  // odd node count
    const double dt = 1.0 / (n - 1);
    double l1 = 0.0, l2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = -0.5 + i * dt;
        const double v = w.eval_(t);
        if (v < 0.0) throw std::invalid_argument("window must be non-negative");
        const double c = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        l1 += c * v;
        l2 += c * v * v;
    }
    w.l1_ = l1 * dt / 3.0;
    w.l2sq_ = l2 * dt / 3.0;
    w.tabulate_freq(quad_points);
    return w;
}

void Window::tabulate_freq(int quad_points) {
    // hat{h}(u) on a dense |u| table, by Simpson quadrature of the Fourier
    // integral. h real implies hat{h}(-u) = conj(hat{h}(u)).
    du_ = 1.0 / 64.0;
    const int n = (quad_points | 1);
    const double dt = 1.0 / (n - 1);
    std::vector<double> hv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) hv[static_cast<std::size_t>(i)] = eval_(-0.5 + i * dt);

    auto freq_at = [&](double u) {
        cplx acc{0.0, 0.0};
        for (int i = 0; i < n; ++i) {
            const double t = -0.5 + i * dt;
            const double c = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            acc += c * hv[static_cast<std::size_t>(i)] * unit_phasor(-u * t);
        }
        return acc * (dt / 3.0);
    };

    // Grow the table until the envelope falls below the cutoff threshold.
    const double peak = std::norm(freq_at(0.0));
    const double threshold = 1e-12 * peak;
    constexpr double kMaxU = 1024.0;
    double u = 0.0;
    double clear_since = -1.0;
    while (u <= kMaxU) {
        const cplx v = freq_at(u);
        freq_table_.push_back(v);
        if (std::norm(v) >= threshold)
            clear_since = -1.0;
        else if (clear_since < 0.0)
            clear_since = u;
        if (clear_since >= 0.0 && u - clear_since >= 8.0) break;
        u += du_;
    }
    cutoff_ = clear_since >= 0.0 ? std::max(1.0, clear_since) : kMaxU;
}

cplx Window::freq(double z) const {
    if (hann_) return {hann_hat(z), 0.0};
    const double az = std::abs(z);
    const double pos = az / du_;
    const auto i = static_cast<std::size_t>(pos);
    if (i + 1 >= freq_table_.size()) return {0.0, 0.0};
    const double frac = pos - static_cast<double>(i);
    const cplx v = freq_table_[i] * (1.0 - frac) + freq_table_[i + 1] * frac;
    return z < 0.0 ? std::conj(v) : v;
}

double Window::freq_abs2(double z) const {
    if (hann_) {
        const double v = hann_hat(z);
        return v * v;
    }
    return std::norm(freq(z));
}

}  // namespace ltft
