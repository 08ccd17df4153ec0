// Discrete complex signals, windows and L2 inner products.

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ltft {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// e^{2*pi*i*cycles}
inline cplx unit_phasor(double cycles) {
    return {std::cos(kTwoPi * cycles), std::sin(kTwoPi * cycles)};
}

/// Uniform sampling grid: sample n lives at t0 + n/rate.
struct TimeGrid {
    double t0 = 0.0;
    double rate = 1.0;
    std::size_t length = 0;

    double time_at(std::ptrdiff_t n) const { return t0 + static_cast<double>(n) / rate; }
    double duration() const { return static_cast<double>(length) / rate; }
};

/// Uniformly sampled complex time signal. The (1/rate)-weighted sums below
/// approximate the corresponding L2(R) quantities.
struct DiscreteSignal {
    std::vector<cplx> samples;
    double rate = 1.0;
    double t0 = 0.0;

    DiscreteSignal() = default;
    DiscreteSignal(std::vector<cplx> data, double sample_rate, double start = 0.0);
    static DiscreteSignal zeros(const TimeGrid& grid);

    std::size_t size() const { return samples.size(); }
    TimeGrid grid() const { return {t0, rate, samples.size()}; }

    /// (1/rate) * sum |s_n|^2
    double energy() const;
    double norm() const;

    double max_abs() const;
    bool is_real(double tol = 0.0) const;
};

/// ||s - q|| / ||s|| over the aligned union grid.
double relative_error(const DiscreteSignal& reference, const DiscreteSignal& candidate);

/// (1/rate) * sum s_n * conj(q_n) over the aligned union grid (zero extension
/// outside each signal's support). Rates must match, grids must be aligned to
/// a common lattice.
cplx inner_product(const DiscreteSignal& s, const DiscreteSignal& q);

/// Hann window (1 + cos(2*pi*t))/2 on [-1/2, 1/2], zero outside.
double hann(double t);

/// Fourier transform of the Hann window, hat{h}(z) = int h(t) e^{-2*pi*i*z*t} dt.
/// Closed form sinc(z)/2 + (sinc(z-1) + sinc(z+1))/4.
double hann_hat(double z);

/// Non-negative window supported in [-1/2, 1/2] with precomputed norms and
/// frequency-domain evaluation. Custom windows tabulate hat{h} by quadrature;
/// the Hann window uses its closed form.
class Window {
public:
    static Window make_hann();
    static Window from_function(std::string name, std::function<double(double)> h,
                                int quad_points = 4096);

    double operator()(double t) const { return eval_(t); }
    bool is_hann() const { return hann_; }
    const std::string& name() const { return name_; }

    double l1() const { return l1_; }    // int h
    double l2sq() const { return l2sq_; }  // int h^2

    /// hat{h}(z); real for even windows, imaginary part kept for generality.
    cplx freq(double z) const;
    double freq_abs2(double z) const;

    /// Smallest U such that |hat{h}(u)|^2 < 1e-12 * peak for all |u| >= U.
    double freq_cutoff() const { return cutoff_; }

private:
    Window() = default;
    void tabulate_freq(int quad_points);

    std::function<double(double)> eval_;
    std::string name_;
    bool hann_ = false;
    double l1_ = 0.0;
    double l2sq_ = 0.0;
    double cutoff_ = 0.0;
    // |u| grid table for custom windows, step du_
    std::vector<cplx> freq_table_;
    double du_ = 0.0;
};

}  // namespace ltft
