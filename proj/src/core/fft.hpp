// Unitary DFT/IDFT backed by FFTW.

#pragma once

#include <span>
#include <vector>

#include "core/signal.hpp"

namespace ltft {

/// Forward DFT with 1/sqrt(M) normalization. Bin k holds frequency k*rate/M
/// for k <= M/2 and (k-M)*rate/M above.
std::vector<cplx> dft(std::span<const cplx> x);

/// Inverse of dft (also 1/sqrt(M) normalized).
std::vector<cplx> idft(std::span<const cplx> x);

std::vector<cplx> dft(const DiscreteSignal& s);

/// Frequency in Hz of DFT bin k for a length-m transform at the given rate.
double bin_frequency(std::size_t k, std::size_t m, double rate);

}  // namespace ltft
