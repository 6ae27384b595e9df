#pragma once

// Cascade rendering of the scaling function and wavelet of a FIR bank.
//
// phi_J is the J-fold refinement of the unit box on [0, 1):
//   phi_{j+1}(t) = sqrt2 sum_n h_n phi_j(2t - n)
// and psi_J(t) = sqrt2 sum_l g_l phi_{J-1}(2t - l).  In generating-function
// form phi_J <-> prod_{i<J} H(z^{2^i}) and psi_J <-> G(z^{2^{J-1}}) prod_{i<J-1} H(z^{2^i}),
// so both are computed by repeated upsample-convolve.  Both are piecewise
// constant on intervals of width 2^-J; sample k holds the value on
// [origin + k 2^-J, origin + (k+1) 2^-J).

#include "mathieu/filters.hpp"

#include <cstddef>
#include <vector>

namespace mathieu {

inline constexpr int kMaxCascadeIterations = 24;
inline constexpr double kDivergenceBound = 1e6;

struct SampledSignal {
  double origin = 0.0;
  double step = 1.0;
  int iterations = 0;
  std::vector<double> samples;

  double abscissa(std::size_t k) const noexcept { return origin + step * static_cast<double>(k); }
  /// sum samples * step
  double integral() const noexcept;
  /// sum samples^2 * step
  double energy() const noexcept;
  double sup_norm() const noexcept;
};

/// Banks with a negative h sum are converted by positive_normalization first.
SampledSignal cascade_scaling(const FilterBank& bank, int iterations);
SampledSignal cascade_wavelet(const FilterBank& bank, int iterations);

/// Sup-norm distance between `coarse` and `fine` at the abscissae of
/// `coarse`; fine must have half the step and the same origin.
double refinement_distance(const SampledSignal& coarse, const SampledSignal& fine);

/// Every second sample of `fine` starting at its origin.
SampledSignal downsample(const SampledSignal& fine);

} // namespace mathieu
