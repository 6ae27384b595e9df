#pragma once

// Data-parallel inner loops shared by the higher-level modules.
//
// Every kernel exists twice with identical signatures: `serial` is the
// reference implementation kept for testing, `parallel` distributes the
// outer loop with OpenMP.  Both call the same per-element routines in
// `detail`, so their outputs are bitwise identical; no kernel performs a
// cross-thread floating point reduction.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace mathieu::kernels {

enum class Harmonic { cosine, sine };

namespace detail {

inline std::ptrdiff_t wrap(std::ptrdiff_t i, std::ptrdiff_t n) noexcept {
  const std::ptrdiff_t r = i % n;
  return r < 0 ? r + n : r;
}

/// sum_l c_l * (-(2l+1)^2)^(derivative/2) * trig((2l+1) w), derivative in {0, 2}
inline double odd_harmonic_point(std::span<const double> coeffs, double w, Harmonic kind,
                                 int derivative) noexcept {
  double sum = 0.0;
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    const double m = static_cast<double>(2 * l + 1);
    const double basis = kind == Harmonic::cosine ? std::cos(m * w) : std::sin(m * w);
    const double weight = derivative == 2 ? -m * m : 1.0;
    sum += coeffs[l] * weight * basis;
  }
  return sum;
}

/// Entry e of (upsample-by-2(signal)) * filter.
inline double upsample_convolve_point(std::span<const double> signal,
                                      std::span<const double> filter, std::ptrdiff_t e) noexcept {
  const auto ns = static_cast<std::ptrdiff_t>(signal.size());
  const auto nf = static_cast<std::ptrdiff_t>(filter.size());
  double sum = 0.0;
  // Taps n with (e - n) even and 0 <= (e - n)/2 < ns.
  for (std::ptrdiff_t n = e & 1; n < nf; n += 2) {
    const std::ptrdiff_t k = (e - n) / 2;
    if (k < 0) break;
    if (k < ns) sum += filter[n] * signal[k];
  }
  return sum;
}

/// out[k] = sum_n taps[n] * x[(2k + first + n) mod N]
inline double periodic_analysis_point(std::span<const double> x, std::span<const double> taps,
                                      std::ptrdiff_t first, std::ptrdiff_t k) noexcept {
  const auto n_x = static_cast<std::ptrdiff_t>(x.size());
  double sum = 0.0;
  for (std::size_t n = 0; n < taps.size(); ++n) {
    sum += taps[n] * x[wrap(2 * k + first + static_cast<std::ptrdiff_t>(n), n_x)];
  }
  return sum;
}

/// sum over k with 2k + first + n = i (mod N) of taps[n] * coarse[k]; N = 2 * coarse.size()
inline double periodic_synthesis_point(std::span<const double> coarse,
                                       std::span<const double> taps, std::ptrdiff_t first,
                                       std::ptrdiff_t i) noexcept {
  const auto m = static_cast<std::ptrdiff_t>(coarse.size());
  double sum = 0.0;
  for (std::size_t n = 0; n < taps.size(); ++n) {
    const std::ptrdiff_t offset = i - first - static_cast<std::ptrdiff_t>(n);
    if (offset % 2 != 0) continue;
    sum += taps[n] * coarse[wrap(offset / 2, m)];
  }
  return sum;
}

} // namespace detail

#define MATHIEU_KERNEL_DECLARATIONS                                                            \
  void odd_harmonic_series(std::span<const double> coeffs, std::span<const double> grid,       \
                           Harmonic kind, int derivative, std::span<double> out);              \
  std::vector<double> upsample_convolve(std::span<const double> signal,                        \
                                        std::span<const double> filter);                       \
  void periodic_analysis(std::span<const double> x, std::span<const double> taps,              \
                         std::ptrdiff_t first, std::span<double> out);                         \
  void periodic_synthesis_add(std::span<const double> coarse, std::span<const double> taps,    \
                              std::ptrdiff_t first, std::span<double> out);

namespace serial {
MATHIEU_KERNEL_DECLARATIONS
} // namespace serial

namespace parallel {
MATHIEU_KERNEL_DECLARATIONS
} // namespace parallel

#undef MATHIEU_KERNEL_DECLARATIONS

} // namespace mathieu::kernels
