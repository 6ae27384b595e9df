#include "mathieu/kernels.hpp"

namespace mathieu::kernels::serial {

void odd_harmonic_series(std::span<const double> coeffs, std::span<const double> grid,
                         Harmonic kind, int derivative, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = detail::odd_harmonic_point(coeffs, grid[i], kind, derivative);
  }
}

std::vector<double> upsample_convolve(std::span<const double> signal,
                                      std::span<const double> filter) {
  if (signal.empty() || filter.empty()) return {};
  const auto n = static_cast<std::ptrdiff_t>(2 * signal.size() + filter.size() - 2);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (std::ptrdiff_t e = 0; e < n; ++e) {
    out[e] = detail::upsample_convolve_point(signal, filter, e);
  }
  return out;
}

void periodic_analysis(std::span<const double> x, std::span<const double> taps,
                       std::ptrdiff_t first, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    out[k] = detail::periodic_analysis_point(x, taps, first, k);
  }
}

void periodic_synthesis_add(std::span<const double> coarse, std::span<const double> taps,
                            std::ptrdiff_t first, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] += detail::periodic_synthesis_point(coarse, taps, first, i);
  }
}

} // namespace mathieu::kernels::serial
