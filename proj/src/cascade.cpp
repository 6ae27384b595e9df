#include "mathieu/cascade.hpp"

#include "mathieu/error.hpp"
#include "mathieu/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mathieu {

namespace {

void check_iterations(int iterations) {
  if (iterations < 1) {
    throw Error(ErrorKind::parameter, "cascade needs at least one iteration");
  }
  if (iterations > kMaxCascadeIterations) {
    throw Error(ErrorKind::resource_limit,
                "cascade limited to " + std::to_string(kMaxCascadeIterations) + " iterations");
  }
}

void check_bounded(const std::vector<double>& values, int iteration) {
  for (double v : values) {
    if (!(std::abs(v) <= kDivergenceBound)) {
      throw Error(ErrorKind::divergence,
                  "cascade diverged at iteration " + std::to_string(iteration));
    }
  }
}

std::vector<double> scaled(const std::vector<double>& taps) {
  std::vector<double> out(taps);
  for (double& t : out) t *= std::numbers::sqrt2;
  return out;
}

// Refinement coefficients after `iterations` rounds, exponent offset
// first * (2^J - 1).  Entry e covers [(e + offset) 2^-J, (e + offset + 1) 2^-J).
std::vector<double> refine(const std::vector<double>& filter, int iterations) {
  std::vector<double> c{1.0};
  for (int j = 1; j <= iterations; ++j) {
    c = kernels::parallel::upsample_convolve(c, filter);
    check_bounded(c, j);
  }
  return c;
}

SampledSignal place(std::vector<double> values, std::ptrdiff_t exponent_offset,
                    double origin, std::size_t length, int iterations) {
  SampledSignal out;
  out.iterations = iterations;
  out.step = std::ldexp(1.0, -iterations);
  out.origin = origin;
  out.samples.assign(length, 0.0);
  const auto origin_exponent = static_cast<std::ptrdiff_t>(std::ldexp(origin, iterations));
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::ptrdiff_t k = exponent_offset + static_cast<std::ptrdiff_t>(i) - origin_exponent;
    if (k >= 0 && k < static_cast<std::ptrdiff_t>(length)) {
      out.samples[static_cast<std::size_t>(k)] = values[i];
    }
  }
  return out;
}

} // namespace

double SampledSignal::integral() const noexcept {
  double s = 0.0;
  for (double v : samples) s += v;
  return s * step;
}

double SampledSignal::energy() const noexcept {
  double s = 0.0;
  for (double v : samples) s += v * v;
  return s * step;
}

double SampledSignal::sup_norm() const noexcept {
  double s = 0.0;
  for (double v : samples) s = std::max(s, std::abs(v));
  return s;
}

SampledSignal cascade_scaling(const FilterBank& bank, int iterations) {
  check_iterations(iterations);
  const FilterBank pos = bank.h.sum() < 0.0 ? positive_normalization(bank) : bank;
  const auto c = refine(scaled(pos.h.taps), iterations);
  const std::ptrdiff_t scale = std::ptrdiff_t{1} << iterations;
  const std::ptrdiff_t support = pos.h.last() - pos.h.first;
  return place(c, pos.h.first * (scale - 1), static_cast<double>(pos.h.first),
               static_cast<std::size_t>(support * scale + 1), iterations);
}

SampledSignal cascade_wavelet(const FilterBank& bank, int iterations) {
  check_iterations(iterations);
  const FilterBank pos = positive_normalization(bank);
  // G(z^{2^{J-1}}) prod_{i<J-1} H(z^{2^i}): seed with g, refine J-1 times with h.
  const auto h = scaled(pos.h.taps);
  std::vector<double> psi = scaled(pos.g.taps);
  for (int j = 2; j <= iterations; ++j) {
    psi = kernels::parallel::upsample_convolve(psi, h);
    check_bounded(psi, j);
  }

  const std::ptrdiff_t half_scale = std::ptrdiff_t{1} << (iterations - 1);
  const std::ptrdiff_t offset = pos.g.first * half_scale + pos.h.first * (half_scale - 1);
  const double origin = 0.5 * static_cast<double>(pos.h.first + pos.g.first);
  const std::ptrdiff_t support = pos.h.last() - pos.h.first;
  return place(std::move(psi), offset, origin,
               static_cast<std::size_t>(support * 2 * half_scale + 1), iterations);
}

SampledSignal downsample(const SampledSignal& fine) {
  SampledSignal out;
  out.origin = fine.origin;
  out.step = 2.0 * fine.step;
  out.iterations = fine.iterations - 1;
  for (std::size_t k = 0; k < fine.samples.size(); k += 2) out.samples.push_back(fine.samples[k]);
  return out;
}

double refinement_distance(const SampledSignal& coarse, const SampledSignal& fine) {
  if (coarse.origin != fine.origin || coarse.step != 2.0 * fine.step) {
    throw Error(ErrorKind::shape, "refinement_distance needs nested grids with a shared origin");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < coarse.samples.size(); ++k) {
    const double f = 2 * k < fine.samples.size() ? fine.samples[2 * k] : 0.0;
    worst = std::max(worst, std::abs(coarse.samples[k] - f));
  }
  return worst;
}

} // namespace mathieu
