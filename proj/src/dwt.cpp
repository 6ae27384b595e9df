#include "mathieu/dwt.hpp"

#include "mathieu/error.hpp"
#include "mathieu/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mathieu {

namespace {

FilterBank positive(const FilterBank& bank) {
  return bank.positive && bank.h.sum() > 0.0 ? bank : positive_normalization(bank);
}

double squared_norm(std::span<const double> v) noexcept {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

} // namespace

double CoefficientPyramid::energy() const noexcept {
  double e = squared_norm(approx);
  for (const auto& d : detail) e += squared_norm(d);
  return e;
}

CoefficientPyramid analyze(std::span<const double> signal, const FilterBank& bank, int levels) {
  if (levels < 1) throw Error(ErrorKind::parameter, "analyze needs at least one level");
  const std::size_t n = signal.size();
  const std::size_t block = std::size_t{1} << levels;
  if (n == 0 || n % block != 0) {
    throw Error(ErrorKind::shape, "signal length " + std::to_string(n) +
                                      " not divisible by 2^" + std::to_string(levels));
  }
  const FilterBank pos = positive(bank);
  const auto width = static_cast<std::size_t>(pos.width());
  if (n < 2 * width) {
    throw Error(ErrorKind::shape, "signal length " + std::to_string(n) +
                                      " shorter than twice the bank width " +
                                      std::to_string(width));
  }

  CoefficientPyramid out;
  out.levels = levels;
  std::vector<double> current(signal.begin(), signal.end());
  for (int level = 0; level < levels; ++level) {
    std::vector<double> approx(current.size() / 2);
    std::vector<double> detail(current.size() / 2);
    kernels::parallel::periodic_analysis(current, pos.h.taps, pos.h.first, approx);
    kernels::parallel::periodic_analysis(current, pos.g.taps, pos.g.first, detail);
    out.detail.push_back(std::move(detail));
    current = std::move(approx);
  }
  out.approx = std::move(current);
  return out;
}

std::vector<double> synthesize(const CoefficientPyramid& pyramid, const FilterBank& bank) {
  if (pyramid.levels < 1 || pyramid.detail.size() != static_cast<std::size_t>(pyramid.levels)) {
    throw Error(ErrorKind::shape, "pyramid level count does not match its detail list");
  }
  const FilterBank pos = positive(bank);
  std::vector<double> current = pyramid.approx;
  for (int level = pyramid.levels - 1; level >= 0; --level) {
    const auto& detail = pyramid.detail[static_cast<std::size_t>(level)];
    if (detail.size() != current.size()) {
      throw Error(ErrorKind::shape, "detail length mismatch at level " + std::to_string(level));
    }
    std::vector<double> finer(2 * current.size(), 0.0);
    kernels::parallel::periodic_synthesis_add(current, pos.h.taps, pos.h.first, finer);
    kernels::parallel::periodic_synthesis_add(detail, pos.g.taps, pos.g.first, finer);
    current = std::move(finer);
  }
  return current;
}

std::vector<double> random_unit_vector(Lcg64& rng, std::size_t length) {
  std::vector<double> x(length);
  for (double& v : x) v = rng.uniform();
  const double norm = std::sqrt(squared_norm(x));
  for (double& v : x) v /= norm;
  return x;
}

double round_trip_error(const FilterBank& bank, std::size_t length, int levels, int trials,
                        std::uint64_t seed) {
  if (trials < 10) throw Error(ErrorKind::parameter, "round_trip_error needs at least 10 trials");
  Lcg64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto x = random_unit_vector(rng, length);
    const auto y = synthesize(analyze(x, bank, levels), bank);
    double err = 0.0;
    for (std::size_t i = 0; i < length; ++i) err += (y[i] - x[i]) * (y[i] - x[i]);
    worst = std::max(worst, std::sqrt(err));
  }
  return worst;
}

} // namespace mathieu
