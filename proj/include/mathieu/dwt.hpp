#pragma once

// Periodic two-channel discrete wavelet transform driven by a FilterBank.
//
//   approx[k] = sum_n h_n x[(2k + n) mod N]
//   detail[k] = sum_n g_n x[(2k + n) mod N]
//
// Synthesis is the adjoint.  It inverts analysis exactly only when the
// bank is paraunitary (Haar, q = 0); for Mathieu banks with q > 0 the
// round-trip error measures how far the FIR approximation is from an
// orthogonal filter pair.

#include "mathieu/filters.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mathieu {

struct CoefficientPyramid {
  int levels = 0;
  std::vector<std::vector<double>> detail; ///< detail[0] is the finest level
  std::vector<double> approx;

  double energy() const noexcept;
};

/// Banks are used in their positive normalization.
CoefficientPyramid analyze(std::span<const double> signal, const FilterBank& bank, int levels);
std::vector<double> synthesize(const CoefficientPyramid& pyramid, const FilterBank& bank);

/// 64-bit LCG (Knuth's MMIX constants) for reproducible test signals.
class Lcg64 {
public:
  static constexpr std::uint64_t kDefaultSeed = 0x853c49e6748fea9bULL;

  explicit Lcg64(std::uint64_t seed = kDefaultSeed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  /// Uniform on [-1, 1) from the top 53 bits.
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-52 - 1.0;
  }

private:
  std::uint64_t state_;
};

/// Unit-norm vector of uniform entries.
std::vector<double> random_unit_vector(Lcg64& rng, std::size_t length);

/// Max over trials of ||synthesize(analyze(x)) - x|| / ||x|| for unit-norm
/// pseudo-random x; trial t uses the t-th vector drawn from Lcg64(seed).
double round_trip_error(const FilterBank& bank, std::size_t length, int levels, int trials,
                        std::uint64_t seed = Lcg64::kDefaultSeed);

} // namespace mathieu
