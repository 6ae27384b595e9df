#pragma once

// Smoothing (H) and detail (G) filters of the Mathieu multiresolution
// analysis, as closed-form transfer functions and as truncated FIR banks.
//
//   H(w) = -exp(j nu w/2)            ce(w/2, q) / ce(0, q)
//   G(w) = -exp(j (nu-2)(w-pi)/2)    ce((w-pi)/2, q) / ce(0, q)
//
//   h_l =  -sqrt2 A_{|2l-nu|}   / (2 ce(0,q))
//   g_l = (-1)^l sqrt2 A_{|2l+nu-2|} / (2 ce(0,q))
//
// With bank_response(t, w) = (1/sqrt2) sum_k t_k exp(-j w k), the banks
// above satisfy bank_response(h, w) = conj(H(w)) and
// bank_response(g, w) = -G(w); magnitudes agree exactly.
//
// Default-sign banks have (1/sqrt2) sum h = -1.  The positive-normalization
// variant negates h and rebuilds g by g_l = (-1)^l h_{1-l}, which leaves g
// unchanged.

#include "mathieu/mathieu.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace mathieu {

inline constexpr double kDefaultThreshold = 1e-10;
inline constexpr std::size_t kDefaultGrid = 1024;
inline constexpr double kDegenerateCe0 = 1e-12;

/// Contiguous integer-indexed filter taps; index `first` maps to taps[0].
/// Sub-threshold entries inside the range are stored as zero.
struct TapSequence {
  std::ptrdiff_t first = 0;
  std::vector<double> taps;

  std::ptrdiff_t last() const noexcept {
    return first + static_cast<std::ptrdiff_t>(taps.size()) - 1;
  }
  double at(std::ptrdiff_t l) const noexcept {
    const std::ptrdiff_t i = l - first;
    return i >= 0 && i < static_cast<std::ptrdiff_t>(taps.size()) ? taps[static_cast<std::size_t>(i)] : 0.0;
  }
  std::size_t retained() const noexcept;
  double sum() const noexcept;
  double alternating_sum() const noexcept; ///< sum (-1)^l t_l

  bool operator==(const TapSequence&) const = default;
};

struct FilterBank {
  int nu = 1;
  double q = 0.0;
  double threshold = kDefaultThreshold;
  double ce0 = 1.0;
  bool positive = false;
  TapSequence h;
  TapSequence g;
  /// Sum of |h_l| over discarded taps.
  double truncation_mass = 0.0;
  CoefficientVector coefficients;

  std::ptrdiff_t width() const noexcept { return h.last() - h.first + 1; }
};

struct SpectrumSample {
  double w = 0.0;
  std::complex<double> value;
};

/// Closed-form H and G for one (nu, q); cheap to copy, immutable.
class MathieuTransfer {
public:
  explicit MathieuTransfer(CoefficientVector even_coefficients);

  SpectrumSample H(double w) const;
  SpectrumSample G(double w) const;
  double ce0() const noexcept { return ce0_; }
  int nu() const noexcept { return coefficients_.pair.nu; }
  const CoefficientVector& coefficients() const noexcept { return coefficients_; }

private:
  CoefficientVector coefficients_;
  double ce0_;
};

SpectrumSample transfer_H(int nu, double q, double w);
SpectrumSample transfer_G(int nu, double q, double w);

/// Cosine-family coefficients long enough that every tap past the stored
/// length is far below `threshold`.
CoefficientVector filter_coefficients(int nu, double q, double threshold);

TapSequence smoothing_coefficients(const CoefficientVector& coeffs, double threshold);
TapSequence smoothing_coefficients(int nu, double q, double threshold = kDefaultThreshold);
TapSequence detail_coefficients(const CoefficientVector& coeffs, double threshold);
TapSequence detail_coefficients(int nu, double q, double threshold = kDefaultThreshold);

FilterBank make_filter_bank(int nu, double q, double threshold = kDefaultThreshold,
                            bool positive = false);

/// Negates h when it sums to -sqrt2 and rebuilds g from the QMF sign rule.
FilterBank positive_normalization(const FilterBank& bank);

/// (1/sqrt2) sum_k t_k exp(-j w k)
std::complex<double> bank_response(const TapSequence& taps, double w) noexcept;

/// max over an n_grid-point grid on [0, 2pi) of ||H(w)|^2 + |H(w+pi)|^2 - 1|,
/// H from the closed form.
double qmf_deviation(const FilterBank& bank, std::size_t n_grid = kDefaultGrid);

/// Largest grid deviation between |G(w)| and the elliptic sine modulus
/// |se_nu(w/2, -q)| / |ce(0,q)|, the sine computed from its own recurrence at
/// -q, and between |G(w)| and |ce((pi-w)/2, q)| / |ce(0,q)|.
double elliptic_sine_identity_check(int nu, double q, std::size_t n_grid = kDefaultGrid);

/// Sign changes of ce(w/2, q) across one period of w, sampled on n_grid
/// midpoints of (-pi, pi] plus one point past pi.  Equals the number of
/// zeros of |H| per period.
int count_smoothing_zeros(int nu, double q, std::size_t n_grid = 4096);

} // namespace mathieu
