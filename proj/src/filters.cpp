#include "mathieu/filters.hpp"

#include "mathieu/error.hpp"
#include "mathieu/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mathieu {

namespace {

constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
using std::numbers::pi;

double checked_ce0(const CoefficientVector& coeffs) {
  const double ce0 = coeffs.sum();
  if (!(std::abs(ce0) >= kDegenerateCe0)) {
    throw Error(ErrorKind::degenerate_normalization,
                "ce(0, q) vanishes for nu=" + std::to_string(coeffs.pair.nu));
  }
  return ce0;
}

void check_threshold(double threshold) {
  if (!(threshold > 0.0) || !std::isfinite(threshold)) {
    throw Error(ErrorKind::parameter, "threshold must be positive and finite");
  }
}

// Keeps |t_l| >= threshold on the minimal covering interval; returns the
// discarded magnitude.
double truncate(std::ptrdiff_t first, std::vector<double> full, double threshold,
                TapSequence& out) {
  std::ptrdiff_t lo = -1;
  std::ptrdiff_t hi = -1;
  double discarded = 0.0;
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (std::abs(full[i]) >= threshold) {
      if (lo < 0) lo = static_cast<std::ptrdiff_t>(i);
      hi = static_cast<std::ptrdiff_t>(i);
    } else {
      discarded += std::abs(full[i]);
      full[i] = 0.0;
    }
  }
  if (lo < 0) {
    throw Error(ErrorKind::parameter, "threshold discards every filter tap");
  }
  out.first = first + lo;
  out.taps.assign(full.begin() + lo, full.begin() + hi + 1);
  return discarded;
}

double smoothing_tap(const CoefficientVector& coeffs, double ce0, std::ptrdiff_t l) {
  const auto m = static_cast<int>(std::abs(2 * l - coeffs.pair.nu));
  return -inv_sqrt2 * coeffs.harmonic(m) / ce0;
}

double detail_tap(const CoefficientVector& coeffs, double ce0, std::ptrdiff_t l) {
  const auto m = static_cast<int>(std::abs(2 * l + coeffs.pair.nu - 2));
  const double sign = l % 2 == 0 ? 1.0 : -1.0;
  return sign * inv_sqrt2 * coeffs.harmonic(m) / ce0;
}

struct Truncated {
  TapSequence taps;
  double discarded;
};

Truncated build_smoothing(const CoefficientVector& coeffs, double threshold) {
  check_threshold(threshold);
  const double ce0 = checked_ce0(coeffs);
  const auto length = static_cast<std::ptrdiff_t>(coeffs.size());
  const std::ptrdiff_t nu = coeffs.pair.nu;
  // |2l - nu| <= 2L - 1
  const std::ptrdiff_t lo = (nu + 1) / 2 - length;
  const std::ptrdiff_t hi = (nu - 1) / 2 + length;
  std::vector<double> full;
  full.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::ptrdiff_t l = lo; l <= hi; ++l) full.push_back(smoothing_tap(coeffs, ce0, l));
  Truncated out;
  out.discarded = truncate(lo, std::move(full), threshold, out.taps);
  return out;
}

Truncated build_detail(const CoefficientVector& coeffs, double threshold) {
  check_threshold(threshold);
  const double ce0 = checked_ce0(coeffs);
  const auto length = static_cast<std::ptrdiff_t>(coeffs.size());
  const std::ptrdiff_t nu = coeffs.pair.nu;
  // |2l + nu - 2| <= 2L - 1
  const std::ptrdiff_t lo = (3 - nu) / 2 - length;
  const std::ptrdiff_t hi = (1 - nu) / 2 + length;
  std::vector<double> full;
  full.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::ptrdiff_t l = lo; l <= hi; ++l) full.push_back(detail_tap(coeffs, ce0, l));
  Truncated out;
  out.discarded = truncate(lo, std::move(full), threshold, out.taps);
  return out;
}

void require_cosine(const CoefficientVector& coeffs) {
  if (coeffs.parity != Parity::even_cosine) {
    throw Error(ErrorKind::parity, "Mathieu filters are built from even-cosine coefficients");
  }
}

} // namespace

std::size_t TapSequence::retained() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(taps.begin(), taps.end(), [](double t) { return t != 0.0; }));
}

double TapSequence::sum() const noexcept {
  double s = 0.0;
  for (double t : taps) s += t;
  return s;
}

double TapSequence::alternating_sum() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < taps.size(); ++i) {
    const std::ptrdiff_t l = first + static_cast<std::ptrdiff_t>(i);
    s += (l % 2 == 0 ? 1.0 : -1.0) * taps[i];
  }
  return s;
}

MathieuTransfer::MathieuTransfer(CoefficientVector even_coefficients)
    : coefficients_(std::move(even_coefficients)), ce0_(0.0) {
  require_cosine(coefficients_);
  ce0_ = checked_ce0(coefficients_);
}

SpectrumSample MathieuTransfer::H(double w) const {
  const double nu = coefficients_.pair.nu;
  const double ratio = eval(coefficients_, 0.5 * w) / ce0_;
  return {w, -std::polar(1.0, 0.5 * nu * w) * ratio};
}

SpectrumSample MathieuTransfer::G(double w) const {
  const double nu = coefficients_.pair.nu;
  const double z = 0.5 * (w - pi);
  const double ratio = eval(coefficients_, z) / ce0_;
  return {w, -std::polar(1.0, (nu - 2.0) * z) * ratio};
}

SpectrumSample transfer_H(int nu, double q, double w) {
  return MathieuTransfer(mathieu_coefficients({nu, q}, Parity::even_cosine)).H(w);
}

SpectrumSample transfer_G(int nu, double q, double w) {
  return MathieuTransfer(mathieu_coefficients({nu, q}, Parity::even_cosine)).G(w);
}

CoefficientVector filter_coefficients(int nu, double q, double threshold) {
  check_threshold(threshold);
  const OrderParameterPair pair{nu, q};
  const auto value = characteristic_value(pair, Parity::even_cosine);
  std::size_t length = value.matrix_order;
  for (int attempt = 0; attempt < 12; ++attempt, length *= 2) {
    auto coeffs = fourier_coefficients(pair, value, length);
    const double ce0 = checked_ce0(coeffs);
    if (inv_sqrt2 * std::abs(coeffs.coeffs.back()) / std::abs(ce0) < 1e-3 * threshold) {
      return coeffs;
    }
  }
  throw Error(ErrorKind::truncation, "coefficient series too long for the requested threshold");
}

TapSequence smoothing_coefficients(const CoefficientVector& coeffs, double threshold) {
  require_cosine(coeffs);
  return build_smoothing(coeffs, threshold).taps;
}

TapSequence smoothing_coefficients(int nu, double q, double threshold) {
  return smoothing_coefficients(filter_coefficients(nu, q, threshold), threshold);
}

TapSequence detail_coefficients(const CoefficientVector& coeffs, double threshold) {
  require_cosine(coeffs);
  return build_detail(coeffs, threshold).taps;
}

TapSequence detail_coefficients(int nu, double q, double threshold) {
  return detail_coefficients(filter_coefficients(nu, q, threshold), threshold);
}

FilterBank make_filter_bank(int nu, double q, double threshold, bool positive) {
  FilterBank bank;
  bank.nu = nu;
  bank.q = q;
  bank.threshold = threshold;
  bank.coefficients = filter_coefficients(nu, q, threshold);
  bank.ce0 = checked_ce0(bank.coefficients);
  auto smoothing = build_smoothing(bank.coefficients, threshold);
  bank.h = std::move(smoothing.taps);
  bank.truncation_mass = smoothing.discarded;
  bank.g = build_detail(bank.coefficients, threshold).taps;
  return positive ? positive_normalization(bank) : bank;
}

FilterBank positive_normalization(const FilterBank& bank) {
  FilterBank out = bank;
  out.positive = true;
  if (out.h.sum() < 0.0) {
    for (double& t : out.h.taps) t = -t;
  }
  out.g.first = 1 - out.h.last();
  out.g.taps.resize(out.h.taps.size());
  for (std::size_t i = 0; i < out.g.taps.size(); ++i) {
    const std::ptrdiff_t l = out.g.first + static_cast<std::ptrdiff_t>(i);
    out.g.taps[i] = (l % 2 == 0 ? 1.0 : -1.0) * out.h.at(1 - l);
  }
  return out;
}

std::complex<double> bank_response(const TapSequence& taps, double w) noexcept {
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < taps.taps.size(); ++i) {
    const double k = static_cast<double>(taps.first + static_cast<std::ptrdiff_t>(i));
    sum += taps.taps[i] * std::polar(1.0, -w * k);
  }
  return inv_sqrt2 * sum;
}

double qmf_deviation(const FilterBank& bank, std::size_t n_grid) {
  if (n_grid < 64) throw Error(ErrorKind::parameter, "qmf_deviation needs n_grid >= 64");
  require_cosine(bank.coefficients);
  const double ce0 = checked_ce0(bank.coefficients);
  // |H(w)| = |ce(w/2)/ce0|, |H(w+pi)| = |ce(w/2 + pi/2)/ce0|
  const auto grid = periodic_grid(n_grid);
  std::vector<double> half(n_grid);
  std::vector<double> shifted(n_grid);
  for (std::size_t i = 0; i < n_grid; ++i) {
    half[i] = 0.5 * grid[i];
    shifted[i] = 0.5 * (grid[i] + pi);
  }
  std::vector<double> a(n_grid);
  std::vector<double> b(n_grid);
  kernels::parallel::odd_harmonic_series(bank.coefficients.coeffs, half, kernels::Harmonic::cosine,
                                         0, a);
  kernels::parallel::odd_harmonic_series(bank.coefficients.coeffs, shifted,
                                         kernels::Harmonic::cosine, 0, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < n_grid; ++i) {
    const double ha = a[i] / ce0;
    const double hb = b[i] / ce0;
    worst = std::max(worst, std::abs(ha * ha + hb * hb - 1.0));
  }
  return worst;
}

double elliptic_sine_identity_check(int nu, double q, std::size_t n_grid) {
  if (n_grid == 0) throw Error(ErrorKind::parameter, "elliptic_sine_identity_check needs a grid");
  const MathieuTransfer transfer(mathieu_coefficients({nu, q}, Parity::even_cosine));

  // se_nu(z, -q): its recurrence matrix at -q is not covered by the public
  // (q >= 0) solver, so solve it directly.
  const std::size_t length = transfer.coefficients().size();
  const auto matrix = recurrence_matrix(Parity::odd_sine, -q, length);
  const double b = kth_eigenvalue(matrix, dominant_index(nu));
  CoefficientVector sine{Parity::odd_sine, inverse_iteration(matrix, b), {nu, q}, b};

  const double ce0 = std::abs(transfer.ce0());
  double worst = 0.0;
  const auto grid = periodic_grid(n_grid);
  for (double w : grid) {
    const double g = std::abs(transfer.G(w).value);
    const double via_sine = std::abs(eval(sine, 0.5 * w)) / ce0;
    const double via_cosine = std::abs(eval(transfer.coefficients(), 0.5 * (pi - w))) / ce0;
    worst = std::max({worst, std::abs(g - via_sine), std::abs(g - via_cosine)});
  }
  return worst;
}

int count_smoothing_zeros(int nu, double q, std::size_t n_grid) {
  if (n_grid < 2) throw Error(ErrorKind::parameter, "count_smoothing_zeros needs n_grid >= 2");
  const auto coeffs = mathieu_coefficients({nu, q}, Parity::even_cosine);
  const double step = 2.0 * pi / static_cast<double>(n_grid);
  std::vector<double> half(n_grid + 1);
  for (std::size_t i = 0; i <= n_grid; ++i) {
    half[i] = 0.5 * (-pi + (static_cast<double>(i) + 0.5) * step);
  }
  std::vector<double> values(half.size());
  kernels::parallel::odd_harmonic_series(coeffs.coeffs, half, kernels::Harmonic::cosine, 0, values);
  int changes = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (std::signbit(values[i]) != std::signbit(values[i - 1])) ++changes;
  }
  return changes;
}

} // namespace mathieu
