#include "mathieu/mathieu.hpp"

#include "mathieu/error.hpp"
#include "mathieu/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mathieu {

const char* to_string(Parity parity) noexcept {
  return parity == Parity::even_cosine ? "even-cosine" : "odd-sine";
}

void validate(const OrderParameterPair& pair) {
  if (pair.nu < 1 || pair.nu % 2 == 0) {
    throw Error(ErrorKind::invalid_order,
                "order nu must be a positive odd integer, got " + std::to_string(pair.nu));
  }
  if (!std::isfinite(pair.q) || pair.q < 0.0) {
    throw Error(ErrorKind::parameter, "parameter q must be finite and non-negative");
  }
}

double CoefficientVector::harmonic(int m) const noexcept {
  if (m < 1 || m % 2 == 0) return 0.0;
  const auto l = static_cast<std::size_t>((m - 1) / 2);
  return l < coeffs.size() ? coeffs[l] : 0.0;
}

double CoefficientVector::max_abs() const noexcept {
  double r = 0.0;
  for (double c : coeffs) r = std::max(r, std::abs(c));
  return r;
}

double CoefficientVector::abs_sum() const noexcept {
  double r = 0.0;
  for (double c : coeffs) r += std::abs(c);
  return r;
}

double CoefficientVector::sum() const noexcept {
  double r = 0.0;
  for (double c : coeffs) r += c;
  return r;
}

std::size_t default_matrix_order(const OrderParameterPair& pair) {
  const auto from_q = static_cast<std::size_t>(std::ceil(2.0 * pair.q));
  return std::max<std::size_t>(25, static_cast<std::size_t>((pair.nu + 1) / 2) + from_q + 15);
}

SymmetricTridiagonal recurrence_matrix(Parity parity, double q, std::size_t order) {
  SymmetricTridiagonal m;
  m.diagonal.resize(order);
  m.off_diagonal.assign(order > 0 ? order - 1 : 0, q);
  for (std::size_t l = 0; l < order; ++l) {
    const double h = static_cast<double>(2 * l + 1);
    m.diagonal[l] = h * h;
  }
  if (order > 0) m.diagonal[0] += parity == Parity::even_cosine ? q : -q;
  return m;
}

CharacteristicValue characteristic_value(const OrderParameterPair& pair, Parity kind,
                                         const SolverOptions& options) {
  validate(pair);
  const std::size_t k = dominant_index(pair.nu);
  const std::size_t minimum = k + 1 + 8;
  std::size_t n = options.matrix_order == 0 ? default_matrix_order(pair) : options.matrix_order;
  if (n < minimum) {
    throw Error(ErrorKind::parameter, "matrix order " + std::to_string(n) +
                                          " below the minimum " + std::to_string(minimum));
  }

  double last_delta = 0.0;
  for (int attempt = 0; attempt <= options.max_doublings; ++attempt, n *= 2) {
    const double a = kth_eigenvalue(recurrence_matrix(kind, pair.q, n), k);
    const double a_wider = kth_eigenvalue(recurrence_matrix(kind, pair.q, n + 10), k);
    last_delta = std::abs(a - a_wider);
    if (last_delta <= kStabilityTolerance * std::max(1.0, std::abs(a))) {
      return CharacteristicValue{a, pair, kind, n, last_delta};
    }
  }
  throw Error(ErrorKind::convergence,
              "characteristic value did not stabilize (last |a(N) - a(N+10)| = " +
                  std::to_string(last_delta) + ")");
}

CoefficientVector fourier_coefficients(const OrderParameterPair& pair,
                                       const CharacteristicValue& value, std::size_t length) {
  validate(pair);
  if (!(value.pair == pair)) {
    throw Error(ErrorKind::parameter, "characteristic value belongs to a different (nu, q)");
  }
  const std::size_t k = dominant_index(pair.nu);
  if (length == 0) length = value.matrix_order;
  if (length <= k) {
    throw Error(ErrorKind::truncation, "length " + std::to_string(length) +
                                           " cannot hold harmonic " + std::to_string(pair.nu) +
                                           "; try length " + std::to_string(2 * (k + 1) + 8));
  }

  const auto matrix = recurrence_matrix(value.kind, pair.q, length);
  std::vector<double> x = inverse_iteration(matrix, value.a);

  std::size_t sign_index = k;
  if (x[sign_index] == 0.0) {
    sign_index = static_cast<std::size_t>(
        std::find_if(x.begin(), x.end(), [](double v) { return v != 0.0; }) - x.begin());
  }
  if (x[sign_index] < 0.0) {
    for (double& v : x) v = -v;
  }

  CoefficientVector out{value.kind, std::move(x), pair, value.a};
  const double scale = out.max_abs();
  if (std::abs(out.coeffs.back()) >= kTailTolerance * scale) {
    throw Error(ErrorKind::truncation,
                "coefficient tail has not decayed at length " + std::to_string(length) +
                    "; try length " + std::to_string(2 * length));
  }
  if (recurrence_residual(out) >= kRecurrenceTolerance * scale) {
    throw Error(ErrorKind::convergence, "recurrence residual above tolerance");
  }
  return out;
}

CoefficientVector mathieu_coefficients(const OrderParameterPair& pair, Parity kind,
                                       const SolverOptions& options) {
  return fourier_coefficients(pair, characteristic_value(pair, kind, options));
}

double eval(const CoefficientVector& coeffs, double w) noexcept {
  const auto harmonic = coeffs.parity == Parity::even_cosine ? kernels::Harmonic::cosine
                                                             : kernels::Harmonic::sine;
  return kernels::detail::odd_harmonic_point(coeffs.coeffs, w, harmonic, 0);
}

double eval_second_derivative(const CoefficientVector& coeffs, double w) noexcept {
  const auto harmonic = coeffs.parity == Parity::even_cosine ? kernels::Harmonic::cosine
                                                             : kernels::Harmonic::sine;
  return kernels::detail::odd_harmonic_point(coeffs.coeffs, w, harmonic, 2);
}

double eval_ce(const CoefficientVector& coeffs, double w) {
  if (coeffs.parity != Parity::even_cosine) {
    throw Error(ErrorKind::parity, "eval_ce needs even-cosine coefficients");
  }
  return eval(coeffs, w);
}

double eval_se(const CoefficientVector& coeffs, double w) {
  if (coeffs.parity != Parity::odd_sine) {
    throw Error(ErrorKind::parity, "eval_se needs odd-sine coefficients");
  }
  return eval(coeffs, w);
}

double recurrence_residual(const CoefficientVector& cv) noexcept {
  const auto& c = cv.coeffs;
  const std::size_t n = c.size();
  if (n == 0) return 0.0;
  const double q = cv.pair.q;
  const double lead_shift = cv.parity == Parity::even_cosine ? q : -q;
  double worst = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    const double m = static_cast<double>(2 * l + 1);
    const double next = l + 1 < n ? c[l + 1] : 0.0;
    double r;
    if (l == 0) {
      r = (cv.a - 1.0 - lead_shift) * c[0] - q * next;
    } else {
      r = (cv.a - m * m) * c[l] - q * (c[l - 1] + next);
    }
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double ode_residual(const CoefficientVector& coeffs, double a, double q,
                    std::span<const double> grid) {
  if (grid.empty()) throw Error(ErrorKind::parameter, "ode_residual needs a non-empty grid");
  const auto harmonic = coeffs.parity == Parity::even_cosine ? kernels::Harmonic::cosine
                                                             : kernels::Harmonic::sine;
  std::vector<double> y(grid.size());
  std::vector<double> y2(grid.size());
  kernels::parallel::odd_harmonic_series(coeffs.coeffs, grid, harmonic, 0, y);
  kernels::parallel::odd_harmonic_series(coeffs.coeffs, grid, harmonic, 2, y2);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    worst = std::max(worst, std::abs(y2[i] + (a - 2.0 * q * std::cos(2.0 * grid[i])) * y[i]));
  }
  return worst;
}

std::vector<double> periodic_grid(std::size_t n) {
  std::vector<double> grid(n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = step * static_cast<double>(i);
  return grid;
}

double orthogonality_integral(const CoefficientVector& f, const CoefficientVector& g,
                              std::size_t n_quad) {
  if (f.pair.q != g.pair.q) {
    throw Error(ErrorKind::parameter, "orthogonality_integral needs vectors sharing q");
  }
  const std::size_t needed = 4 * std::max(f.size(), g.size());
  if (n_quad < needed) {
    throw Error(ErrorKind::parameter, "n_quad must be at least " + std::to_string(needed));
  }
  const auto grid = periodic_grid(n_quad);
  auto harmonic = [](const CoefficientVector& v) {
    return v.parity == Parity::even_cosine ? kernels::Harmonic::cosine : kernels::Harmonic::sine;
  };
  std::vector<double> fv(n_quad);
  std::vector<double> gv(n_quad);
  kernels::parallel::odd_harmonic_series(f.coeffs, grid, harmonic(f), 0, fv);
  kernels::parallel::odd_harmonic_series(g.coeffs, grid, harmonic(g), 0, gv);
  double sum = 0.0;
  for (std::size_t i = 0; i < n_quad; ++i) sum += fv[i] * gv[i];
  return sum * 2.0 * std::numbers::pi / static_cast<double>(n_quad);
}

} // namespace mathieu
