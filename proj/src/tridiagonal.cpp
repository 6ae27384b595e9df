#include "mathieu/tridiagonal.hpp"

#include "mathieu/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mathieu {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::invalid_order: return "invalid-order";
  case ErrorKind::parameter: return "parameter";
  case ErrorKind::convergence: return "convergence";
  case ErrorKind::truncation: return "truncation";
  case ErrorKind::parity: return "parity";
  case ErrorKind::degenerate_normalization: return "degenerate-normalization";
  case ErrorKind::resource_limit: return "resource-limit";
  case ErrorKind::divergence: return "divergence";
  case ErrorKind::shape: return "shape";
  }
  return "unknown";
}

namespace {

double max_abs_entry(const SymmetricTridiagonal& m) noexcept {
  double norm = 0.0;
  for (double d : m.diagonal) norm = std::max(norm, std::abs(d));
  for (double e : m.off_diagonal) norm = std::max(norm, std::abs(e));
  return norm;
}

} // namespace

std::size_t sturm_count(const SymmetricTridiagonal& m, double x) noexcept {
  const std::size_t n = m.order();
  if (n == 0) return 0;
  // Smallest pivot magnitude allowed before it is nudged off zero.
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, max_abs_entry(m));
  std::size_t count = 0;
  double d = m.diagonal[0] - x;
  if (std::abs(d) < pivmin) d = -pivmin;
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    const double e = m.off_diagonal[i - 1];
    d = (m.diagonal[i] - x) - e * e / d;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++count;
  }
  return count;
}

std::pair<double, double> gerschgorin_bounds(const SymmetricTridiagonal& m) noexcept {
  const std::size_t n = m.order();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(m.off_diagonal[i - 1]);
    if (i + 1 < n) radius += std::abs(m.off_diagonal[i]);
    lo = std::min(lo, m.diagonal[i] - radius);
    hi = std::max(hi, m.diagonal[i] + radius);
  }
  return {lo, hi};
}

double kth_eigenvalue(const SymmetricTridiagonal& m, std::size_t k) {
  if (k >= m.order()) {
    throw Error(ErrorKind::parameter, "eigenvalue index exceeds matrix order");
  }
  auto [lo, hi] = gerschgorin_bounds(m);
  const double span = std::max(1.0, hi - lo);
  lo -= 1e-12 * span;
  hi += 1e-12 * span;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int it = 0; it < 256; ++it) {
    const double width = hi - lo;
    if (width <= 4.0 * eps * std::max(std::abs(lo), std::abs(hi)) ||
        width <= std::numeric_limits<double>::min()) {
      break;
    }
    const double mid = lo + 0.5 * width;
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(m, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

std::vector<double> inverse_iteration(const SymmetricTridiagonal& m, double eigenvalue,
                                      int iterations) {
  const std::size_t n = m.order();
  if (n == 0) throw Error(ErrorKind::parameter, "empty matrix");
  if (n == 1) return {1.0};

  // LU of (T - lambda I) with partial pivoting, same layout as LAPACK dgttrf.
  std::vector<double> dl(m.off_diagonal);
  std::vector<double> d(n);
  std::vector<double> du(m.off_diagonal);
  std::vector<double> du2(n > 2 ? n - 2 : 0, 0.0);
  std::vector<bool> swapped(n - 1, false);
  for (std::size_t i = 0; i < n; ++i) d[i] = m.diagonal[i] - eigenvalue;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] != 0.0) {
        const double fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      }
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = fact;
      const double temp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = temp - fact * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du[i + 1];
      }
      swapped[i] = true;
    }
  }

  // The shifted matrix is singular to working precision; keep U invertible.
  const double tiny = std::numeric_limits<double>::epsilon() * std::max(1.0, max_abs_entry(m));
  for (double& pivot : d) {
    if (std::abs(pivot) < tiny) pivot = std::signbit(pivot) ? -tiny : tiny;
  }

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) {
        const double temp = x[i] - dl[i] * x[i + 1];
        x[i] = x[i + 1];
        x[i + 1] = temp;
      } else {
        x[i + 1] -= dl[i] * x[i];
      }
    }
    x[n - 1] /= d[n - 1];
    x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;) {
      x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
    }

    double scale = 0.0;
    for (double v : x) scale = std::max(scale, std::abs(v));
    for (double& v : x) v /= scale;
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;
  }
  return x;
}

double eigen_residual(const SymmetricTridiagonal& m, double eigenvalue,
                      std::span<const double> x) noexcept {
  const std::size_t n = m.order();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = (m.diagonal[i] - eigenvalue) * x[i];
    if (i > 0) r += m.off_diagonal[i - 1] * x[i - 1];
    if (i + 1 < n) r += m.off_diagonal[i] * x[i + 1];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

} // namespace mathieu
