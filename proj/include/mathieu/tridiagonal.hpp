#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace mathieu {

/// Real symmetric tridiagonal matrix: `diagonal` has n entries,
/// `off_diagonal` has n-1 (entry i couples rows i and i+1).
struct SymmetricTridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;

  std::size_t order() const noexcept { return diagonal.size(); }
};

/// Number of eigenvalues strictly less than x (Sturm sequence count).
std::size_t sturm_count(const SymmetricTridiagonal& m, double x) noexcept;

/// Gerschgorin interval [lo, hi] containing the whole spectrum.
std::pair<double, double> gerschgorin_bounds(const SymmetricTridiagonal& m) noexcept;

/// k-th smallest eigenvalue (k is 0-based) by bisection on the Sturm count.
/// Bisection stops when the bracket is no wider than a few ulps of its
/// endpoints.
double kth_eigenvalue(const SymmetricTridiagonal& m, std::size_t k);

/// Eigenvector for an eigenvalue estimate by inverse iteration with a
/// partially pivoted tridiagonal LU.  Returned with unit Euclidean norm;
/// the sign is whatever the iteration produced.
std::vector<double> inverse_iteration(const SymmetricTridiagonal& m, double eigenvalue,
                                      int iterations = 4);

/// max_i |(T x)_i - lambda x_i|
double eigen_residual(const SymmetricTridiagonal& m, double eigenvalue,
                      std::span<const double> x) noexcept;

} // namespace mathieu
