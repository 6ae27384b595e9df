#pragma once

// First-kind Mathieu functions of odd integer order.
//
//   y'' + (a - 2q cos 2w) y = 0
//
// ce_nu(w,q) = sum_l A_{2l+1} cos((2l+1)w)    a = a_nu(q)
// se_nu(w,q) = sum_l B_{2l+1} sin((2l+1)w)    a = b_nu(q)
//
// The coefficients solve a three-term recurrence, i.e. they are an
// eigenvector of a symmetric tridiagonal matrix whose k-th smallest
// eigenvalue (k = (nu-1)/2, 0-based) is the characteristic value.
// Coefficient vectors are normalized to unit Euclidean norm with the
// entry c_k (the one that tends to 1 as q -> 0) positive.

#include "mathieu/tridiagonal.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace mathieu {

enum class Parity { even_cosine, odd_sine };

const char* to_string(Parity parity) noexcept;

/// (nu, q) selecting one family member.  nu odd and >= 1, q finite and >= 0.
struct OrderParameterPair {
  int nu = 1;
  double q = 0.0;

  bool operator==(const OrderParameterPair&) const = default;
};

/// Throws invalid_order for a non-odd or non-positive nu, parameter for bad q.
void validate(const OrderParameterPair& pair);

/// Position of c_{(nu-1)/2} in the coefficient vector.
inline std::size_t dominant_index(int nu) noexcept { return static_cast<std::size_t>((nu - 1) / 2); }

struct CharacteristicValue {
  double a = 0.0;
  OrderParameterPair pair;
  Parity kind = Parity::even_cosine;
  std::size_t matrix_order = 0;
  /// |a(N) - a(N+10)| observed by the stability test.
  double convergence_delta = 0.0;
};

struct CoefficientVector {
  Parity parity = Parity::even_cosine;
  std::vector<double> coeffs; ///< coeffs[l] = A_{2l+1} (or B_{2l+1})
  OrderParameterPair pair;
  double a = 0.0;

  std::size_t size() const noexcept { return coeffs.size(); }
  /// A_m for odd m >= 1; zero past the stored length.
  double harmonic(int m) const noexcept;
  double max_abs() const noexcept;
  double abs_sum() const noexcept;
  double sum() const noexcept;
};

struct SolverOptions {
  /// Starting matrix order; 0 selects default_matrix_order().
  std::size_t matrix_order = 0;
  /// How many times the order may be doubled before giving up.
  int max_doublings = 8;
};

inline constexpr double kStabilityTolerance = 1e-10;
inline constexpr double kRecurrenceTolerance = 1e-8;
inline constexpr double kTailTolerance = 1e-12;

/// max(25, (nu+1)/2 + ceil(2q) + 15)
std::size_t default_matrix_order(const OrderParameterPair& pair);

/// Truncated recurrence matrix: diagonal (1 + q | 1 - q, 9, 25, ..., (2N-1)^2),
/// off-diagonal q.  The leading entry takes +q for the cosine family and -q
/// for the sine family.  q may be negative here (used for reflection checks).
SymmetricTridiagonal recurrence_matrix(Parity parity, double q, std::size_t order);

CharacteristicValue characteristic_value(const OrderParameterPair& pair, Parity kind,
                                         const SolverOptions& options = {});

/// Eigenvector for `value` of the order-`length` matrix (0 = value.matrix_order).
CoefficientVector fourier_coefficients(const OrderParameterPair& pair,
                                       const CharacteristicValue& value, std::size_t length = 0);

/// characteristic_value followed by fourier_coefficients.
CoefficientVector mathieu_coefficients(const OrderParameterPair& pair, Parity kind,
                                       const SolverOptions& options = {});

double eval_ce(const CoefficientVector& coeffs, double w);
double eval_se(const CoefficientVector& coeffs, double w);
/// Dispatches on parity.
double eval(const CoefficientVector& coeffs, double w) noexcept;
double eval_second_derivative(const CoefficientVector& coeffs, double w) noexcept;

/// Largest absolute row residual of the recurrence, including the leading
/// row and the truncated last row.
double recurrence_residual(const CoefficientVector& coeffs) noexcept;

/// max over grid of |y'' + (a - 2q cos 2w) y|, y'' summed term by term.
double ode_residual(const CoefficientVector& coeffs, double a, double q,
                    std::span<const double> grid);

/// n equally spaced angles on [0, 2pi).
std::vector<double> periodic_grid(std::size_t n);

/// Periodic trapezoid approximation of int_0^{2pi} f(w) g(w) dw.
double orthogonality_integral(const CoefficientVector& f, const CoefficientVector& g,
                              std::size_t n_quad);

} // namespace mathieu
