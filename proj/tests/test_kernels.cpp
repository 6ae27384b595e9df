#include "mathieu/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace mathieu::kernels;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> dist;
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

} // namespace

TEST_CASE("serial and parallel kernels agree bit for bit") {
  std::mt19937_64 rng(42);
  const auto coeffs = random_vector(rng, 30);
  const auto grid = random_vector(rng, 777);
  for (auto kind : {Harmonic::cosine, Harmonic::sine}) {
    for (int derivative : {0, 2}) {
      std::vector<double> a(grid.size()), b(grid.size());
      serial::odd_harmonic_series(coeffs, grid, kind, derivative, a);
      parallel::odd_harmonic_series(coeffs, grid, kind, derivative, b);
      CHECK(a == b);
    }
  }

  const auto signal = random_vector(rng, 513);
  const auto filter = random_vector(rng, 21);
  CHECK(serial::upsample_convolve(signal, filter) == parallel::upsample_convolve(signal, filter));

  const auto x = random_vector(rng, 256);
  std::vector<double> sa(128), pa(128);
  serial::periodic_analysis(x, filter, -9, sa);
  parallel::periodic_analysis(x, filter, -9, pa);
  CHECK(sa == pa);

  std::vector<double> ss(256, 0.5), ps(256, 0.5);
  serial::periodic_synthesis_add(sa, filter, -9, ss);
  parallel::periodic_synthesis_add(sa, filter, -9, ps);
  CHECK(ss == ps);
}

TEST_CASE("upsample_convolve equals explicit upsampling then full convolution") {
  std::mt19937_64 rng(5);
  const auto signal = random_vector(rng, 17);
  const auto filter = random_vector(rng, 6);
  std::vector<double> up(2 * signal.size() - 1, 0.0);
  for (std::size_t i = 0; i < signal.size(); ++i) up[2 * i] = signal[i];
  std::vector<double> expected(up.size() + filter.size() - 1, 0.0);
  for (std::size_t i = 0; i < up.size(); ++i)
    for (std::size_t j = 0; j < filter.size(); ++j) expected[i + j] += up[i] * filter[j];

  const auto got = serial::upsample_convolve(signal, filter);
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(expected[i]));
}

TEST_CASE("periodic synthesis is the adjoint of periodic analysis") {
  std::mt19937_64 rng(9);
  const auto filter = random_vector(rng, 11);
  const auto x = random_vector(rng, 64);
  const auto y = random_vector(rng, 32);
  for (std::ptrdiff_t first : {-7, 0, 3}) {
    std::vector<double> ax(32);
    serial::periodic_analysis(x, filter, first, ax);
    std::vector<double> aty(64, 0.0);
    serial::periodic_synthesis_add(y, filter, first, aty);
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t i = 0; i < 32; ++i) lhs += ax[i] * y[i];
    for (std::size_t i = 0; i < 64; ++i) rhs += x[i] * aty[i];
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("odd harmonic series second derivative scales each term") {
  const std::vector<double> coeffs{0.0, 1.0};
  const std::vector<double> grid{0.3};
  std::vector<double> y(1), y2(1);
  serial::odd_harmonic_series(coeffs, grid, Harmonic::cosine, 0, y);
  serial::odd_harmonic_series(coeffs, grid, Harmonic::cosine, 2, y2);
  CHECK(y[0] == doctest::Approx(std::cos(0.9)));
  CHECK(y2[0] == doctest::Approx(-9.0 * std::cos(0.9)));
}
