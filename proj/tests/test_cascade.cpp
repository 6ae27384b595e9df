#include "mathieu/cascade.hpp"
#include "mathieu/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace mathieu;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected mathieu::Error");
  return ErrorKind::parameter;
}

} // namespace

TEST_CASE("Haar bank cascades to the box and the Haar wavelet") {
  const auto bank = make_filter_bank(1, 0.0);
  const auto phi = cascade_scaling(bank, 6);
  CHECK(phi.origin == 0.0);
  CHECK(phi.step == 1.0 / 64);
  REQUIRE(phi.samples.size() == 65);
  for (std::size_t k = 0; k < 64; ++k) CHECK(std::abs(phi.samples[k] - 1.0) < 1e-10);
  CHECK(std::abs(phi.samples[64]) < 1e-10);

  const auto psi = cascade_wavelet(bank, 6);
  CHECK(psi.origin == 0.0);
  REQUIRE(psi.samples.size() == 65);
  const double sign = psi.samples[0] > 0 ? 1.0 : -1.0;
  for (std::size_t k = 0; k < 32; ++k) CHECK(std::abs(sign * psi.samples[k] - 1.0) < 1e-10);
  for (std::size_t k = 32; k < 64; ++k) CHECK(std::abs(sign * psi.samples[k] + 1.0) < 1e-10);
}

TEST_CASE("cascade matches direct recursion of the refinement equation") {
  for (int nu : {1, 5}) {
    const auto bank = positive_normalization(make_filter_bank(nu, 5.0));
    for (int j : {1, 2, 3}) {
      const auto phi = cascade_scaling(bank, j);
      for (std::size_t k = 0; k < phi.samples.size(); k += 3) {
        const double expected = oracle::refinement_value(bank.h.taps, bank.h.first, j, phi.abscissa(k));
        CHECK(phi.samples[k] == doctest::Approx(expected).epsilon(1e-10).scale(1.0));
      }
      const auto psi = cascade_wavelet(bank, j);
      for (std::size_t k = 0; k < psi.samples.size(); k += 3) {
        const double t = psi.abscissa(k);
        double expected = 0.0;
        for (std::size_t i = 0; i < bank.g.taps.size(); ++i) {
          const double l = static_cast<double>(bank.g.first + static_cast<std::ptrdiff_t>(i));
          expected += bank.g.taps[i] *
                      oracle::refinement_value(bank.h.taps, bank.h.first, j - 1, 2.0 * t - l);
        }
        expected *= std::sqrt(2.0);
        CHECK(psi.samples[k] == doctest::Approx(expected).epsilon(1e-10).scale(1.0));
      }
    }
  }
}

TEST_CASE("grid, length and integral invariants") {
  for (int nu : {1, 5}) {
    const auto bank = make_filter_bank(nu, 5.0);
    const auto support = static_cast<std::size_t>(bank.h.last() - bank.h.first);
    for (int j : {2, 4, 6}) {
      const auto phi = cascade_scaling(bank, j);
      CHECK(phi.step == std::ldexp(1.0, -j));
      CHECK(phi.samples.size() == support * (std::size_t{1} << j) + 1);
      CHECK(phi.origin == static_cast<double>(bank.h.first));
      CHECK(std::abs(phi.integral() - 1.0) < 1e-6);

      const auto psi = cascade_wavelet(bank, j);
      CHECK(psi.samples.size() == phi.samples.size());
      CHECK(std::abs(psi.integral()) < 1e-6);
    }
  }
}

TEST_CASE("partition of unity at six iterations") {
  for (int nu : {1, 5}) {
    const auto phi = cascade_scaling(make_filter_bank(nu, 5.0), 6);
    const std::size_t per_unit = 64;
    for (std::size_t offset = 0; offset < per_unit; ++offset) {
      double total = 0.0;
      for (std::size_t k = offset; k < phi.samples.size(); k += per_unit) total += phi.samples[k];
      CHECK(std::abs(total - 1.0) < 1e-4);
    }
  }
}

TEST_CASE("nonzero samples stay inside the bank support") {
  const auto bank = make_filter_bank(5, 5.0);
  const auto phi = cascade_scaling(bank, 5);
  for (std::size_t k = 0; k < phi.samples.size(); ++k) {
    if (phi.samples[k] != 0.0) {
      CHECK(phi.abscissa(k) >= static_cast<double>(bank.h.first));
      CHECK(phi.abscissa(k) < static_cast<double>(bank.h.last()));
    }
  }
  const auto psi = cascade_wavelet(bank, 5);
  const double lo = 0.5 * static_cast<double>(bank.h.first + 1 - bank.h.last());
  for (std::size_t k = 0; k < psi.samples.size(); ++k) {
    if (psi.samples[k] != 0.0) {
      CHECK(psi.abscissa(k) >= lo);
      CHECK(psi.abscissa(k) < lo + static_cast<double>(bank.h.last() - bank.h.first));
    }
  }
}

TEST_CASE("refinement consistency for a nearly orthogonal bank") {
  const auto bank = make_filter_bank(5, 1e-4);
  const auto coarse = cascade_scaling(bank, 5);
  const auto fine = cascade_scaling(bank, 6);
  CHECK(refinement_distance(coarse, fine) < 1e-2);
  const auto down = downsample(fine);
  CHECK(down.step == coarse.step);
  CHECK(down.samples.size() == coarse.samples.size());
  CHECK_THROWS_AS(refinement_distance(coarse, coarse), Error);
}

TEST_CASE("cascade error paths") {
  const auto bank = make_filter_bank(1, 5.0);
  CHECK(kind_of([&] { cascade_scaling(bank, 0); }) == ErrorKind::parameter);
  CHECK(kind_of([&] { cascade_scaling(bank, 25); }) == ErrorKind::resource_limit);
  CHECK(kind_of([&] { cascade_wavelet(bank, 25); }) == ErrorKind::resource_limit);
  // |H| peaks well above one for this bank, so the iteration blows up.
  CHECK(kind_of([&] { cascade_scaling(bank, 12); }) == ErrorKind::divergence);
}
