#include "mathieu/io.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

using namespace mathieu;
using namespace mathieu::io;

TEST_CASE("numbers keep seventeen significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-2.5e-300) == "-2.5e-300");
  CHECK(format_number(1.0 / 3.0) == "0.33333333333333331");
  CHECK(std::stod(format_number(std::numbers::pi)) == std::numbers::pi);
}

TEST_CASE("csv layout") {
  const Table t{{"a", "b"}, {{1.0, 0.5}, {-3.0, 0.1}}};
  CHECK(to_csv(t) == "a,b\n1,0.5\n-3,0.10000000000000001\n");
  CHECK(to_csv(t).find('\r') == std::string::npos);
  CHECK(to_csv(Table{{"x"}, {}}) == "x\n");
}

TEST_CASE("json artifacts survive a round trip") {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> value(-1e6, 1e6);
  std::uniform_int_distribution<int> count(0, 20);
  for (int trial = 0; trial < 50; ++trial) {
    RunConfig config;
    config.nu = 2 * (trial % 5) + 1;
    config.q = std::abs(value(gen)) * 1e-5;
    Artifact a;
    a.meta = make_meta("test", config, {{"trial", trial}});
    const int columns = 1 + trial % 4;
    for (int c = 0; c < columns; ++c) a.table.columns.push_back("c" + std::to_string(c));
    const int rows = count(gen);
    for (int r = 0; r < rows; ++r) {
      std::vector<double> row;
      for (int c = 0; c < columns; ++c) row.push_back(value(gen) * std::pow(10.0, c - 8));
      a.table.rows.push_back(std::move(row));
    }
    const std::string text = to_json(a);
    const Artifact back = parse_json(text);
    CHECK(back.meta == a.meta);
    if (rows > 0) CHECK(back.table == a.table);
    CHECK(to_json(back) == text);
  }
}

TEST_CASE("meta block key order") {
  RunConfig config;
  config.nu = 5;
  config.q = 2.0;
  const auto meta = make_meta("filters", config, {{"taps", 20}});
  std::vector<std::string> keys;
  for (const auto& [key, value] : meta.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"command", "nu", "q", "threshold", "version", "taps"});
  CHECK(meta["version"] == MATHIEU_VERSION);
}

TEST_CASE("parse_json rejects malformed artifacts") {
  CHECK_THROWS(parse_json("[]"));
  CHECK_THROWS(parse_json(R"({"meta": {}})"));
  CHECK_THROWS(parse_json(R"({"meta": {}, "data": {}})"));
  CHECK_THROWS(parse_json("{not json"));
}

TEST_CASE("spectrum table at q = 0 is the Haar response") {
  const auto coeffs = mathieu_coefficients(OrderParameterPair{1, 0.0}, Parity::even_cosine, {});
  const MathieuTransfer transfer(coeffs);
  const auto t = spectrum_table(transfer, 64);
  REQUIRE(t.rows.size() == 64);
  CHECK(t.rows.front()[0] == doctest::Approx(-std::numbers::pi));
  for (const auto& row : t.rows) {
    CHECK(std::abs(row[1] - std::abs(std::cos(row[0] / 2.0))) < 1e-14);
    CHECK(std::abs(row[2] - std::abs(std::sin(row[0] / 2.0))) < 1e-14);
    CHECK(std::hypot(row[3], row[4]) == doctest::Approx(row[1]));
  }
}

TEST_CASE("filter table spans both supports") {
  const auto bank = make_filter_bank(5, 5.0);
  const auto t = filter_table(bank);
  CHECK(t.columns == std::vector<std::string>{"l", "h", "g"});
  const auto lo = std::min(bank.h.first, bank.g.first);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto l = lo + static_cast<std::ptrdiff_t>(i);
    CHECK(t.rows[i][0] == static_cast<double>(l));
    CHECK(t.rows[i][1] == bank.h.at(l));
    CHECK(t.rows[i][2] == bank.g.at(l));
  }
}

TEST_CASE("cascade table merges the two grids") {
  const auto bank = make_filter_bank(1, 0.0);
  const auto phi = cascade_scaling(bank, 3);
  const auto psi = cascade_wavelet(bank, 3);
  const auto t = cascade_table(phi, psi);
  REQUIRE(!t.rows.empty());
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(t.rows[i][0] - t.rows[i - 1][0] == doctest::Approx(0.125));
  }
}

TEST_CASE("config validation") {
  RunConfig config;
  CHECK_NOTHROW(validate(config));
  config.nu = 4;
  CHECK_THROWS_AS(validate(config), std::invalid_argument);
  config.nu = -1;
  CHECK_THROWS_AS(validate(config), std::invalid_argument);
  config = {};
  config.q = -1.0;
  CHECK_THROWS_AS(validate(config), std::invalid_argument);
  config = {};
  config.q = std::nan("");
  CHECK_THROWS_AS(validate(config), std::invalid_argument);
  config = {};
  config.threshold = 0.0;
  CHECK_THROWS_AS(validate(config), std::invalid_argument);
  config = {};
  config.iterations = 25;
  CHECK_THROWS_AS(validate(config), std::invalid_argument);
  config = {};
  config.samples = 1;
  CHECK_THROWS_AS(validate(config), std::invalid_argument);
}

TEST_CASE("write_output to files") {
  const auto dir = std::filesystem::temp_directory_path() / "mathieu_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.csv").string();
  write_output(path, "a\n1\n");
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "a\n1\n");
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(write_output((dir / "missing" / "out.csv").string(), "x"), OutputError);
}

TEST_CASE("dwt report for the Haar bank") {
  const auto r = dwt_report(make_filter_bank(1, 0.0), 64, 2, 10);
  CHECK(r.qmf_deviation < 1e-14);
  CHECK(r.round_trip_error < 1e-13);
  CHECK(r.energy_ratio == doctest::Approx(1.0).epsilon(1e-13));
  const auto t = dwt_table(r);
  CHECK(t.rows.size() == 1);
  CHECK(t.rows[0][0] == 64.0);
}
