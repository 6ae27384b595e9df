#include "mathieu/io.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(MATHIEU_CLI) + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

// Parses CSV output into a table, skipping the header.
mathieu::io::Table parse_csv(const std::string& text) {
  mathieu::io::Table t;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::istringstream header(line);
  for (std::string cell; std::getline(header, cell, ',');) t.columns.push_back(cell);
  while (std::getline(in, line)) {
    std::istringstream row_in(line);
    std::vector<double> row;
    for (std::string cell; std::getline(row_in, cell, ',');) row.push_back(std::stod(cell));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "mathieu_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace

TEST_CASE("eig reports the characteristic value as json") {
  const auto r = run("eig --nu 1 --q 5");
  REQUIRE(r.status == 0);
  const auto artifact = mathieu::io::parse_json(r.out);
  CHECK(artifact.meta["command"] == "eig");
  REQUIRE(artifact.table.rows.size() == 1);
  CHECK(std::abs(artifact.table.rows[0][2] - 1.858187541547753) < 1e-12);
}

TEST_CASE("eig at q = 0 gives nu squared") {
  const auto r = run("eig --nu 5 --q 0 --format csv");
  REQUIRE(r.status == 0);
  const auto t = parse_csv(r.out);
  CHECK(t.columns[2] == "a");
  CHECK(t.rows[0][2] == 25.0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("eig --nu 4 --q 1").status == 2);
  CHECK(run("eig --nu 1 --q -1").status == 2);
  CHECK(run("filters --nu 1 --q 1 --format xml").status == 2);
  CHECK(run("cascade --nu 1 --q 1 --iterations 30").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("nonsense").status == 2);
}

TEST_CASE("filters retain the expected number of taps") {
  for (auto [nu, taps] : {std::pair{1, 18}, std::pair{5, 20}}) {
    const auto r = run("filters --q 5 --format json --nu " + std::to_string(nu));
    REQUIRE(r.status == 0);
    const auto artifact = mathieu::io::parse_json(r.out);
    CHECK(artifact.meta["retained_h"] == taps);
    CHECK(artifact.table.columns == std::vector<std::string>{"l", "h", "g"});
  }
}

TEST_CASE("positive filters sum to sqrt 2") {
  const auto r = run("filters --nu 5 --q 5 --positive");
  REQUIRE(r.status == 0);
  double sum = 0.0;
  for (const auto& row : parse_csv(r.out).rows) sum += row[1];
  CHECK(std::abs(sum - std::numbers::sqrt2) < 1e-8);
}

TEST_CASE("spectrum at q = 0") {
  const auto r = run("spectrum --nu 1 --q 0 --samples 32");
  REQUIRE(r.status == 0);
  const auto t = parse_csv(r.out);
  REQUIRE(t.rows.size() == 32);
  for (const auto& row : t.rows) {
    CHECK(std::abs(row[1] - std::abs(std::cos(row[0] / 2.0))) < 1e-14);
  }
}

TEST_CASE("cascade wavelet has zero mean") {
  const auto r = run("cascade --nu 5 --q 5 --iterations 6");
  REQUIRE(r.status == 0);
  const auto t = parse_csv(r.out);
  const double step = t.rows[1][0] - t.rows[0][0];
  CHECK(step == doctest::Approx(1.0 / 64.0));
  double phi = 0.0, psi = 0.0;
  for (const auto& row : t.rows) {
    phi += row[1] * step;
    psi += row[2] * step;
  }
  CHECK(std::abs(phi - 1.0) < 1e-6);
  CHECK(std::abs(psi) < 1e-6);
  // Twenty retained taps give supports of length nineteen; the table holds their union.
  for (std::size_t c : {1u, 2u}) {
    double lo = 1e300, hi = -1e300;
    for (const auto& row : t.rows) {
      if (row[c] != 0.0) {
        lo = std::min(lo, row[0]);
        hi = std::max(hi, row[0]);
      }
    }
    CHECK(hi - lo <= 19.0);
  }
}

TEST_CASE("divergent cascade exits with 1") {
  CHECK(run("cascade --nu 1 --q 5 --iterations 12").status == 1);
}

TEST_CASE("unwritable output exits with 3") {
  CHECK(run("eig --nu 1 --q 1 -o /nonexistent-dir/out.json").status == 3);
}

TEST_CASE("outputs are deterministic") {
  for (const char* args : {"dwt --nu 5 --q 1", "cascade --nu 3 --q 0.5 --iterations 5",
                           "coeffs --nu 3 --q 2 --parity odd --format json"}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("file output matches stdout and verifies") {
  const auto path = (scratch() / "filters.json").string();
  REQUIRE(run("filters --nu 3 --q 2 --format json -o " + path).status == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run("filters --nu 3 --q 2 --format json").out);
  const auto verified = run("verify " + path);
  CHECK(verified.status == 0);
  CHECK(verified.out == "ok\n");

  std::ofstream(path, std::ios::trunc) << "{\"meta\": {}, \"data\": [{\"x\": 1.0}]}";
  CHECK(run("verify " + path).status == 1);
  std::filesystem::remove_all(scratch());
}
