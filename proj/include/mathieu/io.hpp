#pragma once

// Artifact serialization for the command-line tool.
//
// Every artifact is a metadata block plus a table of real columns.
//   CSV : header row, comma separated, LF line endings, %.17g numbers.
//   JSON: {"meta": {...}, "data": [{column: value, ...}, ...]} with keys in
//         column order.

#include "mathieu/cascade.hpp"
#include "mathieu/dwt.hpp"
#include "mathieu/filters.hpp"
#include "mathieu/mathieu.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mathieu::io {

enum class Format { csv, json };

struct RunConfig {
  int nu = 1;
  double q = 0.0;
  double threshold = kDefaultThreshold;
  int iterations = 6;
  std::size_t samples = 1024;
  Format format = Format::csv;
  std::string output = "-";
};

/// Throws std::invalid_argument with a usage message.
void validate(const RunConfig& config);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  bool operator==(const Table&) const = default;
};

struct Artifact {
  nlohmann::ordered_json meta;
  Table table;

  bool operator==(const Artifact&) const = default;
};

/// meta block: command, nu, q, threshold, version, then `extra` keys.
nlohmann::ordered_json make_meta(std::string_view command, const RunConfig& config,
                                 const nlohmann::ordered_json& extra = nlohmann::ordered_json::object());

std::string format_number(double value);
std::string to_csv(const Table& table);
std::string to_json(const Artifact& artifact);
Artifact parse_json(std::string_view text);

Table eigen_table(const CharacteristicValue& a, double residual);
Table coefficient_table(const CoefficientVector& coeffs);
Table filter_table(const FilterBank& bank);
/// samples points w = -pi + 2 pi i / samples
Table spectrum_table(const MathieuTransfer& transfer, std::size_t samples);
/// Union grid of phi and psi, zero outside each support.
Table cascade_table(const SampledSignal& phi, const SampledSignal& psi);

struct DwtReport {
  std::size_t length = 256;
  int levels = 3;
  int trials = 10;
  double qmf_deviation = 0.0;
  double round_trip_error = 0.0;
  double energy_ratio = 0.0; ///< ||pyramid||^2 / ||x||^2 for the first trial vector
};

DwtReport dwt_report(const FilterBank& bank, std::size_t length, int levels, int trials);
Table dwt_table(const DwtReport& report);

class OutputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// "-" writes to standard output.
void write_output(const std::string& path, std::string_view text);

} // namespace mathieu::io
