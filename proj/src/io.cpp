#include "mathieu/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace mathieu::io {

using nlohmann::ordered_json;

void validate(const RunConfig& config) {
  if (config.nu < 1 || config.nu % 2 == 0) {
    throw std::invalid_argument("--nu must be a positive odd integer");
  }
  if (!std::isfinite(config.q) || config.q < 0.0) {
    throw std::invalid_argument("--q must be finite and non-negative");
  }
  if (!(config.threshold > 0.0) || !std::isfinite(config.threshold)) {
    throw std::invalid_argument("--threshold must be positive");
  }
  if (config.iterations < 1 || config.iterations > kMaxCascadeIterations) {
    throw std::invalid_argument("--iterations must lie in [1, 24]");
  }
  if (config.samples < 2) {
    throw std::invalid_argument("--samples must be at least 2");
  }
}

ordered_json make_meta(std::string_view command, const RunConfig& config,
                       const ordered_json& extra) {
  ordered_json meta;
  meta["command"] = std::string(command);
  meta["nu"] = config.nu;
  meta["q"] = config.q;
  meta["threshold"] = config.threshold;
  meta["version"] = MATHIEU_VERSION;
  for (const auto& [key, value] : extra.items()) meta[key] = value;
  return meta;
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Artifact& artifact) {
  ordered_json doc;
  doc["meta"] = artifact.meta;
  ordered_json data = ordered_json::array();
  for (const auto& row : artifact.table.rows) {
    ordered_json entry = ordered_json::object();
    for (std::size_t c = 0; c < artifact.table.columns.size(); ++c) {
      entry[artifact.table.columns[c]] = row[c];
    }
    data.push_back(std::move(entry));
  }
  doc["data"] = std::move(data);
  return doc.dump(2) + '\n';
}

Artifact parse_json(std::string_view text) {
  const auto doc = ordered_json::parse(text);
  if (!doc.is_object() || !doc.contains("meta") || !doc.contains("data") ||
      !doc["data"].is_array()) {
    throw std::runtime_error("artifact JSON needs a meta object and a data array");
  }
  Artifact out;
  out.meta = doc["meta"];
  for (const auto& entry : doc["data"]) {
    if (out.table.columns.empty()) {
      for (const auto& [key, value] : entry.items()) out.table.columns.push_back(key);
    }
    std::vector<double> row;
    row.reserve(out.table.columns.size());
    for (const auto& column : out.table.columns) row.push_back(entry.at(column).get<double>());
    out.table.rows.push_back(std::move(row));
  }
  return out;
}

Table eigen_table(const CharacteristicValue& a, double residual) {
  return Table{{"nu", "q", "a", "matrix_order", "residual"},
               {{static_cast<double>(a.pair.nu), a.pair.q, a.a,
                 static_cast<double>(a.matrix_order), residual}}};
}

Table coefficient_table(const CoefficientVector& coeffs) {
  Table t{{"index", "value"}, {}};
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    t.rows.push_back({static_cast<double>(l), coeffs.coeffs[l]});
  }
  return t;
}

Table filter_table(const FilterBank& bank) {
  Table t{{"l", "h", "g"}, {}};
  const std::ptrdiff_t lo = std::min(bank.h.first, bank.g.first);
  const std::ptrdiff_t hi = std::max(bank.h.last(), bank.g.last());
  for (std::ptrdiff_t l = lo; l <= hi; ++l) {
    t.rows.push_back({static_cast<double>(l), bank.h.at(l), bank.g.at(l)});
  }
  return t;
}

Table spectrum_table(const MathieuTransfer& transfer, std::size_t samples) {
  Table t{{"w", "abs_H", "abs_G", "re_H", "im_H", "re_G", "im_G"}, {}};
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double w = -std::numbers::pi + step * static_cast<double>(i);
    const auto h = transfer.H(w).value;
    const auto g = transfer.G(w).value;
    t.rows.push_back({w, std::abs(h), std::abs(g), h.real(), h.imag(), g.real(), g.imag()});
  }
  return t;
}

Table cascade_table(const SampledSignal& phi, const SampledSignal& psi) {
  Table t{{"t", "phi", "psi"}, {}};
  const double step = phi.step;
  const double start = std::min(phi.origin, psi.origin);
  const double end = std::max(phi.abscissa(phi.samples.size() - 1),
                              psi.abscissa(psi.samples.size() - 1));
  const auto count = static_cast<std::size_t>(std::llround((end - start) / step)) + 1;
  auto value_at = [](const SampledSignal& s, double x) {
    const auto k = std::llround((x - s.origin) / s.step);
    return k >= 0 && static_cast<std::size_t>(k) < s.samples.size()
               ? s.samples[static_cast<std::size_t>(k)]
               : 0.0;
  };
  for (std::size_t i = 0; i < count; ++i) {
    const double x = start + step * static_cast<double>(i);
    t.rows.push_back({x, value_at(phi, x), value_at(psi, x)});
  }
  return t;
}

DwtReport dwt_report(const FilterBank& bank, std::size_t length, int levels, int trials) {
  DwtReport r;
  r.length = length;
  r.levels = levels;
  r.trials = trials;
  r.qmf_deviation = qmf_deviation(bank);
  r.round_trip_error = round_trip_error(bank, length, levels, trials);
  Lcg64 rng;
  const auto x = random_unit_vector(rng, length);
  r.energy_ratio = analyze(x, bank, levels).energy();
  return r;
}

Table dwt_table(const DwtReport& r) {
  return Table{{"length", "levels", "trials", "qmf_deviation", "round_trip_error", "energy_ratio"},
               {{static_cast<double>(r.length), static_cast<double>(r.levels),
                 static_cast<double>(r.trials), r.qmf_deviation, r.round_trip_error,
                 r.energy_ratio}}};
}

void write_output(const std::string& path, std::string_view text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw OutputError("cannot write to standard output");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open output file '" + path + "'");
  file << text;
  file.flush();
  if (!file) throw OutputError("cannot write output file '" + path + "'");
}

} // namespace mathieu::io
