#include "commands.hpp"

namespace mathieu::cli {

using nlohmann::ordered_json;

namespace {

std::string render(const io::RunConfig& config, std::string_view command,
                   const io::Table& table, const ordered_json& extra = ordered_json::object()) {
  if (config.format == io::Format::csv) return io::to_csv(table);
  return io::to_json(io::Artifact{io::make_meta(command, config, extra), table});
}

} // namespace

std::string cmd_eig(const io::RunConfig& config, const EigOptions& options) {
  const OrderParameterPair pair{config.nu, config.q};
  const auto a = characteristic_value(pair, Parity::even_cosine);
  const auto coeffs = fourier_coefficients(pair, a);
  auto table = io::eigen_table(a, recurrence_residual(coeffs) / coeffs.max_abs());
  if (options.with_b) {
    const auto b = characteristic_value(pair, Parity::odd_sine);
    table.columns.insert(table.columns.end(), {"b", "b_matrix_order"});
    table.rows[0].insert(table.rows[0].end(), {b.a, static_cast<double>(b.matrix_order)});
  }
  return render(config, "eig", table, {{"convergence_delta", a.convergence_delta}});
}

std::string cmd_coeffs(const io::RunConfig& config, const CoeffsOptions& options) {
  const auto coeffs = mathieu_coefficients({config.nu, config.q}, options.parity);
  return render(config, "coeffs", io::coefficient_table(coeffs),
                {{"parity", to_string(options.parity)}, {"a", coeffs.a}});
}

std::string cmd_filters(const io::RunConfig& config, const FiltersOptions& options) {
  const auto bank = make_filter_bank(config.nu, config.q, config.threshold, options.positive);
  return render(config, "filters", io::filter_table(bank),
                {{"positive", bank.positive},
                 {"ce0", bank.ce0},
                 {"retained_h", bank.h.retained()},
                 {"retained_g", bank.g.retained()},
                 {"truncation_mass", bank.truncation_mass}});
}

std::string cmd_spectrum(const io::RunConfig& config) {
  const MathieuTransfer transfer(mathieu_coefficients({config.nu, config.q}, Parity::even_cosine));
  return render(config, "spectrum", io::spectrum_table(transfer, config.samples),
                {{"samples", config.samples}, {"ce0", transfer.ce0()}});
}

std::string cmd_cascade(const io::RunConfig& config) {
  const auto bank = make_filter_bank(config.nu, config.q, config.threshold, true);
  const auto phi = cascade_scaling(bank, config.iterations);
  const auto psi = cascade_wavelet(bank, config.iterations);
  return render(config, "cascade", io::cascade_table(phi, psi),
                {{"iterations", config.iterations},
                 {"step", phi.step},
                 {"phi_integral", phi.integral()},
                 {"psi_mean", psi.integral()}});
}

std::string cmd_dwt(const io::RunConfig& config, const DwtOptions& options) {
  const auto bank = make_filter_bank(config.nu, config.q, config.threshold, true);
  const auto report = io::dwt_report(bank, options.length, options.levels, options.trials);
  return render(config, "dwt", io::dwt_table(report),
                {{"length", options.length}, {"levels", options.levels}, {"trials", options.trials}});
}

bool verify_artifact(const std::string& text) {
  return io::to_json(io::parse_json(text)) == text;
}

} // namespace mathieu::cli
