// mathieu-wavelets: emit Mathieu characteristic values, coefficients,
// filter banks, spectra, cascade waveforms and DWT reports as CSV or JSON.

#include "commands.hpp"

#include "mathieu/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace mathieu;

constexpr const char* kColumns = R"(CSV columns:
  eig       nu,q,a,matrix_order,residual[,b,b_matrix_order]
  coeffs    index,value                (value = A_{2*index+1})
  filters   l,h,g
  spectrum  w,abs_H,abs_G,re_H,im_H,re_G,im_G   (w = -pi + 2 pi i / samples)
  cascade   t,phi,psi                  (step 2^-iterations)
  dwt       length,levels,trials,qmf_deviation,round_trip_error,energy_ratio
JSON: {"meta": {command, nu, q, threshold, version, ...}, "data": [row objects]}
Exit codes: 0 ok, 1 computation error, 2 usage error, 3 output not writable.)";

struct Common {
  io::RunConfig config;
  std::string format;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--nu", common.config.nu, "Characteristic exponent (positive odd)")
      ->capture_default_str();
  sub->add_option("--q", common.config.q, "Elliptic parameter q >= 0")->capture_default_str();
  sub->add_option("--threshold", common.config.threshold, "FIR truncation threshold")
      ->capture_default_str();
  sub->add_option("--format", common.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("-o,--output", common.config.output, "Output path, - for stdout")
      ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mathieu wavelets: characteristic values, MRA filters and cascade waveforms"};
  app.footer(kColumns);
  app.require_subcommand(1);

  Common common;
  cli::EigOptions eig_options;
  cli::CoeffsOptions coeffs_options;
  cli::FiltersOptions filters_options;
  cli::DwtOptions dwt_options;
  std::string parity = "even";
  std::string verify_path;

  auto* eig = app.add_subcommand("eig", "Characteristic value a (and b) as JSON");
  add_common(eig, common);
  eig->add_flag("--with-b", eig_options.with_b, "Also report the odd-family value b");

  auto* coeffs = app.add_subcommand("coeffs", "Unit-norm Fourier coefficients");
  add_common(coeffs, common);
  coeffs->add_option("--parity", parity, "even (ce) or odd (se)")
      ->check(CLI::IsMember({"even", "odd"}))
      ->capture_default_str();

  auto* filters = app.add_subcommand("filters", "Truncated smoothing/detail filter bank");
  add_common(filters, common);
  filters->add_flag("--positive", filters_options.positive, "Flip h so that sum h = sqrt2");

  auto* spectrum = app.add_subcommand("spectrum", "H and G transfer functions on a grid");
  add_common(spectrum, common);
  spectrum->add_option("--samples", common.config.samples, "Grid points")->capture_default_str();

  auto* cascade = app.add_subcommand("cascade", "Scaling function and wavelet by cascade");
  add_common(cascade, common);
  cascade->add_option("--iterations", common.config.iterations, "Refinement rounds")
      ->capture_default_str();

  auto* dwt = app.add_subcommand("dwt", "Periodic DWT round-trip report");
  add_common(dwt, common);
  dwt->add_option("--length", dwt_options.length, "Signal length")->capture_default_str();
  dwt->add_option("--levels", dwt_options.levels, "Decomposition levels")->capture_default_str();
  dwt->add_option("--trials", dwt_options.trials, "Random trials (>= 10)")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Re-read a JSON artifact and check it round-trips");
  verify->add_option("file", verify_path, "JSON artifact")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::usage_error;
  }

  try {
    if (verify->parsed()) {
      std::ifstream in(verify_path, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot read '" << verify_path << "'\n";
        return cli::module_error;
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      if (!cli::verify_artifact(buffer.str())) {
        std::cerr << "error: artifact does not round-trip\n";
        return cli::module_error;
      }
      std::cout << "ok\n";
      return cli::ok;
    }

    auto& config = common.config;
    const std::string default_format = eig->parsed() ? "json" : "csv";
    config.format = (common.format.empty() ? default_format : common.format) == "json"
                        ? io::Format::json
                        : io::Format::csv;
    coeffs_options.parity = parity == "odd" ? Parity::odd_sine : Parity::even_cosine;
    try {
      io::validate(config);
    } catch (const std::invalid_argument& e) {
      std::cerr << "usage error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
      return cli::usage_error;
    }

    std::string text;
    if (eig->parsed()) text = cli::cmd_eig(config, eig_options);
    else if (coeffs->parsed()) text = cli::cmd_coeffs(config, coeffs_options);
    else if (filters->parsed()) text = cli::cmd_filters(config, filters_options);
    else if (spectrum->parsed()) text = cli::cmd_spectrum(config);
    else if (cascade->parsed()) text = cli::cmd_cascade(config);
    else text = cli::cmd_dwt(config, dwt_options);

    io::write_output(config.output, text);
    return cli::ok;
  } catch (const io::OutputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::output_error;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return cli::module_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::module_error;
  }
}
