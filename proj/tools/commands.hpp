#pragma once

#include "mathieu/io.hpp"

#include <string>

namespace mathieu::cli {

enum ExitCode : int { ok = 0, module_error = 1, usage_error = 2, output_error = 3 };

struct EigOptions {
  bool with_b = false;
};
struct CoeffsOptions {
  Parity parity = Parity::even_cosine;
};
struct FiltersOptions {
  bool positive = false;
};
struct DwtOptions {
  std::size_t length = 256;
  int levels = 3;
  int trials = 10;
};

// Each command builds its artifact and returns the serialized text.
std::string cmd_eig(const io::RunConfig& config, const EigOptions& options);
std::string cmd_coeffs(const io::RunConfig& config, const CoeffsOptions& options);
std::string cmd_filters(const io::RunConfig& config, const FiltersOptions& options);
std::string cmd_spectrum(const io::RunConfig& config);
std::string cmd_cascade(const io::RunConfig& config);
std::string cmd_dwt(const io::RunConfig& config, const DwtOptions& options);

/// Re-reads a JSON artifact and checks that re-serializing reproduces it
/// byte for byte.
bool verify_artifact(const std::string& text);

} // namespace mathieu::cli
