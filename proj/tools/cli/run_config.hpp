#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>

#include "lacdhva/spectrum.hpp"

namespace lacdhva::cli {

/// Reading or writing an artifact failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  double inv_b_min = 0.0;  // 1/T_eff
  double inv_b_max = 0.0;
  int steps = 0;
};

struct RunConfig {
  spectrum::SystemConfig system;
  std::optional<SweepSpec> sweep;
  std::filesystem::path output_dir = "out";
};

/// Parses flat key=value text with dotted keys:
///
///   atom.mass_kg, atom.mu_J_per_T, cloud.area_m2, cloud.natoms,
///   field.b_eff_Teff, field.sigma                      (required)
///   sweep.inv_b_min, sweep.inv_b_max, sweep.steps      (all or none)
///   output.dir                                         (optional)
///
/// '#' starts a comment. Unknown or repeated keys, malformed numbers and
/// invalid systems raise ConfigError with the offending line.
[[nodiscard]] RunConfig parse_run_config(std::istream& in);

/// Throws ConfigError when the file cannot be opened.
[[nodiscard]] RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace lacdhva::cli
