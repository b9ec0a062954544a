#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lacdhva/dhva.hpp"
#include "run_config.hpp"

namespace lacdhva::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kConfigError = 2,
  kIoError = 3,
};

/// Threshold quoted for the reference Rb cloud next to 2 hbar c^2/|mu|;
/// the formula itself gives about 4.09e4 T_eff.
inline constexpr double kQuotedMinField = 40.93;

/// Tolerance of the finite-difference oracle against the analytic spectrum.
inline constexpr double kOracleTolerance = 1e-6;

struct OracleRow {
  int m = 0;
  int sigma = 0;
  int level = 0;  // n_xi
  double analytic = 0.0;  // J
  double numeric = 0.0;   // J
  double rel_error = 0.0;  // relative, or in units of hbar|omega| for a zero level
};

/// FD-vs-analytic comparison for |m| <= m_max, both sigma, k lowest levels,
/// on the reference grid.
[[nodiscard]] std::vector<OracleRow> run_fd_oracle(const spectrum::SystemConfig& cfg, int m_max, int k);

/// Prints the condition report, writes validation.json to out_dir.
/// Returns kSuccess iff the finite-difference oracle agrees.
int cmd_validate(const RunConfig& cfg, const std::filesystem::path& out_dir, std::ostream& os);

/// Writes spectrum.csv with one row per (sigma, n_xi, m), sigma then n_xi
/// then m ascending.
int cmd_spectrum(const RunConfig& cfg, int n_max, int m_max, const std::filesystem::path& out_dir,
                 std::ostream& os);

/// Writes figure1.csv, figure2.csv, figure3.csv and analysis.json.
int cmd_sweep(const RunConfig& cfg, const std::filesystem::path& out_dir, std::ostream& os);

/// Full command-line entry point: lacdhva <validate|spectrum|sweep>
/// --config <path> [--out <dir>]. Maps errors onto ExitCode.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lacdhva::cli
