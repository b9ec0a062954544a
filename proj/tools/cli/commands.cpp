#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <string_view>

#include "format.hpp"
#include "lacdhva/errors.hpp"
#include "lacdhva/fd_solver.hpp"

namespace lacdhva::cli {

namespace fs = std::filesystem;

namespace {

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
}

const char* status_name(spectrum::CheckStatus s) { return s == spectrum::CheckStatus::pass ? "pass" : "warn"; }

std::string signed_int(int v) { return v > 0 ? "+" + std::to_string(v) : std::to_string(v); }

}  // namespace

std::vector<OracleRow> run_fd_oracle(const spectrum::SystemConfig& cfg, int m_max, int k) {
  const auto scales = cfg.scales();
  std::vector<OracleRow> rows;
  for (const auto sigma : {spectrum::Sigma::minus, spectrum::Sigma::plus}) {
    for (int m = -m_max; m <= m_max; ++m) {
      const auto grid = fd::RadialGrid::reference(m, k, scales.a_ac);
      const auto fd = fd::solve_radial_fd(m, sigma, cfg, grid, k);
      for (int level = 0; level < k; ++level) {
        OracleRow row{.m = m, .sigma = spectrum::to_int(sigma), .level = level};
        row.analytic = spectrum::energy_eigenvalue({level, m, sigma}, scales.hbar_omega);
        row.numeric = fd.eigenvalues[level];
        const double scale = row.analytic == 0.0 ? scales.hbar_omega : std::abs(row.analytic);
        row.rel_error = std::abs(row.numeric - row.analytic) / scale;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

int cmd_validate(const RunConfig& cfg, const fs::path& out_dir, std::ostream& os) {
  const auto& sys = cfg.system;
  const auto report = spectrum::validate_config(sys);
  const auto scales = sys.scales();
  const auto level0 = spectrum::landau_level(0, sys);

  os << "system\n"
     << "  mass                      " << format_sci(sys.mass) << " kg\n"
     << "  magnetic moment           " << format_sci(sys.mu) << " J/T\n"
     << "  cloud area                " << format_sci(sys.area) << " m^2\n"
     << "  atoms                     " << sys.natoms << "\n"
     << "  effective field           " << format_sci(sys.b_eff.value) << " T_eff\n"
     << "  sigma                     " << signed_int(spectrum::to_int(sys.sigma)) << "\n"
     << "derived scales\n"
     << "  degeneracy coefficient    " << format_sci(scales.rho_flux) << " per T_eff\n"
     << "  degeneracy at field       " << format_sci(level0.degeneracy) << "\n"
     << "  level spacing             " << format_sci(scales.hbar_omega) << " J\n"
     << "  magnetic length           " << format_sci(scales.a_ac) << " m\n"
     << "  effective Bohr magneton   " << format_sci(scales.mu_b_eff) << " J s/T\n"
     << "conditions\n";
  for (const auto& c : report.checks) os << "  [" << status_name(c.status) << "] " << c.name << ": " << c.detail << "\n";
  os << "strong-field threshold\n"
     << "  2 hbar c^2/|mu|           " << format_sci(report.min_field) << " T_eff\n"
     << "  quoted threshold          " << format_sci(kQuotedMinField) << " T_eff (formula/quoted = "
     << format_sci(report.min_field / kQuotedMinField) << ", unresolved)\n";

  const int m_max = 3;
  const int k = 4;
  const auto oracle = run_fd_oracle(sys, m_max, k);
  bool oracle_ok = true;
  os << "finite-difference oracle (" << fd::RadialGrid::kReferencePoints << " nodes, tolerance "
     << format_sci(kOracleTolerance) << ")\n"
     << "  sigma   m  n_xi  analytic_J          fd_J                error\n";
  for (const auto& row : oracle) {
    const bool ok = row.rel_error <= kOracleTolerance;
    oracle_ok = oracle_ok && ok;
    char line[160];
    std::snprintf(line, sizeof line, "  %5s %3d %5d  %-18s  %-18s  %-18s %s\n", signed_int(row.sigma).c_str(), row.m,
                  row.level, format_sci(row.analytic).c_str(), format_sci(row.numeric).c_str(),
                  format_sci(row.rel_error).c_str(), ok ? "ok" : "FAIL");
    os << line;
  }

  JsonWriter json;
  json.begin_object();
  json.key("passed").boolean(oracle_ok);
  json.key("d_coefficient").number(scales.rho_flux);
  json.key("min_field_formula").number(report.min_field);
  json.key("min_field_paper_printed").number(kQuotedMinField);
  json.key("field_ratio").number(report.field_ratio);
  json.key("conditions").begin_array();
  for (const auto& c : report.checks) {
    json.begin_object();
    json.key("name").string(c.name);
    json.key("status").string(status_name(c.status));
    json.key("detail").string(c.detail);
    json.end_object();
  }
  json.end_array();
  json.key("fd_oracle").begin_array();
  for (const auto& row : oracle) {
    json.begin_object();
    json.key("sigma").integer(row.sigma);
    json.key("m").integer(row.m);
    json.key("n_xi").integer(row.level);
    json.key("analytic_J").number(row.analytic);
    json.key("fd_J").number(row.numeric);
    json.key("error").number(row.rel_error);
    json.end_object();
  }
  json.end_array();
  json.end_object();

  ensure_dir(out_dir);
  write_text(out_dir / "validation.json", json.str());

  os << (oracle_ok ? "validation passed" : "validation FAILED") << (report.has_warnings() ? " (with warnings)" : "")
     << "\n";
  return oracle_ok ? kSuccess : kValidationFailure;
}

int cmd_spectrum(const RunConfig& cfg, int n_max, int m_max, const fs::path& out_dir, std::ostream& os) {
  if (n_max < 0 || m_max < 0) throw ConfigError("n_max and m_max must be nonnegative");
  const auto scales = cfg.system.scales();

  std::vector<std::vector<std::string>> rows;
  for (const auto sigma : {spectrum::Sigma::minus, spectrum::Sigma::plus}) {
    for (int n_xi = 0; n_xi <= n_max; ++n_xi) {
      for (int m = -m_max; m <= m_max; ++m) {
        const spectrum::QuantumNumbers q{n_xi, m, sigma};
        rows.push_back({std::to_string(spectrum::to_int(sigma)), std::to_string(n_xi), std::to_string(m),
                        std::to_string(spectrum::collapse_quantum_number(q)),
                        format_sci(spectrum::energy_eigenvalue(q, scales.hbar_omega))});
      }
    }
  }
  constexpr std::string_view header[] = {"sigma", "n_xi", "m", "n", "energy_J"};
  ensure_dir(out_dir);
  write_csv(out_dir / "spectrum.csv", header, rows);
  os << "wrote " << rows.size() << " levels to " << (out_dir / "spectrum.csv").string() << "\n";
  return kSuccess;
}

int cmd_sweep(const RunConfig& cfg, const fs::path& out_dir, std::ostream& os) {
  if (!cfg.sweep) throw ConfigError("sweep requires sweep.inv_b_min, sweep.inv_b_max and sweep.steps");
  const auto& sw = *cfg.sweep;
  const auto gas = dhva::GasParameters::from(cfg.system);
  const auto points = dhva::sweep(sw.inv_b_min, sw.inv_b_max, sw.steps, gas);
  const auto analysis = dhva::analyze(points, gas);

  std::vector<std::vector<std::string>> fig1, fig2, fig3;
  fig1.reserve(points.size());
  fig2.reserve(points.size());
  fig3.reserve(points.size());
  for (const auto& pt : points) {
    const auto x = format_sci(pt.inv_b);
    fig1.push_back({x, format_sci(pt.partial)});
    fig2.push_back({x, format_sci(pt.energy_partial)});
    fig3.push_back({x, format_sci(pt.magnetization)});
  }

  JsonWriter json;
  json.begin_object();
  json.key("jumps").numbers(analysis.jump_positions());
  if (analysis.period)
    json.key("period").number(analysis.period->period);
  else
    json.key("period").null();
  json.key("jump_amplitude").number(analysis.jump_amplitude);
  json.key("onsager_area").number(analysis.fermi_area);
  json.key("d_coefficient").number(gas.rho_flux);
  json.key("min_field_formula").number(units::min_field(cfg.system.mu));
  json.key("min_field_paper_printed").number(kQuotedMinField);
  if (analysis.period)
    json.key("period_max_deviation").number(analysis.period->max_deviation);
  else
    json.key("period_max_deviation").null();
  json.key("sawtooth_amplitude").number(analysis.sawtooth_amplitude);
  json.end_object();

  ensure_dir(out_dir);
  constexpr std::string_view h1[] = {"inv_b_Teff_inv", "partial_atoms"};
  constexpr std::string_view h2[] = {"inv_b_Teff_inv", "energy_partial_J"};
  constexpr std::string_view h3[] = {"inv_b_Teff_inv", "magnetization_JsT"};
  write_csv(out_dir / "figure1.csv", h1, fig1);
  write_csv(out_dir / "figure2.csv", h2, fig2);
  write_csv(out_dir / "figure3.csv", h3, fig3);
  write_text(out_dir / "analysis.json", json.str());

  os << "swept " << points.size() << " points, " << analysis.jumps.size() << " level boundaries\n";
  if (analysis.period) os << "  period          " << format_sci(analysis.period->period) << " 1/T_eff\n";
  os << "  jump amplitude  " << format_sci(analysis.jump_amplitude) << " J s/T\n"
     << "  Fermi area      " << format_sci(analysis.fermi_area) << " m^-2\n";
  return kSuccess;
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Landau-Aharonov-Casher levels and de Haas-van Alphen oscillations of a 2D dipole gas", "lacdhva"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_override;
  int n_max = 3;
  int m_max = 3;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key=value configuration file")->required();
    sub->add_option("--out", out_override, "output directory (overrides output.dir)");
  };
  auto* validate = app.add_subcommand("validate", "check field conditions and the finite-difference oracle");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "tabulate LAC eigenvalues");
  auto* sweep_cmd = app.add_subcommand("sweep", "inverse-field sweep: figure datasets and oscillation analysis");
  add_common(validate);
  add_common(spectrum_cmd);
  add_common(sweep_cmd);
  spectrum_cmd->add_option("--n-max", n_max, "largest n_xi")->check(CLI::NonNegativeNumber);
  spectrum_cmd->add_option("--m-max", m_max, "largest |m|")->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kConfigError;
  }

  RunConfig cfg;
  try {
    cfg = load_run_config(config_path);
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }
  const fs::path out_dir = out_override.empty() ? cfg.output_dir : fs::path(out_override);

  try {
    if (validate->parsed()) return cmd_validate(cfg, out_dir, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(cfg, n_max, m_max, out_dir, out);
    return cmd_sweep(cfg, out_dir, out);
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace lacdhva::cli
