#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/format.hpp"
#include "cli/run_config.hpp"
#include "lacdhva/errors.hpp"

using namespace lacdhva;
namespace fs = std::filesystem;

namespace {

constexpr const char* kPaperConfig = R"(# reference cloud
atom.mass_kg      = 1.443e-25
atom.mu_J_per_T   = 4.64e-22
cloud.area_m2     = 1.5e-10
cloud.natoms      = 10000
field.b_eff_Teff  = 8.55e18
field.sigma       = +1
sweep.inv_b_min   = 1.17e-19
sweep.inv_b_max   = 1.17e-18
sweep.steps       = 1000
)";

cli::RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return cli::parse_run_config(in);
}

std::string replace_line(std::string text, const std::string& key, const std::string& line) {
  const auto pos = text.find(key);
  const auto end = text.find('\n', pos);
  return text.replace(pos, end - pos, line);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("lacdhva_test_" + name);
  fs::remove_all(dir);
  return dir;
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  fs::create_directories(dir);
  const auto path = dir / "run.cfg";
  std::ofstream(path) << text;
  return path;
}

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "lacdhva");
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

}  // namespace

TEST_CASE("format_sci") {
  CHECK(cli::format_sci(1.0) == "1.00000000000e+00");
  CHECK(cli::format_sci(-3.76e-44) == "-3.76000000000e-44");
  CHECK(cli::format_sci(0.0) == "0.00000000000e+00");
  CHECK(cli::format_sci(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(cli::format_sci(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("JsonWriter output parses") {
  cli::JsonWriter w;
  w.begin_object();
  w.key("a").number(1.5);
  w.key("s").string("quote\" and \\ backslash\n");
  w.key("list").numbers(std::vector<double>{1.0, 2.0});
  w.key("none").number(std::numeric_limits<double>::infinity());
  w.key("flag").boolean(true);
  w.key("nested").begin_array().begin_object().key("k").integer(-3).end_object().end_array();
  w.end_object();
  const auto j = nlohmann::json::parse(w.str());
  CHECK(j["a"].get<double>() == 1.5);
  CHECK(j["s"].get<std::string>() == "quote\" and \\ backslash\n");
  CHECK(j["list"].size() == 2);
  CHECK(j["none"].is_null());
  CHECK(j["flag"].get<bool>());
  CHECK(j["nested"][0]["k"].get<int>() == -3);
}

TEST_CASE("config parsing") {
  const auto cfg = parse(kPaperConfig);
  CHECK(cfg.system.mass == 1.443e-25);
  CHECK(cfg.system.natoms == 10000);
  CHECK(cfg.system.sigma == spectrum::Sigma::plus);
  REQUIRE(cfg.sweep.has_value());
  CHECK(cfg.sweep->steps == 1000);
  CHECK(cfg.output_dir == "out");

  CHECK(parse(replace_line(kPaperConfig, "cloud.natoms", "cloud.natoms = 1e4")).system.natoms == 10000);
  CHECK(parse(replace_line(kPaperConfig, "field.sigma", "field.sigma = -1")).system.sigma == spectrum::Sigma::minus);
  CHECK(parse(std::string(kPaperConfig) + "output.dir = somewhere # trailing\n").output_dir == "somewhere");

  std::string no_sweep = kPaperConfig;
  no_sweep = replace_line(no_sweep, "sweep.inv_b_min", "");
  no_sweep = replace_line(no_sweep, "sweep.inv_b_max", "");
  no_sweep = replace_line(no_sweep, "sweep.steps", "");
  CHECK_FALSE(parse(no_sweep).sweep.has_value());
}

TEST_CASE("config errors") {
  const std::string base = kPaperConfig;
  const std::vector<std::string> bad{
      replace_line(base, "cloud.natoms", "cloud.natoms = 0"),
      replace_line(base, "cloud.natoms", "cloud.natoms = 12.5"),
      replace_line(base, "atom.mass_kg", "atom.mass_kg = -1"),
      replace_line(base, "atom.mass_kg", "atom.mass_kg = heavy"),
      replace_line(base, "field.sigma", "field.sigma = 0"),
      replace_line(base, "field.b_eff_Teff", "field.b_eff_Teff = 0"),
      replace_line(base, "cloud.area_m2", ""),
      replace_line(base, "sweep.steps", ""),
      replace_line(base, "sweep.steps", "sweep.steps = 1"),
      replace_line(base, "sweep.inv_b_max", "sweep.inv_b_max = 1e-20"),
      base + "atom.mass_kg = 1.0\n",
      base + "atom.spin = 1\n",
      base + "just some words\n",
      base + "output.dir =\n",
  };
  for (const auto& text : bad) CHECK_THROWS_AS((void)parse(text), ConfigError);
  CHECK_THROWS_AS((void)cli::load_run_config("/nonexistent/lacdhva.cfg"), ConfigError);
}

TEST_CASE("exit codes") {
  const auto dir = scratch("exit");
  const auto good = write_config(dir / "good", kPaperConfig);
  const auto zero = write_config(dir / "zero", replace_line(kPaperConfig, "cloud.natoms", "cloud.natoms = 0"));

  CHECK(run({"sweep", "--config", zero.string(), "--out", (dir / "o").string()}) == cli::kConfigError);
  CHECK(run({"sweep", "--config", (dir / "missing.cfg").string()}) == cli::kConfigError);
  CHECK(run({"frobnicate"}) == cli::kConfigError);
  CHECK(run({"sweep"}) == cli::kConfigError);
  CHECK(run({"--help"}) == cli::kSuccess);

  // A regular file where the output directory should go.
  const auto blocker = dir / "blocker";
  std::ofstream(blocker) << "x";
  CHECK(run({"sweep", "--config", good.string(), "--out", (blocker / "sub").string()}) == cli::kIoError);

  CHECK(run({"sweep", "--config", good.string(), "--out", (dir / "o").string()}) == cli::kSuccess);
  fs::remove_all(dir);
}

TEST_CASE("spectrum command") {
  const auto dir = scratch("spectrum");
  const auto cfg = write_config(dir, kPaperConfig);
  CHECK(run({"spectrum", "--config", cfg.string(), "--out", (dir / "o").string(), "--n-max", "2", "--m-max", "1"}) ==
        cli::kSuccess);
  std::istringstream csv(slurp(dir / "o" / "spectrum.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "sigma,n_xi,m,n,energy_J");
  int rows = 0;
  std::getline(csv, line);
  CHECK(line.rfind("-1,0,-1,", 0) == 0);
  ++rows;
  while (std::getline(csv, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 2 * 3 * 3);
  fs::remove_all(dir);
}

TEST_CASE("sweep command outputs") {
  const auto dir = scratch("sweep");
  const auto cfg = write_config(dir, kPaperConfig);
  REQUIRE(run({"sweep", "--config", cfg.string(), "--out", (dir / "a").string()}) == cli::kSuccess);
  REQUIRE(run({"sweep", "--config", cfg.string(), "--out", (dir / "b").string()}) == cli::kSuccess);

  const std::vector<std::pair<std::string, std::string>> files{
      {"figure1.csv", "inv_b_Teff_inv,partial_atoms"},
      {"figure2.csv", "inv_b_Teff_inv,energy_partial_J"},
      {"figure3.csv", "inv_b_Teff_inv,magnetization_JsT"},
  };
  for (const auto& [name, header] : files) {
    const auto a = slurp(dir / "a" / name);
    CHECK(a == slurp(dir / "b" / name));
    CHECK(a.substr(0, a.find('\n')) == header);
    CHECK(std::count(a.begin(), a.end(), '\n') == 1001);
  }
  CHECK(slurp(dir / "a" / "analysis.json") == slurp(dir / "b" / "analysis.json"));

  const auto j = nlohmann::json::parse(slurp(dir / "a" / "analysis.json"));
  for (const char* key : {"jumps", "period", "jump_amplitude", "onsager_area", "d_coefficient", "min_field_formula",
                          "min_field_paper_printed"})
    CHECK(j.contains(key));
  CHECK(j["jumps"].size() == 9);
  CHECK(j["period"].get<double>() == doctest::Approx(1.17e-19).epsilon(5e-3));
  CHECK(j["jump_amplitude"].get<double>() == doctest::Approx(3.76e-44).epsilon(0.01));
  CHECK(j["min_field_paper_printed"].get<double>() == 40.93);
  fs::remove_all(dir);
}

TEST_CASE("validate command") {
  const auto dir = scratch("validate");
  const auto cfg = write_config(dir, kPaperConfig);
  std::string text;
  CHECK(run({"validate", "--config", cfg.string(), "--out", (dir / "o").string()}, &text) == cli::kSuccess);
  CHECK(text.find("validation passed") != std::string::npos);
  const auto j = nlohmann::json::parse(slurp(dir / "o" / "validation.json"));
  CHECK(j["passed"].get<bool>());
  CHECK(j["fd_oracle"].size() == 2 * 7 * 4);
  CHECK(j["conditions"].size() == 4);
  fs::remove_all(dir);
}
