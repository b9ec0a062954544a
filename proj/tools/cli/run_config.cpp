#include "run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <string>
#include <string_view>

#include "lacdhva/errors.hpp"

namespace lacdhva::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  int line = 0;
};

[[noreturn]] void fail(const Entry& e, const std::string& key, const std::string& why) {
  throw ConfigError("line " + std::to_string(e.line) + ": " + key + ": " + why);
}

double to_real(const std::string& key, const Entry& e) {
  double value = 0.0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  if (first != last && *first == '+') ++first;  // from_chars rejects a leading '+'
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) fail(e, key, "not a finite number: '" + e.value + "'");
  return value;
}

std::int64_t to_integer(const std::string& key, const Entry& e) {
  // Accept integer-valued reals such as 1e4.
  const double value = to_real(key, e);
  if (value != std::floor(value) || std::abs(value) > 9.0e15) fail(e, key, "not an integer: '" + e.value + "'");
  return static_cast<std::int64_t>(value);
}

}  // namespace

RunConfig parse_run_config(std::istream& in) {
  static const std::map<std::string, bool, std::less<>> kKnown{
      {"atom.mass_kg", true},     {"atom.mu_J_per_T", true},  {"cloud.area_m2", true},
      {"cloud.natoms", true},     {"field.b_eff_Teff", true}, {"field.sigma", true},
      {"sweep.inv_b_min", false}, {"sweep.inv_b_max", false}, {"sweep.steps", false},
      {"output.dir", false},
  };

  std::map<std::string, Entry, std::less<>> entries;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!kKnown.contains(key)) throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (value.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty value for '" + key + "'");
    if (!entries.emplace(key, Entry{value, line_no}).second)
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
  }

  for (const auto& [key, required] : kKnown)
    if (required && !entries.contains(key)) throw ConfigError("missing required key '" + key + "'");

  auto real = [&](const std::string& key) { return to_real(key, entries.at(key)); };

  RunConfig cfg;
  auto& sys = cfg.system;
  sys.mass = real("atom.mass_kg");
  sys.mu = real("atom.mu_J_per_T");
  sys.area = real("cloud.area_m2");
  sys.natoms = to_integer("cloud.natoms", entries.at("cloud.natoms"));
  sys.b_eff = units::EffectiveField{real("field.b_eff_Teff")};
  const auto& sigma_entry = entries.at("field.sigma");
  const auto sigma = to_integer("field.sigma", sigma_entry);
  if (sigma != 1 && sigma != -1) fail(sigma_entry, "field.sigma", "must be +1 or -1");
  sys.sigma = spectrum::sigma_from_int(static_cast<int>(sigma));
  sys.check();

  const int sweep_keys = static_cast<int>(entries.contains("sweep.inv_b_min")) +
                         static_cast<int>(entries.contains("sweep.inv_b_max")) +
                         static_cast<int>(entries.contains("sweep.steps"));
  if (sweep_keys == 3) {
    SweepSpec sw;
    sw.inv_b_min = real("sweep.inv_b_min");
    sw.inv_b_max = real("sweep.inv_b_max");
    const auto& steps_entry = entries.at("sweep.steps");
    const auto steps = to_integer("sweep.steps", steps_entry);
    if (steps < 2 || steps > 100'000'000) fail(steps_entry, "sweep.steps", "must be in [2, 1e8]");
    sw.steps = static_cast<int>(steps);
    if (!(sw.inv_b_min > 0.0) || !(sw.inv_b_max > sw.inv_b_min))
      throw ConfigError("sweep range must satisfy 0 < inv_b_min < inv_b_max");
    cfg.sweep = sw;
  } else if (sweep_keys != 0) {
    throw ConfigError("sweep.inv_b_min, sweep.inv_b_max and sweep.steps must be given together");
  }

  if (const auto it = entries.find("output.dir"); it != entries.end()) cfg.output_dir = it->second.value;
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_run_config(in);
}

}  // namespace lacdhva::cli
