#include "lacdhva/dhva.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lacdhva/errors.hpp"

namespace lacdhva::dhva {

namespace {

constexpr double kSnapTolerance = 1e-12;

void require_field(double b) {
  if (!std::isfinite(b) || b <= 0.0) throw DomainError("field strength must be positive");
}

}  // namespace

FillingState fill_levels(std::int64_t natoms, double degeneracy) {
  if (natoms < 1) throw DomainError("fill_levels: need at least one atom");
  if (!std::isfinite(degeneracy) || degeneracy <= 0.0) throw DomainError("fill_levels: degeneracy must be positive");

  const double n = static_cast<double>(natoms);
  const double ratio = n / degeneracy;
  const double nearest = std::round(ratio);
  FillingState state{.p = 0, .partial = 0.0, .degeneracy_at_field = degeneracy};
  if (std::abs(ratio - nearest) <= kSnapTolerance * std::max(1.0, ratio)) {
    state.p = static_cast<std::int64_t>(nearest);
    return state;
  }
  state.p = static_cast<std::int64_t>(std::floor(ratio));
  state.partial = std::clamp(n - static_cast<double>(state.p) * degeneracy, 0.0, degeneracy);
  return state;
}

GasParameters GasParameters::from(const spectrum::SystemConfig& cfg, const units::PhysicalConstants& k) {
  cfg.check();
  return GasParameters{
      .natoms = static_cast<double>(cfg.natoms),
      .rho_flux = units::flux_density_factor(cfg.mu, cfg.area, k),
      .mu_b_eff = units::effective_bohr_magneton(cfg.mu, cfg.mass, k),
      .level_spacing_per_field = k.hbar * units::cyclotron_magnitude(cfg.mu, cfg.mass, 1.0, k),
  };
}

FillingState fill_at(double b, const GasParameters& gas) {
  require_field(b);
  return fill_levels(static_cast<std::int64_t>(gas.natoms), gas.rho_flux * b);
}

double total_energy_sum(double b, const GasParameters& gas) {
  const auto state = fill_at(b, gas);
  const double spacing = gas.level_spacing_per_field * b;
  const double d = state.degeneracy_at_field;
  double energy = 0.0;
  for (std::int64_t n = 0; n < state.p; ++n) energy += (n + 0.5) * spacing * d;
  energy += state.partial * spacing * (state.p + 0.5);
  return energy;
}

double total_energy_closed(double b, const GasParameters& gas) {
  const double p = static_cast<double>(fill_at(b, gas).p);
  const double n_over_rho = gas.natoms / gas.rho_flux;
  return -gas.mu_b_eff * gas.rho_flux * (b * b * p * (p + 1.0) - n_over_rho * b * (2.0 * p + 1.0));
}

double partial_energy_at(double b, std::int64_t p, const GasParameters& gas) {
  require_field(b);
  const double pp = static_cast<double>(p);
  const double n_over_rho = gas.natoms / gas.rho_flux;
  return -gas.mu_b_eff * gas.rho_flux * (pp * b - n_over_rho) * ((pp + 1.0) * b - n_over_rho);
}

double magnetization_at(double b, std::int64_t p, const GasParameters& gas) {
  require_field(b);
  const double pp = static_cast<double>(p);
  const double n_over_rho = gas.natoms / gas.rho_flux;
  return gas.mu_b_eff * gas.rho_flux * (2.0 * b * pp * (pp + 1.0) - n_over_rho * (2.0 * pp + 1.0));
}

double partial_energy(double b, const GasParameters& gas) { return partial_energy_at(b, fill_at(b, gas).p, gas); }

double magnetization(double b, const GasParameters& gas) { return magnetization_at(b, fill_at(b, gas).p, gas); }

std::vector<SweepPoint> sweep(double inv_b_min, double inv_b_max, int steps, const GasParameters& gas) {
  if (!std::isfinite(inv_b_min) || !std::isfinite(inv_b_max) || !(inv_b_min > 0.0) || !(inv_b_max > inv_b_min))
    throw DomainError("sweep: need 0 < inv_b_min < inv_b_max");
  if (steps < 2) throw DomainError("sweep: need at least two steps");

  std::vector<SweepPoint> points(static_cast<std::size_t>(steps));
  const double step = (inv_b_max - inv_b_min) / (steps - 1);
  for (int i = 0; i < steps; ++i) {
    auto& pt = points[i];
    pt.inv_b = i + 1 == steps ? inv_b_max : inv_b_min + i * step;
    pt.b = 1.0 / pt.inv_b;
    const auto state = fill_at(pt.b, gas);
    pt.p = state.p;
    pt.partial = state.partial;
    pt.energy_total = total_energy_closed(pt.b, gas);
    pt.energy_partial = partial_energy_at(pt.b, state.p, gas);
    pt.magnetization = magnetization_at(pt.b, state.p, gas);
  }
  return points;
}

double boundary_inv_field(std::int64_t p, const GasParameters& gas) {
  return static_cast<double>(p) * gas.rho_flux / gas.natoms;
}

std::vector<double> detect_jumps(std::span<const SweepPoint> points, const GasParameters& gas) {
  if (points.size() < 2) throw PreconditionError("detect_jumps: need at least two sweep points");
  std::vector<double> jumps;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    for (std::int64_t p = points[i].p + 1; p <= points[i + 1].p; ++p) jumps.push_back(boundary_inv_field(p, gas));
  }
  std::sort(jumps.begin(), jumps.end());
  return jumps;
}

PeriodEstimate dhva_period(std::span<const double> jumps) {
  if (jumps.size() < 2) throw InsufficientDataError("dhva_period: need at least two jumps");
  if (!std::is_sorted(jumps.begin(), jumps.end())) throw PreconditionError("dhva_period: jumps must be ascending");

  PeriodEstimate est;
  est.period = (jumps.back() - jumps.front()) / static_cast<double>(jumps.size() - 1);
  for (std::size_t i = 1; i < jumps.size(); ++i)
    est.max_deviation = std::max(est.max_deviation, std::abs((jumps[i] - jumps[i - 1]) - est.period) / est.period);
  return est;
}

double onsager_area(std::int64_t natoms, double rho_flux, const units::PhysicalConstants& k) {
  if (natoms < 1) throw DomainError("onsager_area: need at least one atom");
  if (!(rho_flux > 0.0)) throw DomainError("onsager_area: rho must be positive");
  return 2.0 * std::numbers::pi * static_cast<double>(natoms) / (k.hbar * rho_flux);
}

std::vector<double> OscillationAnalysis::jump_positions() const {
  std::vector<double> out;
  out.reserve(jumps.size());
  for (const auto& j : jumps) out.push_back(j.inv_b);
  return out;
}

OscillationAnalysis analyze(std::span<const SweepPoint> points, const GasParameters& gas,
                            const units::PhysicalConstants& k) {
  OscillationAnalysis out;
  const auto positions = detect_jumps(points, gas);

  double m_max = -std::numeric_limits<double>::infinity();
  double m_min = std::numeric_limits<double>::infinity();
  for (const auto& pt : points) {
    m_max = std::max(m_max, pt.magnetization);
    m_min = std::min(m_min, pt.magnetization);
  }

  double jump_sum = 0.0;
  for (const double inv_b : positions) {
    const double b = 1.0 / inv_b;
    JumpRecord rec;
    rec.inv_b = inv_b;
    rec.p = std::llround(inv_b * gas.natoms / gas.rho_flux);
    rec.magnetization_below = magnetization_at(b, rec.p - 1, gas);
    rec.magnetization_above = magnetization_at(b, rec.p, gas);
    rec.energy_partial_below = partial_energy_at(b, rec.p - 1, gas);
    rec.energy_partial_above = partial_energy_at(b, rec.p, gas);
    m_max = std::max({m_max, rec.magnetization_below, rec.magnetization_above});
    m_min = std::min({m_min, rec.magnetization_below, rec.magnetization_above});
    jump_sum += rec.jump();
    out.jumps.push_back(rec);
  }

  if (positions.size() >= 2) out.period = dhva_period(positions);
  out.jump_amplitude = out.jumps.empty() ? 2.0 * gas.natoms * gas.mu_b_eff
                                         : jump_sum / static_cast<double>(out.jumps.size());
  out.sawtooth_amplitude = m_max - m_min;
  out.fermi_area = onsager_area(static_cast<std::int64_t>(gas.natoms), gas.rho_flux, k);
  return out;
}

}  // namespace lacdhva::dhva
