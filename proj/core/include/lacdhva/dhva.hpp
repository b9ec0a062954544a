#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lacdhva/spectrum.hpp"

namespace lacdhva::dhva {

/// Zero-temperature occupation: p levels completely filled, the remainder in
/// level p+1.
struct FillingState {
  std::int64_t p = 0;
  double partial = 0.0;  // atoms in level p+1, N - pD
  double degeneracy_at_field = 0.0;
};

/// p = floor(N/D), partial = N - pD. At an exact boundary N = pD the state
/// is "p levels full, next one empty"; ratios within 1e-12 of an integer are
/// snapped to it.
[[nodiscard]] FillingState fill_levels(std::int64_t natoms, double degeneracy);

/// Field-independent parameters of the Fermi gas.
struct GasParameters {
  double natoms = 0.0;
  double rho_flux = 0.0;  // degeneracy per T_eff
  double mu_b_eff = 0.0;  // J s/T
  // hbar|omega_AC| per T_eff from the cyclotron chain hbar|mu|/(M c^2).
  double level_spacing_per_field = 0.0;

  [[nodiscard]] static GasParameters from(const spectrum::SystemConfig& cfg,
                                          const units::PhysicalConstants& k = units::load_constants());
};

[[nodiscard]] FillingState fill_at(double b, const GasParameters& gas);

/// Total energy as the explicit level sum with E_n = (n + 1/2) hbar|omega|.
[[nodiscard]] double total_energy_sum(double b, const GasParameters& gas);

/// -mu_eff rho (B^2 p(p+1) - (N/rho) B (2p+1)).
[[nodiscard]] double total_energy_closed(double b, const GasParameters& gas);

/// Energy of the partly filled level, -mu_eff rho [pB - N/rho][(p+1)B - N/rho].
[[nodiscard]] double partial_energy(double b, const GasParameters& gas);

/// Effective magnetization -d(partial_energy)/dB at fixed p.
[[nodiscard]] double magnetization(double b, const GasParameters& gas);

// Explicit-filling variants, used for one-sided limits at level boundaries.
[[nodiscard]] double partial_energy_at(double b, std::int64_t p, const GasParameters& gas);
[[nodiscard]] double magnetization_at(double b, std::int64_t p, const GasParameters& gas);

struct SweepPoint {
  double inv_b = 0.0;  // 1/T_eff
  double b = 0.0;      // T_eff
  std::int64_t p = 0;
  double partial = 0.0;
  double energy_total = 0.0;    // J
  double energy_partial = 0.0;  // J
  double magnetization = 0.0;   // J s/T
};

/// Uniform grid in 1/B, both endpoints included, ascending.
[[nodiscard]] std::vector<SweepPoint> sweep(double inv_b_min, double inv_b_max, int steps,
                                            const GasParameters& gas);

/// Boundary 1/B = p rho/N at which level p+1 starts to fill.
[[nodiscard]] double boundary_inv_field(std::int64_t p, const GasParameters& gas);

/// Level boundaries crossed between adjacent sweep samples, placed at their
/// analytic positions p rho/N. Ascending; empty when none is crossed.
[[nodiscard]] std::vector<double> detect_jumps(std::span<const SweepPoint> points, const GasParameters& gas);

struct PeriodEstimate {
  double period = 0.0;
  double max_deviation = 0.0;  // max |spacing - period| / period
};

/// Mean spacing of the jump positions. Throws InsufficientDataError for
/// fewer than two jumps.
[[nodiscard]] PeriodEstimate dhva_period(std::span<const double> jumps);

/// Onsager-like Fermi-circle area S = 2 pi N/(hbar rho), m^-2.
[[nodiscard]] double onsager_area(std::int64_t natoms, double rho_flux,
                                  const units::PhysicalConstants& k = units::load_constants());

/// Observables on both sides of one level boundary. "below" is the smaller
/// 1/B side (p - 1 full levels), "above" the larger 1/B side.
struct JumpRecord {
  double inv_b = 0.0;
  std::int64_t p = 0;  // levels completely filled exactly at the boundary
  double magnetization_below = 0.0;
  double magnetization_above = 0.0;
  double energy_partial_below = 0.0;
  double energy_partial_above = 0.0;

  [[nodiscard]] double jump() const noexcept { return magnetization_above - magnetization_below; }
};

struct OscillationAnalysis {
  std::vector<JumpRecord> jumps;
  std::optional<PeriodEstimate> period;  // set when at least two jumps
  double jump_amplitude = 0.0;    // mean one-sided jump, or 2 N mu_eff without jumps
  double sawtooth_amplitude = 0.0;  // max - min of M over samples and boundary limits
  double fermi_area = 0.0;

  [[nodiscard]] std::vector<double> jump_positions() const;
};

[[nodiscard]] OscillationAnalysis analyze(std::span<const SweepPoint> points, const GasParameters& gas,
                                          const units::PhysicalConstants& k = units::load_constants());

}  // namespace lacdhva::dhva
