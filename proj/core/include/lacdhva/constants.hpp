#pragma once

// Physical constants and the derived scales of a LAC system.
//
// Everything is SI. The synthetic field B_AC = rho0/eps0 is carried in the
// effective unit T_eff = N/(C m); the dipole sign lives in sigma, never in
// field magnitudes.

namespace lacdhva::units {

/// Frozen CODATA 2018 values.
struct PhysicalConstants {
  double hbar;      // J s
  double h;         // J s
  double c;         // m/s
  double epsilon0;  // F/m
  double mu_bohr;   // J/T
};

/// Returns the frozen constant set. Every operation that needs constants
/// takes a PhysicalConstants argument defaulted to this value; passing a
/// modified copy is the only override mechanism.
[[nodiscard]] const PhysicalConstants& load_constants() noexcept;

/// Synthetic field magnitude |rho0|/eps0 in T_eff.
struct EffectiveField {
  double value = 0.0;

  /// Throws DomainError unless value is finite and strictly positive.
  static EffectiveField checked(double value);
};

/// Per-system scales at one field strength.
struct DerivedScales {
  double mu_b_eff;    // effective Bohr magneton hbar|mu|/(2Mc^2), J s/T
  double rho_flux;    // degeneracy per T_eff, |mu|A/(c^2 h)
  double a_ac;        // magnetic length sqrt(hbar/(M|omega|)), m
  double hbar_omega;  // level spacing hbar|omega_AC|, J
};

[[nodiscard]] double effective_bohr_magneton(double mu, double mass,
                                             const PhysicalConstants& k = load_constants());

/// Degeneracy coefficient rho, so that D = rho * B_AC.
[[nodiscard]] double flux_density_factor(double mu, double area,
                                         const PhysicalConstants& k = load_constants());

/// Lower bound 2 hbar c^2/|mu| of the field regime where the analytic
/// LAC solution holds (in T_eff).
[[nodiscard]] double min_field(double mu, const PhysicalConstants& k = load_constants());

/// |omega_AC| = |mu| B/(M c^2), rad/s.
[[nodiscard]] double cyclotron_magnitude(double mu, double mass, double b_eff,
                                         const PhysicalConstants& k = load_constants());

[[nodiscard]] DerivedScales derive_scales(double mass, double mu, double area, double b_eff,
                                          const PhysicalConstants& k = load_constants());

}  // namespace lacdhva::units
