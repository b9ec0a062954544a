#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lacdhva/constants.hpp"

namespace lacdhva::spectrum {

/// Revolution direction of the classical orbit, sign(mu rho0).
enum class Sigma : int { minus = -1, plus = 1 };

[[nodiscard]] constexpr int to_int(Sigma s) noexcept { return static_cast<int>(s); }

/// Throws DomainError unless value is +1 or -1.
[[nodiscard]] Sigma sigma_from_int(int value);

/// A 2D cloud of dipoles in the radial field E = rho0 r/(2 eps0).
struct SystemConfig {
  double mass = 0.0;          // kg
  double mu = 0.0;            // J/T, signed moment along z
  double area = 0.0;          // m^2
  std::int64_t natoms = 0;
  units::EffectiveField b_eff;  // |rho0|/eps0
  Sigma sigma = Sigma::plus;

  /// Builds a config from a signed charge density; sigma = sign(mu rho0).
  static SystemConfig from_charge_density(double mass, double mu, double area, std::int64_t natoms,
                                          double rho0,
                                          const units::PhysicalConstants& k = units::load_constants());

  /// Throws ConfigError on non-positive mass, area or field, zero moment or
  /// natoms < 1.
  void check() const;

  [[nodiscard]] units::DerivedScales scales(
      const units::PhysicalConstants& k = units::load_constants()) const;
};

struct QuantumNumbers {
  int n_xi = 0;  // radial quantum number, >= 0
  int m = 0;     // angular momentum quantum number
  Sigma sigma = Sigma::plus;
};

struct LandauLevel {
  int n = 0;  // collapsed index
  double energy = 0.0;
  double degeneracy = 0.0;
};

/// Signed omega_AC = sigma |mu| B/(M c^2).
[[nodiscard]] double cyclotron_frequency(const SystemConfig& cfg,
                                         const units::PhysicalConstants& k = units::load_constants());

/// E = hbar|omega| (n_xi + |m|/2 + sigma m/2 + sigma/2 + 1/2).
[[nodiscard]] double energy_eigenvalue(const QuantumNumbers& q, double hbar_omega);

/// n = n_xi + (|m| + sigma m)/2.
[[nodiscard]] int collapse_quantum_number(const QuantumNumbers& q);

/// E_n = hbar|omega| (n + (1 + sigma)/2).
[[nodiscard]] double collapsed_energy(int n, Sigma sigma, double hbar_omega);

/// D = rho B, kept real-valued.
[[nodiscard]] double degeneracy(double rho_flux, double b_eff);

[[nodiscard]] LandauLevel landau_level(int n, const SystemConfig& cfg,
                                       const units::PhysicalConstants& k = units::load_constants());

/// Normalized radial eigenfunction R_{n_xi,m}(r). The normalization constant
/// is computed once at construction.
class RadialEigenstate {
 public:
  RadialEigenstate(int n_xi, int m, double a_ac);

  /// Amplitude in 1/m; integrates to one against r dr.
  [[nodiscard]] double operator()(double r) const;

  /// Amplitude at s = r/a_ac in units of the magnetic length, normalized
  /// against s ds.
  [[nodiscard]] double dimensionless(double s) const;

  [[nodiscard]] int n_xi() const noexcept { return n_xi_; }
  [[nodiscard]] int abs_m() const noexcept { return abs_m_; }
  [[nodiscard]] double magnetic_length() const noexcept { return a_ac_; }

 private:
  int n_xi_;
  int abs_m_;
  double a_ac_;
  double norm_;
};

/// One-shot evaluation; prefer RadialEigenstate for repeated samples.
[[nodiscard]] double radial_wavefunction(const QuantumNumbers& q, double r, double a_ac);

enum class CheckStatus { pass, warn };

struct ConditionCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct ValidationReport {
  std::vector<ConditionCheck> checks;
  double min_field = 0.0;  // 2 hbar c^2/|mu|, T_eff
  double field_ratio = 0.0;  // b_eff / min_field

  [[nodiscard]] bool has_warnings() const;
};

/// Field strength must exceed min_field by this factor to pass condition (iv).
inline constexpr double kMinFieldMargin = 100.0;

/// Checks the field-dipole conditions for LAC quantization. Throws
/// ConfigError when the config itself is invalid.
[[nodiscard]] ValidationReport validate_config(const SystemConfig& cfg,
                                               const units::PhysicalConstants& k = units::load_constants());

}  // namespace lacdhva::spectrum
