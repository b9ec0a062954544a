#include "lacdhva/constants.hpp"

#include <cmath>
#include <numbers>

#include "lacdhva/errors.hpp"

namespace lacdhva::units {

namespace {

constexpr double kPlanck = 6.62607015e-34;

constexpr PhysicalConstants kCodata2018{
    .hbar = kPlanck / (2.0 * std::numbers::pi),
    .h = kPlanck,
    .c = 299792458.0,
    .epsilon0 = 8.8541878128e-12,
    .mu_bohr = 9.2740100783e-24,
};

void require_moment(double mu) {
  if (!std::isfinite(mu) || mu == 0.0) throw DomainError("magnetic moment must be finite and nonzero");
}

void require_positive(double value, const char* what) {
  if (!std::isfinite(value) || value <= 0.0) throw DomainError(std::string(what) + " must be positive");
}

}  // namespace

const PhysicalConstants& load_constants() noexcept { return kCodata2018; }

EffectiveField EffectiveField::checked(double value) {
  require_positive(value, "effective field");
  return EffectiveField{value};
}

double effective_bohr_magneton(double mu, double mass, const PhysicalConstants& k) {
  require_moment(mu);
  require_positive(mass, "mass");
  return k.hbar * std::abs(mu) / (2.0 * mass * k.c * k.c);
}

double flux_density_factor(double mu, double area, const PhysicalConstants& k) {
  require_moment(mu);
  require_positive(area, "area");
  return std::abs(mu) * area / (k.c * k.c * k.h);
}

double min_field(double mu, const PhysicalConstants& k) {
  require_moment(mu);
  return 2.0 * k.hbar * k.c * k.c / std::abs(mu);
}

double cyclotron_magnitude(double mu, double mass, double b_eff, const PhysicalConstants& k) {
  require_moment(mu);
  require_positive(mass, "mass");
  require_positive(b_eff, "effective field");
  return std::abs(mu) * b_eff / (mass * k.c * k.c);
}

DerivedScales derive_scales(double mass, double mu, double area, double b_eff,
                            const PhysicalConstants& k) {
  const double omega = cyclotron_magnitude(mu, mass, b_eff, k);
  return DerivedScales{
      .mu_b_eff = effective_bohr_magneton(mu, mass, k),
      .rho_flux = flux_density_factor(mu, area, k),
      .a_ac = std::sqrt(k.hbar / (mass * omega)),
      .hbar_omega = k.hbar * omega,
  };
}

}  // namespace lacdhva::units
