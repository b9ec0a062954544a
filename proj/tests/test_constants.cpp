#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lacdhva/constants.hpp"
#include "lacdhva/errors.hpp"
#include "oracles.hpp"

using namespace lacdhva;
using units::load_constants;

namespace {
constexpr double kMuRb = 4.64e-22;
constexpr double kMassRb = 1.443e-25;
constexpr double kArea = 1.5e-10;
}  // namespace

TEST_CASE("constants are the frozen CODATA set") {
  const auto& k = load_constants();
  CHECK(k.hbar == doctest::Approx(1.0546e-34).epsilon(1e-4));
  CHECK(k.epsilon0 == doctest::Approx(8.854e-12).epsilon(1e-4));
  CHECK(k.mu_bohr == doctest::Approx(9.274e-24).epsilon(1e-4));
  CHECK(k.c == 299792458.0);
  CHECK(std::abs(k.h - 2.0 * std::numbers::pi * k.hbar) / k.h < 1e-12);
  CHECK(k.hbar > 0);
  CHECK(k.h > 0);
  CHECK(k.epsilon0 > 0);
  CHECK(&load_constants() == &k);
}

TEST_CASE("effective Bohr magneton") {
  // hbar mu/(2 M c^2) worked out by hand from the frozen constants.
  CHECK(units::effective_bohr_magneton(kMuRb, kMassRb) == doctest::Approx(1.886e-48).epsilon(1e-3));
  CHECK(2.0 * 1e4 * units::effective_bohr_magneton(kMuRb, kMassRb) == doctest::Approx(3.76e-44).epsilon(0.01));
  CHECK(units::effective_bohr_magneton(2 * kMuRb, 2 * kMassRb) ==
        doctest::Approx(units::effective_bohr_magneton(kMuRb, kMassRb)).epsilon(1e-15));
  CHECK(units::effective_bohr_magneton(-kMuRb, kMassRb) == units::effective_bohr_magneton(kMuRb, kMassRb));
  CHECK_THROWS_AS((void)units::effective_bohr_magneton(kMuRb, 0.0), DomainError);
  CHECK_THROWS_AS((void)units::effective_bohr_magneton(kMuRb, -1.0), DomainError);
  CHECK_THROWS_AS((void)units::effective_bohr_magneton(0.0, kMassRb), DomainError);
}

TEST_CASE("flux density factor") {
  CHECK(units::flux_density_factor(kMuRb, kArea) == doctest::Approx(1.17e-15).epsilon(5e-3));
  CHECK(units::flux_density_factor(kMuRb, 1e-300) < 1e-300);
  CHECK(units::flux_density_factor(2 * kMuRb, kArea) ==
        doctest::Approx(2 * units::flux_density_factor(kMuRb, kArea)).epsilon(1e-15));
  CHECK_THROWS_AS((void)units::flux_density_factor(kMuRb, 0.0), DomainError);
  CHECK_THROWS_AS((void)units::flux_density_factor(kMuRb, -kArea), DomainError);
}

TEST_CASE("minimum field") {
  CHECK(units::min_field(kMuRb) == doctest::Approx(4.09e4).epsilon(2e-3));
  CHECK(units::min_field(2 * kMuRb) == doctest::Approx(0.5 * units::min_field(kMuRb)).epsilon(1e-15));
  auto doubled = load_constants();
  doubled.hbar *= 2.0;
  CHECK(units::min_field(kMuRb, doubled) == doctest::Approx(2 * units::min_field(kMuRb)).epsilon(1e-15));
  CHECK_THROWS_AS((void)units::min_field(0.0), DomainError);
}

TEST_CASE("effective field must be positive") {
  CHECK(units::EffectiveField::checked(1.0).value == 1.0);
  CHECK_THROWS_AS((void)units::EffectiveField::checked(0.0), DomainError);
  CHECK_THROWS_AS((void)units::EffectiveField::checked(-3.0), DomainError);
  CHECK_THROWS_AS((void)units::EffectiveField::checked(NAN), DomainError);
}

TEST_CASE("derived-scale identities over random systems") {
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> log_u(-3.0, 3.0);
  const auto& k = load_constants();
  for (int i = 0; i < 500; ++i) {
    const double mu = kMuRb * std::pow(10.0, log_u(rng)) * (i % 2 ? -1.0 : 1.0);
    const double mass = kMassRb * std::pow(10.0, log_u(rng));
    const double area = kArea * std::pow(10.0, log_u(rng));
    const double b = 8.55e18 * std::pow(10.0, log_u(rng));
    const auto sc = units::derive_scales(mass, mu, area, b);

    CHECK(oracle::rel_diff(sc.hbar_omega, 2.0 * sc.mu_b_eff * b) < 1e-12);
    const double d_direct = std::abs(mu) * area * b / (k.c * k.c * k.h);
    CHECK(oracle::rel_diff(sc.rho_flux * b, d_direct) < 1e-12);
    CHECK(oracle::rel_diff(units::min_field(mu) * sc.rho_flux, area / std::numbers::pi) < 1e-12);
    CHECK(sc.a_ac > 0.0);
    CHECK(sc.rho_flux > 0.0);
    // a^2 M |omega| = hbar
    CHECK(oracle::rel_diff(sc.a_ac * sc.a_ac * mass * sc.hbar_omega / k.hbar, k.hbar) < 1e-12);
  }
}
