#include "lacdhva/specfun.hpp"

#include <algorithm>
#include <cstdint>
#include <numbers>

namespace lacdhva::specfun {

namespace {

constexpr std::array<std::uint64_t, 21> kFactorials = [] {
  std::array<std::uint64_t, 21> table{};
  table[0] = 1;
  for (std::uint64_t n = 1; n < table.size(); ++n) table[n] = table[n - 1] * n;
  return table;
}();

constexpr int kNormQuadraturePoints = 4096;

bool near_integer(double x) { return std::abs(x - std::round(x)) <= 1e-9 * std::max(1.0, std::abs(x)); }

// s^{|m|} exp(-s^2/4) without overflow for large |m|.
double gaussian_envelope(double s, int abs_m) {
  if (s == 0.0) return abs_m == 0 ? 1.0 : 0.0;
  return std::exp(abs_m * std::log(s) - 0.25 * s * s);
}

}  // namespace

double kummer_poly(int a, int b, double xi) {
  if (a > 0) throw DomainError("kummer_poly: first argument must be a nonpositive integer");
  if (b < 1) throw DomainError("kummer_poly: second argument must be a positive integer");
  if (!std::isfinite(xi) || xi < 0.0) throw DomainError("kummer_poly: xi must be finite and >= 0");

  // F = 1 + c_1 xi (1 + c_2 xi (1 + ... (1 + c_n xi))), c_k = (a+k-1)/((b+k-1) k)
  const int n = -a;
  double acc = 1.0;
  for (int k = n; k >= 1; --k) {
    const double ck = static_cast<double>(a + k - 1) / (static_cast<double>(b + k - 1) * k);
    acc = 1.0 + ck * xi * acc;
  }
  return acc;
}

double kummer_poly(double a, double b, double xi) {
  if (!std::isfinite(a) || !near_integer(a)) throw DomainError("kummer_poly: first argument is not an integer");
  if (!std::isfinite(b) || !near_integer(b)) throw DomainError("kummer_poly: second argument is not an integer");
  return kummer_poly(static_cast<int>(std::lround(a)), static_cast<int>(std::lround(b)), xi);
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  if (n < static_cast<int>(kFactorials.size())) return std::log(static_cast<double>(kFactorials[n]));
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double radial_cutoff(int n_xi, int abs_m) { return std::sqrt(4.0 * n_xi + 2.0 * abs_m + 2.0) + 8.0; }

double radial_norm_dimensionless(int n_xi, int abs_m) {
  if (n_xi < 0 || abs_m < 0) throw DomainError("radial_norm: quantum numbers must be nonnegative");
  const double integral = integrate_radial(
      [&](double s) {
        const double amplitude = gaussian_envelope(s, abs_m) * kummer_poly(-n_xi, abs_m + 1, 0.5 * s * s);
        return amplitude * amplitude;
      },
      radial_cutoff(n_xi, abs_m), kNormQuadraturePoints);
  if (!(integral > 0.0)) throw NumericError("radial_norm: vanishing norm integral");
  return 1.0 / std::sqrt(integral);
}

double radial_norm_closed_form(int n_xi, int abs_m) {
  if (n_xi < 0 || abs_m < 0) throw DomainError("radial_norm: quantum numbers must be nonnegative");
  const double log_sq = log_factorial(n_xi + abs_m) - abs_m * std::numbers::ln2 - log_factorial(n_xi) -
                        2.0 * log_factorial(abs_m);
  return std::exp(0.5 * log_sq);
}

double radial_norm(int n_xi, int abs_m, double a_ac) {
  if (!(a_ac > 0.0) || !std::isfinite(a_ac)) throw DomainError("radial_norm: a_ac must be positive");
  return radial_norm_dimensionless(n_xi, abs_m) * std::pow(a_ac, -(abs_m + 1.0));
}

}  // namespace lacdhva::specfun
