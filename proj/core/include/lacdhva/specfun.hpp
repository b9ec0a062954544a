#pragma once

#include <array>
#include <cmath>
#include <concepts>

#include "lacdhva/errors.hpp"

namespace lacdhva::specfun {

/// Kummer function F(a, b, xi) for a nonpositive integer a, where the
/// series terminates after |a| + 1 terms. Evaluated by Horner's scheme on
/// the term ratios, so the result is the exact polynomial up to rounding.
[[nodiscard]] double kummer_poly(int a, int b, double xi);

/// Same as above for real-valued arguments, e.g. a = -beta + (|m|+1)/2
/// computed from an energy. Throws DomainError unless a is a nonpositive
/// integer and b a positive integer (within 1e-9).
[[nodiscard]] double kummer_poly(double a, double b, double xi);

/// ln(n!). Exact integer table for n <= 20, lgamma above.
[[nodiscard]] double log_factorial(int n);

// Composite 8-point Gauss-Legendre rule.
namespace detail {
inline constexpr std::array<double, 4> kGaussNodes{
    0.1834346424956498049394761, 0.5255324099163289858177390,
    0.7966664774136267395915539, 0.9602898564975362316835609};
inline constexpr std::array<double, 4> kGaussWeights{
    0.3626837833783619829651504, 0.3137066458778872873379622,
    0.2223810344533744705443560, 0.1012285362903762591525314};
inline constexpr int kGaussOrder = 8;
}  // namespace detail

/// Integral of f(r) r dr over [0, r_max].
///
/// The interval is split into ceil(n_points / 8) equal panels, each
/// integrated with the 8-point Gauss-Legendre rule, so at least n_points
/// samples are taken. Endpoints are never sampled. Throws PreconditionError
/// for r_max <= 0 or n_points < 16 and NumericError on a non-finite sample.
template <std::invocable<double> F>
[[nodiscard]] double integrate_radial(F&& f, double r_max, int n_points) {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw PreconditionError("integrate_radial: r_max must be positive");
  if (n_points < 16) throw PreconditionError("integrate_radial: n_points must be >= 16");

  const int panels = (n_points + detail::kGaussOrder - 1) / detail::kGaussOrder;
  const double width = r_max / panels;
  const double half = 0.5 * width;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width;
    double panel = 0.0;
    for (std::size_t j = 0; j < detail::kGaussNodes.size(); ++j) {
      for (const double sign : {-1.0, 1.0}) {
        const double r = mid + sign * half * detail::kGaussNodes[j];
        const double value = static_cast<double>(f(r));
        if (!std::isfinite(value)) throw NumericError("integrate_radial: non-finite integrand sample");
        panel += detail::kGaussWeights[j] * value * r;
      }
    }
    total += panel * half;
  }
  return total;
}

/// Radial truncation used for all LAC eigenfunction quadratures, in units of
/// the magnetic length: classical turning point plus 8 decay lengths.
[[nodiscard]] double radial_cutoff(int n_xi, int abs_m);

/// Dimensionless normalization N such that
///   R(s) = N s^{|m|} exp(-s^2/4) F(-n_xi, |m|+1, s^2/2)
/// obeys int_0^inf R(s)^2 s ds = 1. Fixed by quadrature, not by a closed form.
[[nodiscard]] double radial_norm_dimensionless(int n_xi, int abs_m);

/// The closed form sqrt((n_xi+|m|)! / (2^{|m|} n_xi! (|m|!)^2)) of the same
/// constant, computed in log space.
[[nodiscard]] double radial_norm_closed_form(int n_xi, int abs_m);

/// Normalization in SI: radial_norm_dimensionless / a_ac^{|m|+1}, so that the
/// physical amplitude integrates to one against r dr. Not representable in
/// double for large |m| at atomic length scales; RadialEigenstate avoids it.
[[nodiscard]] double radial_norm(int n_xi, int abs_m, double a_ac);

}  // namespace lacdhva::specfun
