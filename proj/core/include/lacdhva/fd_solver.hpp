#pragma once

#include <span>
#include <vector>

#include "lacdhva/spectrum.hpp"

namespace lacdhva::fd {

/// Uniform radial grid on [0, r_max] with n_points interior nodes
/// r_i = i h, h = r_max/(n_points + 1), and Dirichlet data at r_max.
struct RadialGrid {
  double r_max = 0.0;  // m
  int n_points = 0;

  static constexpr int kMinPoints = 200;
  static constexpr int kReferencePoints = 16000;

  [[nodiscard]] double spacing() const noexcept { return r_max / (n_points + 1); }

  /// Smallest admissible r_max for the k lowest levels at angular momentum
  /// m, with kReferencePoints nodes.
  [[nodiscard]] static RadialGrid reference(int m, int k, double a_ac);
};

/// Symmetric tridiagonal matrix. Both off-diagonals are stored so that the
/// symmetry of the assembly can be checked rather than assumed.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> lower;  // lower[i] = T(i+1, i)
  std::vector<double> upper;  // upper[i] = T(i, i+1)

  [[nodiscard]] std::size_t size() const noexcept { return diag.size(); }
  [[nodiscard]] bool is_symmetric() const noexcept { return lower == upper; }
  /// Infinity norm.
  [[nodiscard]] double norm() const noexcept;
};

/// The discretized radial Hamiltonian in units of hbar|omega| and lengths
/// in units of the magnetic length.
///
/// The radial operator -(1/2)(1/s)(s R')' + V(s) R with
/// V = m^2/(2 s^2) + s^2/8 + sigma (m+1)/2 is discretized in conservative
/// (finite-volume) form with fluxes at the half nodes, then symmetrized by
/// u_i = sqrt(w_i) R_i with cell measures w_i = s_i h. For m = 0 the origin
/// is an unknown with cell measure h^2/8 and zero flux through s = 0;
/// otherwise R(0) = 0.
struct RadialOperator {
  std::vector<double> nodes;    // s_i
  std::vector<double> weights;  // w_i
  Tridiagonal matrix;
};

[[nodiscard]] RadialOperator assemble_radial_operator(int m, spectrum::Sigma sigma, double s_max,
                                                      int n_points);

struct EigenPairs {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;  // unit 2-norm
  std::vector<double> residuals;             // ||T v - lambda v||
};

/// The k lowest eigenpairs of a symmetric tridiagonal matrix by Sturm
/// bisection followed by inverse iteration from a fixed start vector.
/// Throws NumericError if inverse iteration does not converge.
[[nodiscard]] EigenPairs lowest_eigenpairs(const Tridiagonal& t, int k);

struct FDResult {
  std::vector<double> eigenvalues;                // J, ascending
  std::vector<std::vector<double>> eigenvectors;  // u_i = sqrt(w_i) R_i, unit 2-norm
  std::vector<double> residual_norms;             // J
  std::vector<double> nodes;                      // r_i, m
  std::vector<double> weights;                    // w_i in units of a_ac^2
  double operator_norm = 0.0;                     // J
};

/// k lowest radial eigenvalues at fixed (m, sigma). Throws PreconditionError
/// when the grid does not resolve the magnetic length (h <= a_ac/20) or is
/// too short (r_max >= a_ac (sqrt(4k + 2|m| + 2) + 8)).
[[nodiscard]] FDResult solve_radial_fd(int m, spectrum::Sigma sigma, const spectrum::SystemConfig& cfg,
                                       const RadialGrid& grid, int k);

struct ConvergenceRow {
  double spacing = 0.0;     // m
  double eigenvalue = 0.0;  // J
  double error = 0.0;       // |E_fd - E_exact|, J
};

struct ConvergenceStudy {
  std::vector<ConvergenceRow> rows;
  double order = 0.0;  // least-squares slope of log(error) against log(h)
};

/// Ground-state error on a sequence of grids with strictly decreasing h.
[[nodiscard]] ConvergenceStudy convergence_study(int m, spectrum::Sigma sigma,
                                                 const spectrum::SystemConfig& cfg,
                                                 std::span<const RadialGrid> grids);

}  // namespace lacdhva::fd
