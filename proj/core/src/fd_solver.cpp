#include "lacdhva/fd_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "lacdhva/errors.hpp"
#include "lacdhva/specfun.hpp"

namespace lacdhva::fd {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxBisection = 256;
constexpr int kMaxInverseIterations = 8;

// Number of eigenvalues strictly below x (Sturm sequence count).
int sturm_count(const Tridiagonal& t, double x, double pivmin) {
  int count = 0;
  double q = t.diag[0] - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < t.size(); ++i) {
    q = t.diag[i] - x - t.lower[i - 1] * t.upper[i - 1] / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

// LU factorization with partial pivoting of (T - shift I), LAPACK dgttrf layout.
struct TridiagonalLU {
  std::vector<double> dl, d, du, du2;
  std::vector<bool> swapped;

  TridiagonalLU(const Tridiagonal& t, double shift, double tiny)
      : dl(t.lower), d(t.diag), du(t.upper), du2(t.size() > 2 ? t.size() - 2 : 0, 0.0),
        swapped(t.size() > 1 ? t.size() - 1 : 0, false) {
    const std::size_t n = d.size();
    for (double& v : d) v -= shift;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == 0.0) d[i] = tiny;
        const double fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      } else {
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const double temp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = temp - fact * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
        swapped[i] = true;
      }
    }
    for (double& v : d)
      if (std::abs(v) < tiny) v = std::copysign(tiny, v == 0.0 ? 1.0 : v);
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped[i]) {
        b[i + 1] -= dl[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl[i] * b[i];
      }
    }
    const auto last = static_cast<std::ptrdiff_t>(n) - 1;
    b[last] /= d[last];
    if (last >= 1) b[last - 1] = (b[last - 1] - du[last - 1] * b[last]) / d[last - 1];
    for (std::ptrdiff_t i = last - 2; i >= 0; --i)
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  }
};

double norm2(const std::vector<double>& v) { return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0)); }

double residual(const Tridiagonal& t, const std::vector<double>& v, double lambda) {
  const std::size_t n = t.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double tv = (t.diag[i] - lambda) * v[i];
    if (i > 0) tv += t.lower[i - 1] * v[i - 1];
    if (i + 1 < n) tv += t.upper[i] * v[i + 1];
    sum += tv * tv;
  }
  return std::sqrt(sum);
}

double bisect(const Tridiagonal& t, int index, double lo, double hi, double pivmin) {
  for (int it = 0; it < kMaxBisection; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi)) + pivmin || mid == lo || mid == hi)
      return mid;
    if (sturm_count(t, mid, pivmin) > index)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double Tridiagonal::norm() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(lower[i - 1]);
    if (i + 1 < diag.size()) row += std::abs(upper[i]);
    best = std::max(best, row);
  }
  return best;
}

RadialGrid RadialGrid::reference(int m, int k, double a_ac) {
  if (k < 1) throw PreconditionError("reference grid: k must be >= 1");
  if (!(a_ac > 0.0)) throw PreconditionError("reference grid: a_ac must be positive");
  return RadialGrid{a_ac * specfun::radial_cutoff(k, std::abs(m)), kReferencePoints};
}

RadialOperator assemble_radial_operator(int m, spectrum::Sigma sigma, double s_max, int n_points) {
  if (!(s_max > 0.0) || n_points < 2) throw PreconditionError("assemble_radial_operator: empty grid");
  const double h = s_max / (n_points + 1);
  const int first = m == 0 ? 0 : 1;
  const int count = n_points + 1 - first;
  const double m2 = static_cast<double>(m) * m;
  const double shift = 0.5 * spectrum::to_int(sigma) * (m + 1);

  RadialOperator op;
  op.nodes.resize(count);
  op.weights.resize(count);
  for (int j = 0; j < count; ++j) {
    const int i = first + j;
    op.nodes[j] = i * h;
    op.weights[j] = i == 0 ? 0.125 * h * h : i * h * h;
  }

  // Face conductance s_{i+1/2}/h times the 1/2 from hbar^2/(2M).
  auto face = [](int i_left) { return 0.5 * (i_left + 0.5); };

  auto& t = op.matrix;
  t.diag.resize(count);
  t.lower.resize(count - 1);
  t.upper.resize(count - 1);
  for (int j = 0; j < count; ++j) {
    const int i = first + j;
    const double s = op.nodes[j];
    double stiffness = face(i);
    if (i > 0) stiffness += face(i - 1);
    double potential = s * s / 8.0 + shift;
    if (i > 0) potential += 0.5 * m2 / (s * s);
    t.diag[j] = stiffness / op.weights[j] + potential;
  }
  for (int j = 0; j + 1 < count; ++j) {
    const int i = first + j;
    t.upper[j] = -face(i) / std::sqrt(op.weights[j] * op.weights[j + 1]);
    t.lower[j] = -face(i) / std::sqrt(op.weights[j + 1] * op.weights[j]);
  }
  return op;
}

EigenPairs lowest_eigenpairs(const Tridiagonal& t, int k) {
  const std::size_t n = t.size();
  if (n == 0 || k < 1 || static_cast<std::size_t>(k) > n)
    throw PreconditionError("lowest_eigenpairs: k must lie in [1, size]");
  if (!t.is_symmetric()) throw PreconditionError("lowest_eigenpairs: matrix is not symmetric");

  const double tnorm = t.norm();
  const double pivmin = std::max(std::numeric_limits<double>::min(), kEps * kEps * tnorm * tnorm);

  // Gershgorin interval.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.lower[i - 1]);
    if (i + 1 < n) radius += std::abs(t.upper[i]);
    lo = std::min(lo, t.diag[i] - radius);
    hi = std::max(hi, t.diag[i] + radius);
  }
  const double pad = 2.0 * kEps * tnorm + pivmin;
  lo -= pad;
  hi += pad;

  EigenPairs out;
  out.values.reserve(k);
  for (int j = 0; j < k; ++j) {
    const double start = j == 0 ? lo : out.values.back() - pad;
    out.values.push_back(bisect(t, j, start, hi, pivmin));
  }

  const double tiny = kEps * tnorm;
  const double tolerance = 1e-10 * tnorm;
  const double cluster = 1e-3 * tnorm;
  for (int j = 0; j < k; ++j) {
    const double lambda = out.values[j];
    const TridiagonalLU lu(t, lambda, tiny);
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    double res = std::numeric_limits<double>::infinity();
    int iterations = 0;
    while (iterations < kMaxInverseIterations) {
      ++iterations;
      lu.solve(v);
      // Orthogonalize against earlier vectors in the same cluster.
      for (int prev = 0; prev < j; ++prev) {
        if (std::abs(out.values[prev] - lambda) > cluster) continue;
        const auto& u = out.vectors[prev];
        const double dot = std::inner_product(u.begin(), u.end(), v.begin(), 0.0);
        for (std::size_t i = 0; i < n; ++i) v[i] -= dot * u[i];
      }
      const double len = norm2(v);
      if (!(len > 0.0) || !std::isfinite(len)) break;
      for (double& x : v) x /= len;
      res = residual(t, v, lambda);
      if (res <= tolerance) break;
    }
    if (!(res <= tolerance)) {
      std::ostringstream msg;
      msg << "inverse iteration did not converge for eigenvalue " << j << " (lambda = " << lambda
          << ", residual = " << res << ", tolerance = " << tolerance << ", iterations = " << iterations << ")";
      throw NumericError(msg.str());
    }
    // Fix the sign so the largest component is positive.
    const auto peak = std::max_element(v.begin(), v.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
    if (*peak < 0.0)
      for (double& x : v) x = -x;
    out.vectors.push_back(std::move(v));
    out.residuals.push_back(res);
  }
  return out;
}

FDResult solve_radial_fd(int m, spectrum::Sigma sigma, const spectrum::SystemConfig& cfg,
                         const RadialGrid& grid, int k) {
  const auto scales = cfg.scales();
  const double a = scales.a_ac;
  if (k < 1) throw PreconditionError("solve_radial_fd: k must be >= 1");
  if (grid.n_points < RadialGrid::kMinPoints) throw PreconditionError("solve_radial_fd: need at least 200 grid points");
  if (!(grid.spacing() <= a / 20.0))
    throw PreconditionError("solve_radial_fd: grid spacing must not exceed a_ac/20");
  const double needed = a * specfun::radial_cutoff(k, std::abs(m));
  if (!(grid.r_max >= needed * (1.0 - 1e-12)))
    throw PreconditionError("solve_radial_fd: r_max below a_ac (sqrt(4k + 2|m| + 2) + 8)");

  const auto op = assemble_radial_operator(m, sigma, grid.r_max / a, grid.n_points);
  auto pairs = lowest_eigenpairs(op.matrix, k);

  FDResult result;
  result.operator_norm = op.matrix.norm() * scales.hbar_omega;
  for (double v : pairs.values) result.eigenvalues.push_back(v * scales.hbar_omega);
  for (double r : pairs.residuals) result.residual_norms.push_back(r * scales.hbar_omega);
  result.eigenvectors = std::move(pairs.vectors);
  result.nodes.reserve(op.nodes.size());
  for (double s : op.nodes) result.nodes.push_back(s * a);
  result.weights = op.weights;
  return result;
}

ConvergenceStudy convergence_study(int m, spectrum::Sigma sigma, const spectrum::SystemConfig& cfg,
                                   std::span<const RadialGrid> grids) {
  if (grids.size() < 3) throw PreconditionError("convergence_study: need at least three grids");
  for (std::size_t i = 1; i < grids.size(); ++i)
    if (!(grids[i].spacing() < grids[i - 1].spacing()))
      throw PreconditionError("convergence_study: grid spacings must strictly decrease");

  const auto scales = cfg.scales();
  const double exact = spectrum::energy_eigenvalue({0, m, sigma}, scales.hbar_omega);

  ConvergenceStudy study;
  for (const auto& grid : grids) {
    const auto fd = solve_radial_fd(m, sigma, cfg, grid, 1);
    study.rows.push_back({grid.spacing(), fd.eigenvalues.front(), std::abs(fd.eigenvalues.front() - exact)});
  }

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& row : study.rows) {
    if (!(row.error > 0.0)) throw NumericError("convergence_study: zero error, order undefined");
    const double x = std::log(row.spacing);
    const double y = std::log(row.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(study.rows.size());
  study.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return study;
}

}  // namespace lacdhva::fd
