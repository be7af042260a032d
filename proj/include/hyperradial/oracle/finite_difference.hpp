#pragma once

// Finite-volume eigen-solver for -(r^n s')' / r^n + v s = eps s, independent
// of every closed form in the solvers.
//
// Cells [r_{i-1/2}, r_{i+1/2}] of width h start at r_min. The flux through the
// face at r_min is zero (regularity at the origin, or even parity on the line),
// and s = 0 on the face at r_max. With exact cell volumes
// V_i = int r^n dr and face weights r^n / h the generalized problem
// A s = eps V s is symmetrized by V^{1/2} into a tridiagonal matrix whose
// lowest eigenvalues come from Sturm-sequence bisection.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hyperradial/core.hpp"
#include "hyperradial/radial/model.hpp"

namespace hyperradial::oracle {

using radial::Dimension;
using radial::EnergyLevel;
using radial::PhysicalScales;
using radial::Potential;

struct Grid {
  double r_min = 0.0;
  double r_max = 1.0;
  int points = 1000;

  void validate() const {
    if (!(r_min >= 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) throw domain_error("Grid: need 0 <= r_min < r_max");
    if (points < 100) throw domain_error("Grid: points must be >= 100");
  }
  [[nodiscard]] double spacing() const { return (r_max - r_min) / points; }
  [[nodiscard]] Grid refined(int factor = 2) const { return {r_min, r_max, points * factor}; }
};

/// Parity sector on the line (n = 0). Radial problems use `even` only.
enum class Parity { even, odd, both };

struct SymmetricTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  ///< off[i] couples i and i+1

  /// Number of eigenvalues strictly below x (Sturm sequence count).
  [[nodiscard]] int count_below(double x) const {
    int c = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      const double e2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
      q = diag[i] - x - (i == 0 ? 0.0 : e2 / q);
      if (q == 0.0) q = -1e-300;
      if (q < 0.0) ++c;
    }
    return c;
  }

  /// Lowest `count` eigenvalues by bisection to absolute width tol.
  [[nodiscard]] std::vector<double> lowest(int count, double tol = 0.0) const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < diag.size() ? std::abs(off[i]) : 0.0);
      lo = std::min(lo, diag[i] - r);
      hi = std::max(hi, diag[i] + r);
    }
    count = std::min<int>(count, static_cast<int>(diag.size()));
    std::vector<double> out;
    for (int k = 0; k < count; ++k) {
      double a = lo;
      double b = hi;
      for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        if (m == a || m == b || b - a <= std::max(tol, 4.0 * machine_eps * std::abs(m))) break;
        if (count_below(m) > k) {
          b = m;
        } else {
          a = m;
        }
      }
      out.push_back(0.5 * (a + b));
    }
    return out;
  }
};

namespace detail {

// Exact integral of r^n over [a, b] (the line counts one half-line; the
// factor 2 cancels in the eigenproblem).
inline double cell_volume(int n, double a, double b) {
  return (std::pow(b, n + 1) - std::pow(a, n + 1)) / (n + 1);
}

// Cell average of the reduced potential, weighted by r^n.
// The finite-well step is averaged exactly; smooth potentials use a 4-point Gauss rule.
inline double cell_potential(const Potential& pot, const PhysicalScales& sc, int n, double a, double b) {
  if (const auto* w = std::get_if<radial::FiniteWell>(&pot)) {
    const double inside = std::clamp(w->R, a, b);
    const double frac = n == 0 ? (inside - a) / (b - a) : cell_volume(n, a, inside) / cell_volume(n, a, b);
    return -radial::reduced_depth(*w, sc) * frac;
  }
  static constexpr double x[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563, 0.8611363115940526};
  static constexpr double w[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461, 0.3478548451374538};
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double r = 0.5 * (a + b) + 0.5 * (b - a) * x[i];
    const double wr = w[i] * std::pow(r, n);
    num += wr * radial::reduced_potential(pot, sc, r);
    den += wr;
  }
  return den > 0.0 ? num / den : radial::reduced_potential(pot, sc, 0.5 * (a + b));
}

}  // namespace detail

/// Discretization knobs beyond the grid.
struct FdOptions {
  Parity parity = Parity::even;
  /// Gaussian width of the regularized delta shell in units of the grid
  /// spacing; zero means one spacing.
  double delta_width = 0.0;
};

/// The symmetric matrix for one grid (and one delta width, if any).
inline SymmetricTridiagonal fd_matrix(const Dimension& dim, const Potential& pot, const Grid& grid,
                                      const PhysicalScales& sc, bool odd, double delta_width) {
  grid.validate();
  const int n = dim.n();
  double r_end = grid.r_max;
  if (const auto* w = std::get_if<radial::InfiniteWell>(&pot)) r_end = std::min(r_end, w->R);
  const double h = (r_end - grid.r_min) / grid.points;
  const int N = grid.points;
  std::vector<double> vol(N), face(N + 1), pot_avg(N);
  for (int i = 0; i <= N; ++i) {
    const double r = grid.r_min + i * h;
    face[static_cast<std::size_t>(i)] = (n == 0 ? 1.0 : std::pow(r, n)) / h;
  }
  for (int i = 0; i < N; ++i) {
    const double a = grid.r_min + i * h;
    const double b = a + h;
    vol[static_cast<std::size_t>(i)] = n == 0 ? h : detail::cell_volume(n, a, b);
    pot_avg[static_cast<std::size_t>(i)] =
        std::holds_alternative<radial::InfiniteWell>(pot) ? 0.0 : detail::cell_potential(pot, sc, n, a, b);
  }
  // Inner face: zero flux, except for odd parity on the line where the
  // ghost s_{-1} = -s_0 puts a node at r_min.
  const bool inner_dirichlet = odd && n == 0;
  SymmetricTridiagonal m;
  m.diag.resize(static_cast<std::size_t>(N));
  m.off.resize(static_cast<std::size_t>(N - 1));
  std::vector<double> extra(static_cast<std::size_t>(N), 0.0);
  if (const auto* d = std::get_if<radial::DeltaShell>(&pot)) {
    // -gamma R^n delta(r - R) as normalized Gaussian weights on the cells.
    const double gamma = radial::reduced_coupling(*d, sc);
    const double width = delta_width * h;
    double sum = 0.0;
    std::vector<double> g(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
      const double r = grid.r_min + (i + 0.5) * h;
      const double z = (r - d->R) / width;
      g[static_cast<std::size_t>(i)] = z * z < 1400.0 ? std::exp(-0.5 * z * z) : 0.0;
      sum += g[static_cast<std::size_t>(i)];
    }
    const double Rn = n == 0 ? 1.0 : std::pow(d->R, n);
    if (sum > 0.0)
      for (int i = 0; i < N; ++i) extra[static_cast<std::size_t>(i)] = -gamma * Rn * g[static_cast<std::size_t>(i)] / sum;
  }
  for (int i = 0; i < N; ++i) {
    const auto u = static_cast<std::size_t>(i);
    double a = face[u] + face[u + 1];
    if (i == 0 && !inner_dirichlet) a -= face[0];
    if (i == 0 && inner_dirichlet) a += face[0];
    if (i == N - 1) a += face[u + 1];  // ghost s_N = -s_{N-1}
    m.diag[u] = (a + extra[u]) / vol[u] + pot_avg[u];
    if (i + 1 < N) m.off[u] = -face[u + 1] / std::sqrt(vol[u] * vol[u + 1]);
  }
  return m;
}

/// Lowest eigenvalues for one grid (no extrapolation).
inline std::vector<double> fd_eigenvalues(const Dimension& dim, const Potential& pot, const Grid& grid, int count,
                                          const PhysicalScales& sc = {}, const FdOptions& opt = {}) {
  const double width = opt.delta_width > 0.0 ? opt.delta_width : 1.0;
  auto sector = [&](bool odd) { return fd_matrix(dim, pot, grid, sc, odd, width).lowest(count); };
  std::vector<double> ev;
  if (dim.is_line() && opt.parity != Parity::even) {
    ev = sector(true);
    if (opt.parity == Parity::both) {
      const auto even = sector(false);
      ev.insert(ev.end(), even.begin(), even.end());
      std::sort(ev.begin(), ev.end());
      if (static_cast<int>(ev.size()) > count) ev.resize(static_cast<std::size_t>(count));
    }
  } else {
    ev = sector(false);
  }
  return ev;
}

/// One oracle eigenvalue with its grid-convergence evidence.
struct FdEigenvalue {
  std::vector<double> sequence;  ///< raw eigenvalues on spacings h, h/2, h/4 (and h/8 for the delta shell)
  double extrapolated = 0.0;     ///< Richardson value from the finest grids
  double previous = 0.0;         ///< the same extrapolation one grid coarser
  double order = 0.0;            ///< observed order log2 of successive raw differences
  bool converged = false;
};

struct FdSpectrum {
  std::vector<EnergyLevel> levels;  ///< extrapolated, in increasing order
  std::vector<FdEigenvalue> detail;
  bool converged = false;
};

/// Lowest `count` levels with Richardson extrapolation over grid halvings.
///
/// Smooth problems converge at second order, so grids h, h/2, h/4 give two
/// successive extrapolations (4 E_{k+1} - E_k) / 3. The delta shell is
/// regularized by a Gaussian of width equal to the grid spacing, i.e. widths
/// {4h, 2h, h} relative to the finest grid, which is first order in the
/// width; there E = E0 + a h + b h^2 is eliminated over three grids and a
/// fourth grid supplies the comparison. A level is converged when the two
/// extrapolations agree to `conv_tol` relative and the observed order is
/// close to the expected one. For wells that vanish at infinity only
/// negative eigenvalues are kept.
inline FdSpectrum fd_bound_spectrum(const Dimension& dim, const Potential& pot, const Grid& grid, int count,
                                    const PhysicalScales& sc = {}, const FdOptions& opt = {}, double conv_tol = 1e-5) {
  radial::validate(pot);
  sc.validate();
  grid.validate();
  if (std::holds_alternative<radial::Free>(pot)) throw domain_error("fd_bound_spectrum: the free particle has no bound states");
  if (count < 1) throw domain_error("fd_bound_spectrum: count must be >= 1");
  const bool delta = std::holds_alternative<radial::DeltaShell>(pot);
  FdOptions o = opt;
  if (delta && o.delta_width == 0.0) o.delta_width = 1.0;
  const int grids = delta ? 4 : 3;
  std::vector<std::vector<double>> ev;
  for (int g = 0; g < grids; ++g) ev.push_back(fd_eigenvalues(dim, pot, grid.refined(1 << g), count, sc, o));
  std::size_t k = ev[0].size();
  for (const auto& e : ev) k = std::min(k, e.size());
  const bool bound_below_zero = delta || std::holds_alternative<radial::FiniteWell>(pot);
  const double min_order = delta ? 0.8 : std::log2(3.0);
  FdSpectrum out;
  out.converged = true;
  for (std::size_t i = 0; i < k; ++i) {
    FdEigenvalue e;
    for (const auto& g : ev) e.sequence.push_back(g[i]);
    const auto& q = e.sequence;
    if (delta) {
      e.previous = (8.0 * q[2] - 6.0 * q[1] + q[0]) / 3.0;
      e.extrapolated = (8.0 * q[3] - 6.0 * q[2] + q[1]) / 3.0;
    } else {
      e.previous = (4.0 * q[1] - q[0]) / 3.0;
      e.extrapolated = (4.0 * q[2] - q[1]) / 3.0;
    }
    const double d1 = std::abs(q[q.size() - 3] - q[q.size() - 2]);
    const double d2 = std::abs(q[q.size() - 2] - q[q.size() - 1]);
    e.order = d2 > 0.0 ? std::log2(d1 / d2) : std::numeric_limits<double>::infinity();
    const double scale = std::max(std::abs(e.extrapolated), 1e-300);
    // Below ~1e-11 relative the raw differences are rounding noise and the order is meaningless.
    const bool settled = d1 <= 1e-11 * scale;
    e.converged = std::abs(e.extrapolated - e.previous) <= conv_tol * scale && (settled || e.order >= min_order);
    if (bound_below_zero && !(e.extrapolated < 0.0)) break;
    const double eps = e.extrapolated;
    out.levels.push_back(bound_below_zero ? EnergyLevel::negative_level(static_cast<int>(i) + 1, -eps, sc)
                                          : EnergyLevel::discrete_level(static_cast<int>(i), eps, sc));
    out.detail.push_back(e);
    out.converged = out.converged && e.converged;
  }
  if (out.levels.empty()) out.converged = false;
  return out;
}

}  // namespace hyperradial::oracle
