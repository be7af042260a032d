#pragma once

// Scattering by outward integration: ascending series near the origin, RK4
// across the potential, and a Hankel fit outside it.

#include <algorithm>
#include <cmath>
#include <vector>

#include "hyperradial/core.hpp"
#include "hyperradial/oracle/finite_difference.hpp"
#include "hyperradial/solvers/common.hpp"
#include "hyperradial/specfun.hpp"

namespace hyperradial::oracle {

namespace detail {

struct State {
  double s = 0.0;
  double ds = 0.0;
};

// Regular solution of s'' + (n/r) s' + c s = 0 with s(0) = 1:
// s = sum a_k r^{2k}, a_k = -c a_{k-1} / (2k (2k + n - 1)).
inline State regular_series(int n, double c, double r) {
  double term = 1.0;
  State st{1.0, 0.0};
  for (int k = 1; k < 400; ++k) {
    term *= -c * r * r / (2.0 * k * (2.0 * k + n - 1.0));
    st.s += term;
    st.ds += 2.0 * k * term / r;
    if (std::abs(term) < 1e-18 * std::abs(st.s) && k > 2) break;
  }
  return st;
}

// RK4 from a to b for s'' = -(n/r) s' - c(r) s, steps no longer than h nor 5% of r.
template <typename C>
State rk4(int n, const C& c, State y, double a, double b, double h) {
  double r = a;
  auto rhs = [&](double x, const State& z) { return State{z.ds, -n / x * z.ds - c(x) * z.s}; };
  while (r < b) {
    const double step = std::min({h, 0.05 * r, b - r});
    const State k1 = rhs(r, y);
    const State y2{y.s + 0.5 * step * k1.s, y.ds + 0.5 * step * k1.ds};
    const State k2 = rhs(r + 0.5 * step, y2);
    const State y3{y.s + 0.5 * step * k2.s, y.ds + 0.5 * step * k2.ds};
    const State k3 = rhs(r + 0.5 * step, y3);
    const State y4{y.s + step * k3.s, y.ds + step * k3.ds};
    const State k4 = rhs(r + step, y4);
    y.s += step / 6.0 * (k1.s + 2.0 * k2.s + 2.0 * k3.s + k4.s);
    y.ds += step / 6.0 * (k1.ds + 2.0 * k2.ds + 2.0 * k3.ds + k4.ds);
    r = (b - r - step < 1e-14 * b) ? b : r + step;
  }
  return y;
}

inline solvers::ScatteringResult shoot(const Dimension& dim, const Potential& pot, double eps, const Grid& grid,
                                       const PhysicalScales& sc) {
  const int n = dim.n();
  const double nu = dim.nu();
  double R = 0.0;
  double gamma = 0.0;
  double v_in = 0.0;
  if (const auto* d = std::get_if<radial::DeltaShell>(&pot)) {
    R = d->R;
    gamma = radial::reduced_coupling(*d, sc);
  } else if (const auto* w = std::get_if<radial::FiniteWell>(&pot)) {
    R = w->R;
    v_in = -radial::reduced_depth(*w, sc);
  } else if (!std::holds_alternative<radial::Free>(pot)) {
    throw domain_error("fd_scattering: needs a free, delta-shell or finite-well potential");
  }
  if (!(grid.r_max > R)) throw domain_error("fd_scattering: r_max must lie outside the potential support");
  const double h = grid.spacing();
  const double c_in = eps - v_in;
  // Start where the series converges in a handful of terms.
  const double r0 = std::min({0.1 / std::sqrt(std::abs(c_in) + 1e-300), 0.5 * (R > 0.0 ? R : grid.r_max), h});
  State y = regular_series(n, c_in, r0);
  auto c_inside = [&](double) { return c_in; };
  auto c_outside = [&](double) { return eps; };
  if (R > 0.0) {
    y = rk4(n, c_inside, y, r0, R, h);
    y.ds -= gamma * y.s;  // Psi'(R+) - Psi'(R-) = -gamma Psi(R)
    y = rk4(n, c_outside, y, R, grid.r_max, h);
  } else {
    y = rk4(n, c_outside, y, r0, grid.r_max, h);
  }
  // Fit s = c1 H1(kr)/r^nu + c2 H2(kr)/r^nu and its derivative at r_max.
  const double k = std::sqrt(eps);
  const double rm = grid.r_max;
  const auto jy = specfun::bessel_jy(nu, k * rm);
  const double p = std::pow(rm, -nu);
  const complex H1(jy.j, jy.y), H2(jy.j, -jy.y);
  const complex H1p(jy.jp, jy.yp), H2p(jy.jp, -jy.yp);
  const complex f1 = H1 * p, f2 = H2 * p;
  const complex g1 = (k * H1p - nu / rm * H1) * p;
  const complex g2 = (k * H2p - nu / rm * H2) * p;
  const complex det = f1 * g2 - f2 * g1;
  const complex c1 = (y.s * g2 - f2 * y.ds) / det;
  const complex c2 = (f1 * y.ds - y.s * g1) / det;
  // s(0) = 1 corresponds to a J_nu(q r)/r^nu with a = Gamma(nu+1) (2/q)^nu.
  const double q = std::sqrt(c_in);
  const double a = specfun::gamma_fn(nu + 1.0).value * std::pow(2.0 / q, nu);
  solvers::ScatteringResult out;
  out.eps = eps;
  out.interior_coeff = a / c2;
  out.exterior_out_coeff = c1 / c2;
  out.exterior_reflection = std::norm(out.exterior_out_coeff);
  out.interior_intensity = std::norm(out.interior_coeff);
  out.paper_T = std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace detail

/// Scattering coefficients from direct integration of the radial equation.
inline solvers::ScatteringResult fd_scattering(const Dimension& dim, const Potential& pot, double eps, const Grid& grid,
                                               const PhysicalScales& sc = {}) {
  radial::validate(pot);
  sc.validate();
  grid.validate();
  if (!(eps > 0.0) || !std::isfinite(eps)) throw domain_error("fd_scattering: eps must be > 0");
  return detail::shoot(dim, pot, eps, grid, sc);
}

/// Interior intensity on grids h and h/2; converged when they agree to tol.
struct FdScatteringCheck {
  solvers::ScatteringResult result;  ///< on the finer grid
  double change = 0.0;               ///< relative change of the interior intensity
  bool converged = false;
};

inline FdScatteringCheck fd_scattering_checked(const Dimension& dim, const Potential& pot, double eps, const Grid& grid,
                                               const PhysicalScales& sc = {}, double tol = 1e-9) {
  const auto a = fd_scattering(dim, pot, eps, grid, sc);
  const auto b = fd_scattering(dim, pot, eps, grid.refined(2), sc);
  FdScatteringCheck c;
  c.result = b;
  c.change = rel_diff(a.interior_intensity, b.interior_intensity);
  c.converged = c.change <= tol;
  return c;
}

}  // namespace hyperradial::oracle
