#pragma once

// Finite spherical well v = -v0 for r < R.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hyperradial/numerics/roots.hpp"
#include "hyperradial/radial/integrals.hpp"
#include "hyperradial/radial/wavefunction.hpp"
#include "hyperradial/solvers/common.hpp"
#include "hyperradial/specfun.hpp"

namespace hyperradial::solvers {

namespace detail {

struct WellResidual {
  double value = 0.0;
  double scale = 0.0;  ///< |term1| + |term2|, for a relative residual
};

// Log-derivative matching of J_nu(q r)/r^nu to K_nu(kappa r)/r^nu at R,
//   q J_{nu+1}(qR) K_nu(kappa R) = kappa K_{nu+1}(kappa R) J_nu(qR),
// divided by K_nu (qR)^nu so it has no poles and no spurious root at q = 0:
//   q^2 R J_{nu+1}(qR)/(qR)^{nu+1} - kappa (K_{nu+1}/K_nu)(kappa R) J_nu(qR)/(qR)^nu.
// For nu = -1/2 this is the even-parity condition q tan(qR) = kappa.
inline WellResidual finite_well_residual(double nu, double v0, double R, double abs_eps) {
  const double q = std::sqrt(std::max(v0 - abs_eps, 0.0));
  const double kappa = std::sqrt(abs_eps);
  const double x = kappa * R;
  const auto ik = specfun::bessel_ik_scaled(nu, x);
  const double k_ratio = (nu / x * ik.k - ik.kp) / ik.k;
  const double t1 = q * q * R * specfun::bessel_j_over_power(nu + 1.0, q * R);
  const double t2 = kappa * k_ratio * specfun::bessel_j_over_power(nu, q * R);
  return {t1 - t2, std::abs(t1) + std::abs(t2)};
}

}  // namespace detail

/// All bound states, deepest first (N = 1 has the largest |eps|).
///
/// The residual is scanned on a log grid in |eps| from v0 * 1e-60 to v0
/// (512 points per decade) merged with a grid uniform in q = sqrt(v0 - |eps|)
/// with 16 points per pi / R, then each sign change is refined by Brent. The
/// log grid reaches the exponentially shallow states of n = 1.
inline std::vector<BoundState> finite_well_bound_spectrum(const Dimension& dim, double V0, double R,
                                                          const PhysicalScales& scales = {}) {
  solvers::detail::require_positive(V0, "finite_well_bound_spectrum: V0");
  solvers::detail::require_positive(R, "finite_well_bound_spectrum: R");
  scales.validate();
  const double nu = dim.nu();
  const double v0 = scales.reduced_from_energy(V0);
  std::vector<double> grid = numerics::log_grid(v0 * 1e-60, v0, 512);
  grid.pop_back();  // |eps| = v0 means q = 0, not a bound state in the interior sense
  const double q_max = std::sqrt(v0);
  const int q_points = std::max(64, static_cast<int>(std::ceil(16.0 * q_max * R / pi)) + 1);
  for (int i = 1; i < q_points; ++i) {
    const double q = q_max * i / q_points;
    const double e = v0 - q * q;
    if (e > 0.0 && e < v0) grid.push_back(e);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  auto f = [&](double e) { return detail::finite_well_residual(nu, v0, R, e).value; };
  const auto brackets = numerics::sign_change_brackets(f, grid);
  std::vector<BoundState> out;
  for (const auto& b : brackets) {
    const auto root = b.lo == b.hi ? numerics::Root{b.lo, 0.0, {b.lo, b.hi}, 0} : numerics::brent(f, b.lo, b.hi);
    const auto r = detail::finite_well_residual(nu, v0, R, root.x);
    TranscendentalRoot tr;
    tr.eps = root.x;
    tr.residual = r.scale > 0.0 ? std::abs(r.value) / r.scale : 0.0;
    tr.bracket = {b.lo, b.hi};
    out.push_back({EnergyLevel::negative_level(0, root.x, scales), tr});
  }
  std::sort(out.begin(), out.end(), [](const BoundState& a, const BoundState& b) { return a.level.eps > b.level.eps; });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].level.N = static_cast<int>(i) + 1;
  return out;
}

inline radial::RadialWaveFunction finite_well_bound_wavefunction(const Dimension& dim, double V0, double R, int N,
                                                                 const PhysicalScales& scales = {}) {
  const auto spectrum = finite_well_bound_spectrum(dim, V0, R, scales);
  if (N < 1 || N > static_cast<int>(spectrum.size())) {
    throw domain_error("finite_well_bound_wavefunction: level " + std::to_string(N) + " out of range (the well has " +
                       std::to_string(spectrum.size()) + " bound states)");
  }
  const auto& level = spectrum[static_cast<std::size_t>(N - 1)].level;
  const double v0 = scales.reduced_from_energy(V0);
  const double q = std::sqrt(v0 - level.eps);
  const double kappa = std::sqrt(level.eps);
  const double nu = dim.nu();
  radial::RadialWaveFunction psi;
  psi.dimension = dim;
  psi.energy = level;
  psi.potential = radial::FiniteWell{V0, R};
  // Continuity without division: c_in J_nu(qR) = c_out e^{kappa R} K_nu(kappa R).
  radial::Term in;
  in.kind = radial::PieceKind::BesselJ;
  in.order = nu;
  in.scale = q;
  in.coeff = specfun::bessel_ik_scaled(nu, kappa * R).k;
  radial::Term out;
  out.kind = radial::PieceKind::BesselK;
  out.order = nu;
  out.scale = kappa;
  out.anchor = R;
  out.coeff = specfun::bessel_j(nu, q * R).value;
  psi.pieces.push_back({0.0, R, {in}});
  psi.pieces.push_back({R, std::numeric_limits<double>::infinity(), {out}});
  return radial::normalize(psi);
}

/// Printed closed form with prefactor 16 / (pi eps R^2), mu = sqrt(V0/E + 1).
inline double finite_well_paper_T(double nu, double v0, double R, double eps) {
  const double k = std::sqrt(eps);
  const double p = std::sqrt(eps + v0);
  const double mu = std::sqrt(v0 / eps + 1.0);
  const double x = k * R;
  const auto o = specfun::bessel_jy(nu, x);
  const double j1 = nu / x * o.j - o.jp;
  const double y1 = nu / x * o.y - o.yp;
  const auto in = specfun::bessel_jy(nu, p * R);
  const double jt = in.j;
  const double jt1 = nu / (p * R) * in.j - in.jp;
  const double a = jt * j1 - mu * o.j * jt1;
  const double b = jt * y1 - mu * o.y * jt1;
  return 16.0 / (pi * eps * R * R) / (a * a + b * b);
}

/// Solves
///   b Jt - a H1 = H2
///   b p Jt' - a k H1' = k H2'
/// with Jt = J_nu(pR), p = sqrt(eps + v0), H = H_nu(kR), for the interior
/// amplitude b and the outgoing amplitude a (unit incoming H^(2) wave).
inline ScatteringResult finite_well_scattering(const Dimension& dim, double V0, double R, double eps,
                                               const PhysicalScales& scales = {}) {
  solvers::detail::require_positive(R, "finite_well_scattering: R");
  solvers::detail::require_positive(eps, "finite_well_scattering: eps");
  scales.validate();
  if (!(V0 >= 0.0) || !std::isfinite(V0)) throw domain_error("finite_well_scattering: V0 must be >= 0");
  const double nu = dim.nu();
  const double v0 = scales.reduced_from_energy(V0);
  const double k = std::sqrt(eps);
  const double p = std::sqrt(eps + v0);
  const auto in = specfun::bessel_jy(nu, p * R);
  const auto o = specfun::bessel_jy(nu, k * R);
  const complex H1(o.j, o.y), H1p(o.jp, o.yp);
  const complex H2(o.j, -o.y), H2p(o.jp, -o.yp);
  const complex m11 = in.j, m12 = -H1;
  const complex m21 = p * in.jp, m22 = -k * H1p;
  const complex r1 = H2, r2 = k * H2p;
  const complex det = m11 * m22 - m12 * m21;
  if (det == complex(0.0, 0.0)) throw convergence_error("finite_well_scattering: singular matching system");
  ScatteringResult s;
  s.eps = eps;
  s.interior_coeff = (r1 * m22 - m12 * r2) / det;
  s.exterior_out_coeff = (m11 * r2 - r1 * m21) / det;
  s.exterior_reflection = std::norm(s.exterior_out_coeff);
  s.interior_intensity = std::norm(s.interior_coeff);
  s.paper_T = finite_well_paper_T(nu, v0, R, eps);
  return s;
}

inline radial::RadialWaveFunction finite_well_scattering_wavefunction(const Dimension& dim, double V0, double R,
                                                                      double eps, const PhysicalScales& scales = {}) {
  const auto s = finite_well_scattering(dim, V0, R, eps, scales);
  radial::RadialWaveFunction psi;
  psi.dimension = dim;
  psi.energy = EnergyLevel::continuum_level(eps, scales);
  psi.potential = radial::FiniteWell{V0, R};
  radial::Term t;
  t.order = dim.nu();
  t.kind = radial::PieceKind::BesselJ;
  t.scale = std::sqrt(eps + scales.reduced_from_energy(V0));
  t.coeff = s.interior_coeff;
  psi.pieces.push_back({0.0, R, {t}});
  radial::Term o = t, i = t;
  o.scale = i.scale = std::sqrt(eps);
  o.kind = radial::PieceKind::Hankel1;
  o.coeff = s.exterior_out_coeff;
  i.kind = radial::PieceKind::Hankel2;
  i.coeff = 1.0;
  psi.pieces.push_back({R, std::numeric_limits<double>::infinity(), {o, i}});
  return psi;
}

}  // namespace hyperradial::solvers
