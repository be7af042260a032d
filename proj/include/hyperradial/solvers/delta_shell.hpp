#pragma once

// Spherical delta shell v = -gamma delta(r - R); gamma > 0 is attractive.
//
// Matching at R: Psi continuous, Psi'(R+) - Psi'(R-) = -gamma Psi(R).

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "hyperradial/numerics/roots.hpp"
#include "hyperradial/radial/integrals.hpp"
#include "hyperradial/radial/wavefunction.hpp"
#include "hyperradial/solvers/common.hpp"
#include "hyperradial/specfun.hpp"

namespace hyperradial::solvers {

/// I_nu(x) K_nu(x), computed from the scaled pair so it never overflows.
inline double bessel_ik_product(double nu, double x) {
  const auto b = specfun::bessel_ik_scaled(nu, x);
  return b.i * b.k;
}

/// Small-coupling estimate eps ~ 2 (nu^2 - 1) / R^2 * (1 - 2 nu / (gamma R)),
/// from I_nu K_nu(x) ~ (1 - x^2 / (2 (nu^2 - 1))) / (2 nu). Meaningful for
/// nu > 1 just above the threshold gamma R = 2 nu.
inline std::optional<double> delta_weak_coupling_estimate(const Dimension& dim, double gamma, double R) {
  const double nu = dim.nu();
  if (!(nu > 1.0) || !(gamma * R > 2.0 * nu)) return std::nullopt;
  return 2.0 * (nu * nu - 1.0) / (R * R) * (1.0 - 2.0 * nu / (gamma * R));
}

/// Root of I_nu(x) K_nu(x) = 1 / (gamma R) in x = sqrt(eps) R. The product
/// falls monotonically from its x -> 0 limit (1/(2 nu) for nu > 0, infinite
/// otherwise) to 0, so there is at most one root, and it exists iff
/// gamma R > 2 nu when nu > 0.
inline std::optional<BoundState> delta_bound_energy(const Dimension& dim, double gamma, double R,
                                                    const PhysicalScales& scales = {}) {
  detail::require_positive(R, "delta_bound_energy: R");
  scales.validate();
  if (!std::isfinite(gamma)) throw domain_error("delta_bound_energy: gamma must be finite");
  if (!(gamma > 0.0)) return std::nullopt;
  const double nu = dim.nu();
  // At gamma R = 2 nu the scan would pick up rounding noise at its lower end.
  if (nu > 0.0 && !(gamma * R > 2.0 * nu)) return std::nullopt;
  const double target = 1.0 / (gamma * R);
  auto f = [&](double x) { return bessel_ik_product(nu, x) * gamma * R - 1.0; };
  const double hi = std::max(2.0 * gamma * R, 20.0);
  double lo = 1e-12;
  // For nu <= 0 the product diverges at 0, so a root always exists but can sit
  // far below 1e-12 when gamma R is small.
  while (nu <= 0.0 && f(lo) < 0.0 && lo > 1e-290) lo *= 1e-12;
  const auto grid = numerics::log_grid(lo, hi, 512);
  const auto brackets = numerics::sign_change_brackets(f, grid);
  if (brackets.empty()) return std::nullopt;
  const auto b = brackets.front();
  const auto root = b.lo == b.hi ? numerics::Root{b.lo, 0.0, {b.lo, b.hi}, 0} : numerics::brent(f, b.lo, b.hi);
  const double x = root.x;
  const double eps = x * x / (R * R);
  TranscendentalRoot tr;
  tr.eps = eps;
  tr.residual = std::abs(bessel_ik_product(nu, x) - target) / target;
  tr.bracket = {b.lo * b.lo / (R * R), b.hi * b.hi / (R * R)};
  return BoundState{EnergyLevel::negative_level(1, eps, scales), tr};
}

/// a I_nu(kappa r) / r^nu inside, K_nu(kappa r) / r^nu outside, continuous at R, normalized.
inline radial::RadialWaveFunction delta_bound_wavefunction(const Dimension& dim, double gamma, double R,
                                                           const PhysicalScales& scales = {}) {
  const auto bs = delta_bound_energy(dim, gamma, R, scales);
  if (!bs) throw domain_error("delta_bound_wavefunction: no bound state for this coupling");
  const double kappa = std::sqrt(bs->level.eps);
  const auto ik = specfun::bessel_ik_scaled(dim.nu(), kappa * R);
  radial::RadialWaveFunction psi;
  psi.dimension = dim;
  psi.energy = bs->level;
  psi.potential = radial::delta_shell_from_reduced(gamma, R, scales);
  radial::Term in;
  in.kind = radial::PieceKind::BesselI;
  in.order = dim.nu();
  in.scale = kappa;
  in.anchor = R;
  in.coeff = ik.k;
  radial::Term out = in;
  out.kind = radial::PieceKind::BesselK;
  out.coeff = ik.i;
  psi.pieces.push_back({0.0, R, {in}});
  psi.pieces.push_back({R, std::numeric_limits<double>::infinity(), {out}});
  return radial::normalize(psi);
}

/// Printed closed form for the interior intensity, 16 / [(pi g R J Y)^2 + (pi g R J^2 - 2)^2].
inline double delta_paper_T(double nu, double gamma, double R, double eps) {
  const auto jy = specfun::bessel_jy(nu, std::sqrt(eps) * R);
  const double c = pi * gamma * R;
  const double u = c * jy.j * jy.y;
  const double w = c * jy.j * jy.j - 2.0;
  return 16.0 / (u * u + w * w);
}

/// Solves
///   a J - b H1 = H2
///   a (gamma J - k J') + b k H1' = -k H2'
/// at x = k R for the interior amplitude a (on J_nu) and the outgoing
/// amplitude b (on H^(1)); the incoming H^(2) wave has unit amplitude.
inline ScatteringResult delta_scattering(const Dimension& dim, double gamma, double R, double eps,
                                         const PhysicalScales& scales = {}) {
  detail::require_positive(R, "delta_scattering: R");
  detail::require_positive(eps, "delta_scattering: eps");
  scales.validate();
  if (!std::isfinite(gamma)) throw domain_error("delta_scattering: gamma must be finite");
  const double nu = dim.nu();
  const double k = std::sqrt(eps);
  const auto jy = specfun::bessel_jy(nu, k * R);
  const complex J = jy.j;
  const complex Jp = jy.jp;
  const complex H1(jy.j, jy.y), H1p(jy.jp, jy.yp);
  const complex H2(jy.j, -jy.y), H2p(jy.jp, -jy.yp);
  const complex m11 = J, m12 = -H1;
  const complex m21 = gamma * J - k * Jp, m22 = k * H1p;
  const complex r1 = H2, r2 = -k * H2p;
  const complex det = m11 * m22 - m12 * m21;
  if (det == complex(0.0, 0.0)) throw convergence_error("delta_scattering: singular matching system");
  ScatteringResult s;
  s.eps = eps;
  s.interior_coeff = (r1 * m22 - m12 * r2) / det;
  s.exterior_out_coeff = (m11 * r2 - r1 * m21) / det;
  s.exterior_reflection = std::norm(s.exterior_out_coeff);
  s.interior_intensity = std::norm(s.interior_coeff);
  s.paper_T = delta_paper_T(nu, gamma, R, eps);
  return s;
}

/// Stationary scattering wave-function for unit incoming amplitude.
inline radial::RadialWaveFunction delta_scattering_wavefunction(const Dimension& dim, double gamma, double R,
                                                                double eps, const PhysicalScales& scales = {}) {
  const auto s = delta_scattering(dim, gamma, R, eps, scales);
  radial::RadialWaveFunction psi;
  psi.dimension = dim;
  psi.energy = EnergyLevel::continuum_level(eps, scales);
  psi.potential = radial::delta_shell_from_reduced(gamma, R, scales);
  radial::Term t;
  t.order = dim.nu();
  t.scale = std::sqrt(eps);
  t.kind = radial::PieceKind::BesselJ;
  t.coeff = s.interior_coeff;
  psi.pieces.push_back({0.0, R, {t}});
  radial::Term o = t, i = t;
  o.kind = radial::PieceKind::Hankel1;
  o.coeff = s.exterior_out_coeff;
  i.kind = radial::PieceKind::Hankel2;
  i.coeff = 1.0;
  psi.pieces.push_back({R, std::numeric_limits<double>::infinity(), {o, i}});
  return psi;
}

}  // namespace hyperradial::solvers
