#pragma once

// Free particle: standing modes and the continuum closure relation.

#include <cmath>
#include <limits>

#include "hyperradial/numerics/quadrature.hpp"
#include "hyperradial/radial/wavefunction.hpp"
#include "hyperradial/solvers/common.hpp"
#include "hyperradial/specfun.hpp"

namespace hyperradial::solvers {

/// J_nu(sqrt(eps) r) / r^nu on r >= 0. Since J = (H1 + H2) / 2 the incoming and
/// outgoing waves carry equal amplitude. Not normalizable.
inline radial::RadialWaveFunction free_mode(const Dimension& dim, double eps, const PhysicalScales& scales = {}) {
  detail::require_positive(eps, "free_mode: eps");
  scales.validate();
  radial::RadialWaveFunction psi;
  psi.dimension = dim;
  psi.energy = EnergyLevel::continuum_level(eps, scales);
  psi.potential = radial::Free{};
  radial::Term t;
  t.kind = radial::PieceKind::BesselJ;
  t.order = dim.nu();
  t.scale = std::sqrt(eps);
  psi.pieces.push_back({0.0, std::numeric_limits<double>::infinity(), {t}});
  return psi;
}

struct ClosureProbe {
  double k = 0.0;
  double k_prime = 0.0;
  double r_max = 0.0;
  double smear_width = 0.0;
  double value = 0.0;
};

/// int_0^L r J_nu(a r) J_nu(b r) dr in closed form (Lommel).
inline double truncated_bessel_overlap(double nu, double a, double b, double L) {
  const double xa = a * L;
  const double xb = b * L;
  if (std::abs(xa - xb) < 1e-4) {
    // Limit a = b taken at the midpoint, which is second-order accurate.
    const double x = 0.5 * (xa + xb);
    const auto jy = specfun::bessel_jy(nu, x);
    const double j1 = nu / x * jy.j - jy.jp;
    const double jm1 = 2.0 * nu / x * jy.j - j1;
    return 0.5 * L * L * (jy.j * jy.j - jm1 * j1);
  }
  const auto A = specfun::bessel_jy(nu, xa);
  const auto B = specfun::bessel_jy(nu, xb);
  const double a1 = nu / xa * A.j - A.jp;
  const double b1 = nu / xb * B.j - B.jp;
  return L * (a * a1 * B.j - b * A.j * b1) / ((a - b) * (a + b));
}

/// Completeness of the free modes, probed at finite radius. With
/// D(k1, k2) = sqrt(k1 k2) int_0^L r J_nu(k1 r) J_nu(k2 r) dr, which tends to
/// delta(k1 - k2), the probe is
///   value = int int G(k1 - k) G(k2 - k') D(k1, k2) dk1 dk2 / Z,
/// G a unit-mass Gaussian of standard deviation `smear_width` and
/// Z = 1 / (2 sigma sqrt(pi)) the value of the same double integral for an
/// exact delta at k = k'. Hence value -> exp(-(k - k')^2 / (4 sigma^2)) as
/// L grows: 1 on the diagonal and 0 far from it.
inline ClosureProbe closure_check(const Dimension& dim, double k, double k_prime, double r_max, double smear_width) {
  detail::require_positive(k, "closure_check: k");
  detail::require_positive(k_prime, "closure_check: k_prime");
  detail::require_positive(r_max, "closure_check: r_max");
  detail::require_positive(smear_width, "closure_check: smear_width");
  const double nu = dim.nu();
  const double s0 = 0.5 * (k + k_prime);
  const double d = k - k_prime;
  const double sigma = smear_width;
  // k1 = s + t/2, k2 = s - t/2; the Gaussian pair becomes
  // exp(-(s - s0)^2 / sigma^2) exp(-(t - d)^2 / (4 sigma^2)) / (2 pi sigma^2).
  const double s_half = 8.0 * sigma / std::sqrt(2.0);
  const double t_max = std::abs(d) + 8.0 * std::sqrt(2.0) * sigma;
  const double s_lo = std::max(s0 - s_half, 1e-12);
  const double s_hi = s0 + s_half;
  auto D = [&](double k1, double k2) {
    if (!(k1 > 0.0) || !(k2 > 0.0)) return 0.0;
    return std::sqrt(k1 * k2) * truncated_bessel_overlap(nu, k1, k2, r_max);
  };
  numerics::QuadratureOptions opt;
  opt.abs_tol = 1e-9;
  opt.rel_tol = 1e-9;
  opt.max_intervals = 20000;
  auto inner = [&](double t) {
    const double wt = std::exp(-(t - d) * (t - d) / (4.0 * sigma * sigma)) +
                      std::exp(-(t + d) * (t + d) / (4.0 * sigma * sigma));
    if (wt < 1e-300) return 0.0;
    auto f = [&](double s) { return std::exp(-(s - s0) * (s - s0) / (sigma * sigma)) * D(s + 0.5 * t, s - 0.5 * t); };
    // Split the s range at the oscillation scale pi / (2 L) of D in s.
    const int chunks = std::clamp(static_cast<int>((s_hi - s_lo) * r_max / pi) + 1, 1, 2000);
    double sum = 0.0;
    for (int c = 0; c < chunks; ++c) {
      const double lo = s_lo + (s_hi - s_lo) * c / chunks;
      const double hi = s_lo + (s_hi - s_lo) * (c + 1) / chunks;
      sum += numerics::integrate(f, lo, hi, opt).value;
    }
    return wt * sum;
  };
  const int t_chunks = std::clamp(static_cast<int>(t_max * r_max / pi) + 1, 1, 2000);
  double total = 0.0;
  for (int c = 0; c < t_chunks; ++c) {
    total += numerics::integrate(inner, t_max * c / t_chunks, t_max * (c + 1) / t_chunks, opt).value;
  }
  const double pair_norm = 1.0 / (2.0 * pi * sigma * sigma);
  const double Z = 1.0 / (2.0 * sigma * std::sqrt(pi));
  return {k, k_prime, r_max, smear_width, total * pair_norm / Z};
}

}  // namespace hyperradial::solvers
