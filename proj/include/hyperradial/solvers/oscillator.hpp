#pragma once

// Isotropic harmonic oscillator V = m omega^2 r^2 / 2, i.e. v = mu^2 r^2.

#include <cmath>
#include <vector>

#include "hyperradial/radial/wavefunction.hpp"
#include "hyperradial/solvers/common.hpp"
#include "hyperradial/specfun.hpp"

namespace hyperradial::solvers {

/// n >= 1: E_N = hbar omega (2N + (n+1)/2), N = 0..count-1.
/// n = 0: the full line ladder E_K = hbar omega (K + 1/2), even and odd K.
inline std::vector<EnergyLevel> oscillator_spectrum(const Dimension& dim, double omega, int count,
                                                    const PhysicalScales& scales = {}) {
  detail::require_positive(omega, "oscillator_spectrum: omega");
  scales.validate();
  if (count < 1) throw domain_error("oscillator_spectrum: count must be >= 1");
  const double hw = scales.hbar * omega;
  std::vector<EnergyLevel> out;
  for (int N = 0; N < count; ++N) {
    const double E = dim.is_line() ? hw * (N + 0.5) : hw * (2.0 * N + 0.5 * (dim.n() + 1));
    out.push_back(EnergyLevel::discrete_level(N, scales.reduced_from_energy(E), scales));
  }
  return out;
}

/// sqrt(2 N! mu^{(n+1)/2} / Gamma(N + (n+1)/2)), from the Laguerre
/// orthogonality integral with alpha = (n-1)/2 after rho = mu r^2.
inline double oscillator_norm_constant(const Dimension& dim, double mu, int N) {
  if (dim.is_line()) {
    return std::pow(mu / pi, 0.25) / std::sqrt(std::ldexp(specfun::factorial(N), N));
  }
  const double a = 0.5 * (dim.n() + 1);
  const double log_c2 = std::log(2.0) + specfun::lgamma_fn(N + 1.0) + a * std::log(mu) - specfun::lgamma_fn(N + a);
  return std::exp(0.5 * log_c2);
}

inline radial::RadialWaveFunction oscillator_wavefunction(const Dimension& dim, double omega, int N,
                                                          const PhysicalScales& scales = {}) {
  detail::require_positive(omega, "oscillator_wavefunction: omega");
  scales.validate();
  if (N < 0) throw domain_error("oscillator_wavefunction: N must be >= 0");
  const radial::Harmonic h{omega};
  const double mu = radial::oscillator_mu(h, scales);
  radial::RadialWaveFunction psi;
  psi.dimension = dim;
  psi.energy = oscillator_spectrum(dim, omega, N + 1, scales).back();
  psi.potential = h;
  radial::Term t;
  t.kind = dim.is_line() ? radial::PieceKind::GaussHermite : radial::PieceKind::GaussLaguerre;
  t.order = dim.is_line() ? 0.0 : dim.nu();
  t.scale = mu;
  t.degree = N;
  psi.pieces.push_back({0.0, std::numeric_limits<double>::infinity(), {t}});
  psi.norm_constant = oscillator_norm_constant(dim, mu, N);
  return psi;
}

/// The decaying second solution e^{-rho/2} U(p, (n+1)/2, rho) of the oscillator
/// equation at reduced energy eps, with p = (n+1)/4 - eps/(4 mu). Unless p is a
/// non-positive integer (where it collapses onto the Laguerre state) it behaves
/// like r^{1-n} at the origin: it is square-integrable only for n = 1, 2, and
/// its kinetic integral diverges for every n >= 1, which is why it is not a state.
inline radial::RadialWaveFunction oscillator_u_candidate(const Dimension& dim, double omega, double eps,
                                                         const PhysicalScales& scales = {}) {
  detail::require_positive(omega, "oscillator_u_candidate: omega");
  detail::require_positive(eps, "oscillator_u_candidate: eps");
  if (dim.is_line()) throw domain_error("oscillator_u_candidate: defined for n >= 1");
  const radial::Harmonic h{omega};
  const double mu = radial::oscillator_mu(h, scales);
  radial::RadialWaveFunction psi;
  psi.dimension = dim;
  psi.energy = EnergyLevel::discrete_level(0, eps, scales);
  psi.potential = h;
  radial::Term t;
  t.kind = radial::PieceKind::KummerU;
  t.order = 0.5 * (dim.n() + 1);
  t.param = 0.25 * (dim.n() + 1) - eps / (4.0 * mu);
  t.scale = mu;
  psi.pieces.push_back({0.0, std::numeric_limits<double>::infinity(), {t}});
  return psi;
}

}  // namespace hyperradial::solvers
