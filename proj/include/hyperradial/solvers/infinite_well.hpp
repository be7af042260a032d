#pragma once

// Particle confined to r < R by an infinite wall.

#include <cmath>
#include <vector>

#include "hyperradial/radial/wavefunction.hpp"
#include "hyperradial/solvers/common.hpp"
#include "hyperradial/specfun.hpp"

namespace hyperradial::solvers {

/// E_N = (hbar^2/2m) (j_{nu,N} / R)^2 for N = 1..count.
inline std::vector<EnergyLevel> infinite_well_spectrum(const Dimension& dim, double R, int count,
                                                       const PhysicalScales& scales = {}) {
  detail::require_positive(R, "infinite_well_spectrum: R");
  scales.validate();
  if (count < 1) throw domain_error("infinite_well_spectrum: count must be >= 1");
  const auto zeros = specfun::bessel_j_zeros(dim.nu(), count);
  std::vector<EnergyLevel> out;
  out.reserve(zeros.size());
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const double k = zeros[i] / R;
    out.push_back(EnergyLevel::discrete_level(static_cast<int>(i) + 1, k * k, scales));
  }
  return out;
}

/// Normalization of J_nu(j r / R) / r^nu on the ball of radius R. From
/// int_0^R r J_nu(j r/R)^2 dr = R^2 J_{nu+1}(j)^2 / 2 at a zero j of J_nu;
/// the line (n = 0) counts both half-lines.
inline double infinite_well_norm_constant(const Dimension& dim, double R, int N) {
  const double j = specfun::bessel_j_zero(dim.nu(), N);
  const double jn1 = specfun::bessel_j(dim.nu() + 1.0, j).value;
  const double halves = dim.is_line() ? 2.0 : 1.0;
  return std::sqrt(2.0 / halves) / (R * std::abs(jn1));
}

inline radial::RadialWaveFunction infinite_well_wavefunction(const Dimension& dim, double R, int N,
                                                             const PhysicalScales& scales = {}) {
  detail::require_positive(R, "infinite_well_wavefunction: R");
  scales.validate();
  if (N < 1) throw domain_error("infinite_well_wavefunction: N must be >= 1");
  const double k = specfun::bessel_j_zero(dim.nu(), N) / R;
  radial::RadialWaveFunction psi;
  psi.dimension = dim;
  psi.energy = EnergyLevel::discrete_level(N, k * k, scales);
  psi.potential = radial::InfiniteWell{R};
  radial::Term t;
  t.kind = radial::PieceKind::BesselJ;
  t.order = dim.nu();
  t.scale = k;
  psi.pieces.push_back({0.0, R, {t}});
  psi.norm_constant = infinite_well_norm_constant(dim, R, N);
  return psi;
}

}  // namespace hyperradial::solvers
