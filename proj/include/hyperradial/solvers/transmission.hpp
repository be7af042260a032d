#pragma once

// Energies at which the interior intensity takes a prescribed value.

#include <algorithm>
#include <cmath>
#include <vector>

#include "hyperradial/numerics/roots.hpp"
#include "hyperradial/solvers/delta_shell.hpp"
#include "hyperradial/solvers/finite_well.hpp"

namespace hyperradial::solvers {

/// Interior intensity of a delta shell or finite well at reduced energy eps.
inline double interior_intensity(const radial::Potential& pot, const Dimension& dim, double eps,
                                 const PhysicalScales& scales = {}) {
  if (const auto* d = std::get_if<radial::DeltaShell>(&pot)) {
    return delta_scattering(dim, radial::reduced_coupling(*d, scales), d->R, eps, scales).interior_intensity;
  }
  if (const auto* w = std::get_if<radial::FiniteWell>(&pot)) {
    return finite_well_scattering(dim, w->V0, w->R, eps, scales).interior_intensity;
  }
  throw domain_error("interior_intensity: needs a delta-shell or finite-well potential");
}

/// All eps in [eps_lo, eps_hi] with interior_intensity(eps) = T_target, in
/// increasing order. The scan is uniform in k = sqrt(eps) with at least 32
/// points per pi / R (the oscillation period of the Bessel factors), each
/// crossing refined by Brent. Tangential touches between grid points are missed.
inline std::vector<double> quantized_transmission_energies(const radial::Potential& pot, const Dimension& dim,
                                                           double T_target, double eps_lo, double eps_hi,
                                                           const PhysicalScales& scales = {}) {
  radial::validate(pot);
  detail::require_positive(T_target, "quantized_transmission_energies: T_target");
  detail::require_positive(eps_lo, "quantized_transmission_energies: eps_from");
  if (!(eps_hi > eps_lo) || !std::isfinite(eps_hi)) {
    throw domain_error("quantized_transmission_energies: need eps_from < eps_to");
  }
  double R = 0.0;
  if (const auto* d = std::get_if<radial::DeltaShell>(&pot)) R = d->R;
  if (const auto* w = std::get_if<radial::FiniteWell>(&pot)) R = w->R;
  if (R == 0.0) throw domain_error("quantized_transmission_energies: needs a delta-shell or finite-well potential");
  const double k_lo = std::sqrt(eps_lo);
  const double k_hi = std::sqrt(eps_hi);
  const int points = std::max(256, static_cast<int>(std::ceil(32.0 * (k_hi - k_lo) * R / pi)) + 1);
  auto f = [&](double k) { return interior_intensity(pot, dim, k * k, scales) - T_target; };
  const auto brackets = numerics::sign_change_brackets(f, numerics::linear_grid(k_lo, k_hi, points));
  std::vector<double> out;
  for (const auto& b : brackets) {
    const double k = b.lo == b.hi ? b.lo : numerics::brent(f, b.lo, b.hi).x;
    out.push_back(k * k);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hyperradial::solvers
