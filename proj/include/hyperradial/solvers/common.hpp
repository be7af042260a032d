#pragma once

#include <utility>

#include "hyperradial/core.hpp"
#include "hyperradial/radial/model.hpp"

namespace hyperradial::solvers {

using radial::Dimension;
using radial::EnergyLevel;
using radial::PhysicalScales;

/// A refined root of a transcendental quantization condition.
struct TranscendentalRoot {
  double eps = 0.0;       ///< reduced energy |epsilon| at the root
  double residual = 0.0;  ///< relative residual of the defining equation
  std::pair<double, double> bracket{0.0, 0.0};  ///< in the same variable as eps
};

struct BoundState {
  EnergyLevel level;
  TranscendentalRoot root;
};

/// Stationary scattering state with unit incoming amplitude on H^(2).
///
/// exterior_reflection is |exterior_out_coeff|^2, which is 1 for every
/// real potential here (nothing leaves through r = 0). interior_intensity is
/// |interior_coeff|^2, the quantity the closed-form "T" formulas describe.
struct ScatteringResult {
  double eps = 0.0;
  complex interior_coeff{};
  complex exterior_out_coeff{};
  double exterior_reflection = 0.0;
  double interior_intensity = 0.0;
  double paper_T = 0.0;  ///< the printed closed form, kept for comparison only
};

namespace detail {

inline void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) throw domain_error(std::string(what) + " must be > 0");
}

}  // namespace detail

}  // namespace hyperradial::solvers
