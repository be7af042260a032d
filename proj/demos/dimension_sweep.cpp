// Ground states of the four bound problems as the dimension grows, with R = 1,
// omega = 1, gamma = 6, v0 = 25 (hbar = m = 1).

#include <cstdio>

#include "hyperradial/solvers.hpp"

using namespace hyperradial;

int main() {
  std::printf("%3s %12s %12s %12s %12s\n", "n", "inf-well", "oscillator", "delta", "finite-well");
  for (int n = 0; n <= 8; ++n) {
    const radial::Dimension d(n);
    const double iw = solvers::infinite_well_spectrum(d, 1.0, 1).front().E;
    const double ho = solvers::oscillator_spectrum(d, 1.0, 1).front().E;
    const auto delta = solvers::delta_bound_energy(d, 6.0, 1.0);
    const auto well = solvers::finite_well_bound_spectrum(d, 12.5, 1.0);
    std::printf("%3d %12.6f %12.6f ", n, iw, ho);
    // The shell stops binding once gamma R <= 2 nu, here from n = 7 on.
    delta ? std::printf("%12.6f ", delta->level.E) : std::printf("%12s ", "none");
    well.empty() ? std::printf("%12s\n", "none") : std::printf("%12.6f\n", well.front().level.E);
  }
}
