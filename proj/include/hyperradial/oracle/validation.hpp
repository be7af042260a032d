#pragma once

// Closed form against oracle over the parameter matrix of all problems.

#include <cmath>
#include <string>
#include <vector>

#include "hyperradial/oracle/finite_difference.hpp"
#include "hyperradial/oracle/shooting.hpp"
#include "hyperradial/solvers.hpp"

namespace hyperradial::oracle {

struct OracleReport {
  std::string id;
  double closed_form = 0.0;
  double oracle = 0.0;
  double rel_diff = 0.0;
  bool converged = false;
  double tolerance = 0.0;  ///< registered bound on rel_diff

  [[nodiscard]] bool passed() const { return converged && rel_diff <= tolerance; }
};

namespace detail {

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

inline OracleReport make_report(std::string id, double closed, double orc, bool conv, double tol) {
  return {std::move(id), closed, orc, rel_diff(orc, closed), conv, tol};
}

struct BoundCase {
  std::string label;
  Dimension dim;
  Potential pot;
  int count;
  Grid grid;
  FdOptions opt;
  std::vector<double> closed;  ///< reduced energies |eps|, ordered like the oracle
  double tol;
};

struct ScatterCase {
  std::string label;
  Dimension dim;
  Potential pot;
  double eps;
  Grid grid;
  double closed;
};

// Box ending where e^{-kappa (r - R)} is below 1e-13, with R on a cell face.
inline Grid decaying_grid(double R, double kappa, int per_unit) {
  const double L = std::ceil(R + 30.0 / kappa);
  return {0.0, L, static_cast<int>(L) * per_unit};
}

struct Matrix {
  std::vector<BoundCase> bound;
  std::vector<ScatterCase> scatter;
};

inline Matrix default_matrix(bool coarse) {
  const PhysicalScales sc;
  Matrix m;
  // The coarse control keeps the whole matrix but forces every grid down to
  // the 100-point minimum, which resolves almost nothing.
  auto pts = [&](int fine) { return coarse ? 100 : fine; };
  auto sized = [&](Grid g) {
    if (coarse) g.points = 100;
    return g;
  };
  // Infinite well, R = 1.
  for (int n = 0; n <= 5; ++n) {
    const Dimension d(n);
    std::vector<double> e;
    for (const auto& l : solvers::infinite_well_spectrum(d, 1.0, 5, sc)) e.push_back(l.eps);
    m.bound.push_back({"infinite-well/n=" + std::to_string(n) + "/R=1", d, radial::InfiniteWell{1.0}, 5,
                       Grid{0.0, 1.0, pts(1000)}, {}, e, 1e-4});
  }
  // Oscillator, omega = 1; the line carries both parities.
  for (int n = 0; n <= 5; ++n) {
    const Dimension d(n);
    std::vector<double> e;
    for (const auto& l : solvers::oscillator_spectrum(d, 1.0, 5, sc)) e.push_back(l.eps);
    FdOptions o;
    o.parity = Parity::both;
    m.bound.push_back({"harmonic/n=" + std::to_string(n) + "/omega=1", d, radial::Harmonic{1.0}, 5,
                       Grid{0.0, 12.0, pts(1200)}, o, e, 1e-4});
  }
  // Delta shell, R = 1, attractive.
  const std::vector<std::pair<int, double>> deltas = {{0, 4.0}, {0, 10.0}, {0, 50.0}, {1, 4.0}, {1, 10.0},
                                                      {2, 4.0}, {2, 10.0}, {3, 4.0},  {3, 10.0}};
  for (const auto& [n, g] : deltas) {
    const Dimension d(n);
    const auto b = solvers::delta_bound_energy(d, g, 1.0, sc);
    if (!b) continue;
    const Grid grid = sized(decaying_grid(1.0, std::sqrt(b->level.eps), std::max(200, static_cast<int>(50.0 * g))));
    m.bound.push_back({"delta-shell/n=" + std::to_string(n) + "/gammaR=" + fmt(g), d,
                       radial::delta_shell_from_reduced(g, 1.0, sc), 1, grid, {}, {b->level.eps}, 1e-3});
  }
  // Finite well, R = 1.
  const std::vector<std::pair<int, double>> wells = {{0, 25.0}, {1, 25.0}, {2, 25.0}, {3, 25.0}, {2, 100.0}};
  for (const auto& [n, v0] : wells) {
    const Dimension d(n);
    const auto sp = solvers::finite_well_bound_spectrum(d, 0.5 * v0, 1.0, sc);
    if (sp.empty()) continue;
    std::vector<double> e;
    for (const auto& s : sp) e.push_back(s.level.eps);
    const Grid grid = sized(decaying_grid(1.0, std::sqrt(sp.back().level.eps), 200));
    m.bound.push_back({"finite-well/n=" + std::to_string(n) + "/v0=" + fmt(v0), d, radial::FiniteWell{0.5 * v0, 1.0},
                       static_cast<int>(sp.size()), grid, {}, e, 1e-4});
  }
  // Scattering on both sides of the delta sign and through a finite well.
  for (int n = 0; n <= 3; ++n) {
    const Dimension d(n);
    for (double g : {3.0, -3.0}) {
      for (double eps : {0.5, 2.0, 5.0, 11.0}) {
        const auto s = solvers::delta_scattering(d, g, 1.0, eps, sc);
        m.scatter.push_back({"delta-scattering/n=" + std::to_string(n) + "/gammaR=" + fmt(g) + "/eps=" + fmt(eps), d,
                             radial::delta_shell_from_reduced(g, 1.0, sc), eps, sized(Grid{0.0, 2.0, 2000}),
                             s.interior_intensity});
      }
    }
    for (double eps : {0.5, 2.0, 7.0}) {
      const auto s = solvers::finite_well_scattering(d, 5.0, 1.0, eps, sc);
      m.scatter.push_back({"finite-well-scattering/n=" + std::to_string(n) + "/v0=10/eps=" + fmt(eps), d,
                           radial::FiniteWell{5.0, 1.0}, eps, sized(Grid{0.0, 2.0, 2000}), s.interior_intensity});
    }
  }
  return m;
}

}  // namespace detail

/// Runs a named suite: "default" (the full matrix), "coarse" (a negative
/// control on 100-point grids, expected to report non-convergence) or
/// "empty". Unknown names are a domain error.
inline std::vector<OracleReport> cross_validate(const std::string& suite = "default") {
  if (suite == "empty") return {};
  if (suite != "default" && suite != "coarse") throw domain_error("cross_validate: unknown suite '" + suite + "'");
  const auto m = detail::default_matrix(suite == "coarse");
  const PhysicalScales sc;
  std::vector<OracleReport> out;
  for (const auto& c : m.bound) {
    const auto fd = fd_bound_spectrum(c.dim, c.pot, c.grid, c.count, sc, c.opt);
    const bool below_zero = std::holds_alternative<radial::DeltaShell>(c.pot) || std::holds_alternative<radial::FiniteWell>(c.pot);
    for (std::size_t i = 0; i < c.closed.size(); ++i) {
      const int N = below_zero ? static_cast<int>(i) + 1
                               : (std::holds_alternative<radial::InfiniteWell>(c.pot) ? static_cast<int>(i) + 1
                                                                                      : static_cast<int>(i));
      const std::string id = c.label + "/N=" + std::to_string(N) + "/eps";
      if (i >= fd.levels.size()) {
        out.push_back({id, c.closed[i], std::nan(""), std::numeric_limits<double>::infinity(), false, c.tol});
        continue;
      }
      out.push_back(detail::make_report(id, c.closed[i], fd.levels[i].eps, fd.detail[i].converged, c.tol));
    }
  }
  for (const auto& c : m.scatter) {
    const auto fd = fd_scattering_checked(c.dim, c.pot, c.eps, c.grid, sc);
    out.push_back(detail::make_report(c.label + "/interior_intensity", c.closed, fd.result.interior_intensity,
                                      fd.converged, 1e-6));
  }
  return out;
}

/// Reports that are unconverged or outside their tolerance.
inline std::vector<OracleReport> failures(const std::vector<OracleReport>& reports) {
  std::vector<OracleReport> bad;
  for (const auto& r : reports)
    if (!r.passed()) bad.push_back(r);
  return bad;
}

}  // namespace hyperradial::oracle
