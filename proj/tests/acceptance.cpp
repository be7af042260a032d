// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed below.
// Exit status is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "hyperradial/oracle.hpp"
#include "hyperradial/radial.hpp"
#include "hyperradial/solvers.hpp"
#include "hyperradial/specfun.hpp"

using namespace hyperradial;
using radial::Dimension;

namespace {

struct Check {
  std::string what;
  double value;
  double tol;
  [[nodiscard]] bool ok() const { return std::isfinite(value) && value <= tol; }
};

struct Criterion {
  int id;
  std::string title;
  std::vector<Check> checks;
  [[nodiscard]] bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return !checks.empty();
  }
};

double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

/// Worst rel_diff and convergence over the reports whose id starts with `prefix`.
Check from_reports(const std::vector<oracle::OracleReport>& reports, const std::string& prefix, double tol) {
  double worst = 0.0;
  int count = 0;
  for (const auto& r : reports) {
    if (r.id.rfind(prefix, 0) != 0) continue;
    ++count;
    worst = std::max(worst, r.converged ? r.rel_diff : std::numeric_limits<double>::infinity());
  }
  if (count == 0) worst = std::numeric_limits<double>::quiet_NaN();
  return {prefix + " oracle (" + std::to_string(count) + " values)", worst, tol};
}

Criterion infinite_well(const std::vector<oracle::OracleReport>& reports) {
  Criterion c{1, "infinite well", {}};
  c.checks.push_back(from_reports(reports, "infinite-well/", 1e-4));
  double worst = 0.0;
  for (const auto& l : solvers::infinite_well_spectrum(Dimension(2), 1.0, 5))
    worst = std::max(worst, rel(l.E, 0.5 * std::pow(l.N * pi, 2)));
  c.checks.push_back({"n=2 (N pi)^2/2", worst, 1e-12});
  return c;
}

Criterion oscillator(const std::vector<oracle::OracleReport>& reports) {
  Criterion c{2, "oscillator", {}};
  c.checks.push_back(from_reports(reports, "harmonic/", 1e-4));
  double ladder = 0.0;
  for (const auto& l : solvers::oscillator_spectrum(Dimension(0), 1.0, 10)) ladder = std::max(ladder, rel(l.E, l.N + 0.5));
  c.checks.push_back({"n=0 ladder K+1/2", ladder, 1e-14});
  double ortho = 0.0;
  for (int n = 0; n <= 5; ++n)
    for (int M = 0; M <= 4; ++M)
      for (int N = M; N <= 4; ++N) {
        const auto a = solvers::oscillator_wavefunction(Dimension(n), 1.0, M);
        const auto b = solvers::oscillator_wavefunction(Dimension(n), 1.0, N);
        ortho = std::max(ortho, std::abs(radial::overlap(a, b) - complex(M == N ? 1.0 : 0.0)));
      }
  c.checks.push_back({"orthonormality n<=5 N<=4", ortho, 1e-8});
  return c;
}

Criterion kernel() {
  Criterion c{3, "special-function kernel", {}};
  std::ifstream in(std::string(HYPERRADIAL_FIXTURE_DIR) + "/bessel_reference.txt");
  const auto records = oracle::read_fixture(in);
  double fixture_vs_series = records.empty() ? std::numeric_limits<double>::quiet_NaN() : 0.0;
  double kernel_vs_fixture = fixture_vs_series;
  int used = 0;
  for (const auto& r : records) {
    if (r.x > 10.0) continue;
    ++used;
    const double stored = std::stod(r.value);
    const double series = static_cast<double>(oracle::series_reference(r.function, r.nu, r.x, 32));
    double got = 0.0;
    switch (r.function) {
      case oracle::SeriesFunction::J: got = specfun::bessel_j(r.nu, r.x).value; break;
      case oracle::SeriesFunction::Y: got = specfun::bessel_y(r.nu, r.x).value; break;
      case oracle::SeriesFunction::I: got = specfun::bessel_i(r.nu, r.x).value; break;
      case oracle::SeriesFunction::K: got = specfun::bessel_k(r.nu, r.x).value; break;
    }
    // Values at a zero of the function are compared absolutely.
    auto diff = [](double a, double b) { return std::abs(b) < 1e-13 ? std::abs(a - b) / 1e-2 : rel(a, b); };
    fixture_vs_series = std::max(fixture_vs_series, diff(stored, series));
    kernel_vs_fixture = std::max(kernel_vs_fixture, diff(got, stored));
  }
  c.checks.push_back({"fixture vs series (" + std::to_string(used) + " values)", fixture_vs_series, 1e-11});
  c.checks.push_back({"kernel vs fixture", kernel_vs_fixture, 1e-11});
  double cross = 0.0;
  double modified = 0.0;
  for (double nu : {0.0, 0.5, 1.0, 2.5}) {
    std::vector<double> xs;
    for (double x = 0.1; x <= 50.0; x *= 1.17) xs.push_back(x);
    xs.push_back(50.0);
    for (double x : xs) {
      const double w = specfun::bessel_j(nu, x).value * specfun::bessel_y(nu + 1, x).value -
                       specfun::bessel_j(nu + 1, x).value * specfun::bessel_y(nu, x).value;
      cross = std::max(cross, rel(w, -2.0 / (pi * x)));
      const double m = specfun::bessel_i(nu, x).value * specfun::bessel_k(nu + 1, x).value +
                       specfun::bessel_i(nu + 1, x).value * specfun::bessel_k(nu, x).value;
      modified = std::max(modified, rel(m, 1.0 / x));
    }
  }
  c.checks.push_back({"cross Wronskian", cross, 1e-11});
  c.checks.push_back({"modified Wronskian", modified, 1e-11});
  return c;
}

Criterion delta_bound(const std::vector<oracle::OracleReport>& reports) {
  Criterion c{4, "delta shell bound state", {}};
  int mismatches = 0;
  for (int n = 2; n <= 7; ++n) {
    const double nu = Dimension(n).nu();
    for (double R : {0.5, 1.0, 2.0})
      for (int k = 0; k < 300; ++k) {
        const double gR = 2.0 * nu * (0.005 + 0.01 * k);
        const bool found = solvers::delta_bound_energy(Dimension(n), gR / R, R).has_value();
        if (found != (gR > 2.0 * nu)) ++mismatches;
      }
  }
  c.checks.push_back({"existence iff gamma R > 2 nu, n=2..7 (5400 points, mismatches)", double(mismatches), 0.0});
  double strong = 0.0;
  for (int n = 0; n <= 5; ++n) {
    const auto b = solvers::delta_bound_energy(Dimension(n), 1e3, 1.0);
    strong = std::max(strong, b ? rel(b->level.eps, 1e6 / 4.0) : std::numeric_limits<double>::infinity());
  }
  c.checks.push_back({"strong coupling gamma R=1e3", strong, 1e-2});
  c.checks.push_back(from_reports(reports, "delta-shell/", 1e-3));
  double jump = 0.0;
  for (int n = 0; n <= 5; ++n)
    for (double g : {5.0, 12.0}) {
      const auto psi = solvers::delta_bound_wavefunction(Dimension(n), g, 1.0);
      const auto m = radial::match_residual(psi, 0);
      const complex kick = g * m.left_value;
      jump = std::max({jump, m.value_jump, std::abs(m.right_derivative - m.left_derivative + kick) / std::abs(kick)});
    }
  c.checks.push_back({"jump condition residual", jump, 1e-8});
  return c;
}

Criterion delta_scattering(const std::vector<oracle::OracleReport>& reports) {
  Criterion c{5, "delta shell scattering", {}};
  double refl = 0.0;
  double free = 0.0;
  double sign = 0.0;
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i < 200; ++i) {
      const double e = 0.1 + 19.9 * i / 199.0;
      const auto well = solvers::delta_scattering(Dimension(n), 3.0, 1.0, e);
      const auto barrier = solvers::delta_scattering(Dimension(n), -3.0, 1.0, e);
      refl = std::max({refl, std::abs(well.exterior_reflection - 1.0), std::abs(barrier.exterior_reflection - 1.0)});
      free = std::max(free, std::abs(solvers::delta_scattering(Dimension(n), 0.0, 1.0, e).interior_intensity - 4.0));
      sign = std::max(sign, rel(barrier.interior_intensity, well.interior_intensity));
    }
  c.checks.push_back({"exterior reflection = 1, 200 eps points", refl, 1e-10});
  c.checks.push_back({"gamma=0 interior intensity = 4", free, 1e-10});
  c.checks.push_back({"well/barrier equal intensity", sign, 1e-10});
  c.checks.push_back(from_reports(reports, "delta-scattering/", 1e-6));
  return c;
}

Criterion finite_well(const std::vector<oracle::OracleReport>& reports) {
  Criterion c{6, "finite well", {}};
  double residual = 0.0;
  double matching = 0.0;
  for (int n = 0; n <= 5; ++n)
    for (double v0 : {5.0, 25.0, 100.0, 400.0}) {
      const auto sp = solvers::finite_well_bound_spectrum(Dimension(n), 0.5 * v0, 1.0);
      for (const auto& s : sp) {
        residual = std::max(residual, s.root.residual);
        const auto m = radial::match_residual(
            solvers::finite_well_bound_wavefunction(Dimension(n), 0.5 * v0, 1.0, s.level.N), 0);
        matching = std::max({matching, m.value_jump, m.derivative_jump});
      }
    }
  c.checks.push_back({"root residual", residual, 1e-10});
  c.checks.push_back({"wave-function matching", matching, 1e-10});
  c.checks.push_back(from_reports(reports, "finite-well/", 1e-4));
  double deep = 0.0;
  for (int n = 0; n <= 5; ++n) {
    const auto sp = solvers::finite_well_bound_spectrum(Dimension(n), 0.5e6, 1.0);
    const auto z = specfun::bessel_j_zeros(Dimension(n).nu(), 3);
    for (int N = 0; N < 3; ++N) deep = std::max(deep, rel(std::sqrt(1e6 - sp.at(N).level.eps), z[N]));
  }
  c.checks.push_back({"deep limit v0 R^2=1e6", deep, 1e-3});
  double shallow = 0.0;
  for (int n = 0; n <= 5; ++n)
    for (double e : {0.3, 2.0, 9.0})
      shallow = std::max(shallow,
                         std::abs(solvers::finite_well_scattering(Dimension(n), 1e-9, 1.0, e).interior_intensity - 4.0));
  c.checks.push_back({"V0 -> 0 intensity = 4", shallow, 1e-6});
  return c;
}

Criterion closure() {
  Criterion c{7, "closure relation", {}};
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (double k : {0.5, 1.0, 2.0})
      worst = std::max(worst, std::abs(solvers::closure_check(Dimension(n), k, k, 500.0, 0.05).value - 1.0));
  c.checks.push_back({"unit mass at r_max=500 width=0.05", worst, 0.03});
  return c;
}

Criterion ledger() {
  Criterion c{8, "discrepancy ledger", {}};
  const auto entries = oracle::discrepancy_ledger();
  c.checks.push_back({"missing required entries", double(oracle::missing_discrepancies(entries).size()), 0.0});
  // A divergent printed form is evidence in itself, so only NaN counts as missing.
  int without_evidence = 0;
  for (const auto& d : entries)
    if (std::isnan(d.printed) || std::isnan(d.implemented) || std::isnan(d.reference) || d.probe.empty())
      ++without_evidence;
  c.checks.push_back({"entries without computed evidence", double(without_evidence), 0.0});
  return c;
}

}  // namespace

int main() {
  const auto reports = oracle::cross_validate("default");
  const std::vector<Criterion> all = {infinite_well(reports), oscillator(reports),        kernel(),
                                      delta_bound(reports),   delta_scattering(reports), finite_well(reports),
                                      closure(),              ledger()};
  int failed = 0;
  for (const auto& c : all) {
    std::string detail;
    for (const auto& k : c.checks) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "; %s %.3g <= %.3g%s", k.what.c_str(), k.value, k.tol, k.ok() ? "" : " [fail]");
      detail += buf;
    }
    std::printf("criterion %d %s: %s%s\n", c.id, c.ok() ? "PASS" : "FAIL", c.title.c_str(), detail.c_str());
    if (!c.ok()) ++failed;
  }
  return failed;
}
