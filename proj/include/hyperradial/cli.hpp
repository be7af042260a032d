#pragma once

// Command-line front end: flag grammar, run configuration and table emitters.
// Library users can drive parse_args/run directly; tools/hyperradial.cpp is a
// thin main() around them.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperradial/oracle/discrepancies.hpp"
#include "hyperradial/oracle/validation.hpp"
#include "hyperradial/radial.hpp"
#include "hyperradial/solvers.hpp"

namespace hyperradial::cli {

enum class Command { spectrum, wavefunction, scattering, zeros, closure, validate };
enum class Format { csv, json };

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_failure = 3;

inline const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> m = {
      {"spectrum", Command::spectrum}, {"wavefunction", Command::wavefunction}, {"scattering", Command::scattering},
      {"zeros", Command::zeros},       {"closure", Command::closure},           {"validate", Command::validate},
  };
  return m;
}

inline std::string to_string(Command c) {
  for (const auto& [k, v] : command_names())
    if (v == c) return k;
  return "?";
}

/// Parameters as given on the command line. Potential parameters are reduced
/// quantities: --gamma is 2mg/hbar^2 (positive for a well), --v0 is 2mV0/hbar^2.
struct RunConfig {
  Command command = Command::spectrum;
  std::string problem;
  int n = 0;
  double radius = 1.0;
  int levels = 5;
  double omega = 1.0;
  double gamma = 0.0;
  double v0 = 0.0;
  double eps = 1.0;
  double eps_from = 0.0;
  double eps_to = 0.0;
  int steps = 200;
  std::optional<double> target;
  std::optional<int> level;
  int samples = 200;
  std::optional<double> r_max;
  double nu = 0.0;
  int count = 5;
  double k = 1.0;
  std::optional<double> k_prime;
  double width = 0.05;
  std::string suite = "default";
  Format format = Format::csv;
  radial::PhysicalScales scales{};
};

struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = exit_ok;  ///< meaningful when config is empty
  std::string message;      ///< help text or diagnostic
};

namespace detail {

inline const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> p = {"infinite-well", "harmonic", "free", "delta-shell", "finite-well"};
  return p;
}

struct Grammar {
  CLI::App app{"Spectra, wave-functions and scattering for radial problems in n+1 dimensions", "hyperradial"};
  RunConfig cfg;
  std::string command;
  std::string format = "csv";
  std::optional<std::string> format_given;

  Grammar() {
    app.set_help_flag("-h,--help", "Print this flag grammar");
    app.add_option("command", command, "spectrum | wavefunction | scattering | zeros | closure | validate")
        ->required()
        ->check(CLI::IsMember({"spectrum", "wavefunction", "scattering", "zeros", "closure", "validate"}));
    app.add_option("--problem", cfg.problem, "infinite-well | harmonic | free | delta-shell | finite-well")
        ->check(CLI::IsMember(problem_names()));
    app.add_option("--n", cfg.n, "angular dimension count (space is n+1 dimensional)")->check(CLI::NonNegativeNumber);
    app.add_option("--radius", cfg.radius, "R of the well or shell")->check(CLI::PositiveNumber);
    app.add_option("--levels", cfg.levels, "number of levels (infinite-well, harmonic) [5]")
        ->check(CLI::PositiveNumber);
    app.add_option("--omega", cfg.omega, "oscillator frequency")->check(CLI::PositiveNumber);
    app.add_option("--gamma", cfg.gamma, "reduced delta coupling 2mg/hbar^2, > 0 for a well, < 0 for a barrier");
    app.add_option("--v0", cfg.v0, "reduced finite-well depth 2mV0/hbar^2")->check(CLI::NonNegativeNumber);
    app.add_option("--eps", cfg.eps, "reduced energy of a free mode")->check(CLI::PositiveNumber);
    app.add_option("--eps-from", cfg.eps_from, "scan start (reduced energy)")->check(CLI::PositiveNumber);
    app.add_option("--eps-to", cfg.eps_to, "scan end (reduced energy)")->check(CLI::PositiveNumber);
    app.add_option("--steps", cfg.steps, "scan points, ends included [200]")->check(CLI::Range(2, 10000000));
    app.add_option("--target", cfg.target, "list energies where the interior intensity equals this value")
        ->check(CLI::PositiveNumber);
    app.add_option("--level", cfg.level, "quantum number of the state to sample [lowest]")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--samples", cfg.samples, "sample points [200]")->check(CLI::Range(2, 10000000));
    app.add_option("--r-max", cfg.r_max, "outer sampling radius, or closure truncation radius [500]")
        ->check(CLI::PositiveNumber);
    app.add_option("--nu", cfg.nu, "Bessel order for zeros")->check(CLI::Range(-0.5, 1e6));
    app.add_option("--count", cfg.count, "number of zeros [5]")->check(CLI::PositiveNumber);
    app.add_option("--k", cfg.k, "closure wave number k [1]")->check(CLI::PositiveNumber);
    app.add_option("--k-prime", cfg.k_prime, "closure wave number k' [k]")->check(CLI::PositiveNumber);
    app.add_option("--width", cfg.width, "closure smearing width [0.05]")->check(CLI::PositiveNumber);
    app.add_option("--suite", cfg.suite, "validation matrix: default | coarse | empty")
        ->check(CLI::IsMember({"default", "coarse", "empty"}));
    app.add_option("--format", format_given, "csv | json [csv; json for validate]")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--hbar", cfg.scales.hbar, "hbar [1]")->check(CLI::PositiveNumber);
    app.add_option("--mass", cfg.scales.mass, "particle mass [1]")->check(CLI::PositiveNumber);
  }

  bool given(const std::string& flag) const { return app.count(flag) > 0; }
};

inline std::optional<std::string> missing(const Grammar& g, std::initializer_list<const char*> flags,
                                          const std::string& context) {
  for (const char* f : flags)
    if (!g.given(f)) return context + " requires " + f;
  return std::nullopt;
}

// Flags each problem needs, and which problems each command accepts.
inline std::optional<std::string> check_problem(const Grammar& g, const std::vector<std::string>& allowed) {
  const std::string cmd = g.command;
  if (!g.given("--problem")) return cmd + " requires --problem";
  const std::string& p = g.cfg.problem;
  if (std::find(allowed.begin(), allowed.end(), p) == allowed.end())
    return "--problem " + p + " is not available for " + cmd;
  const std::string ctx = cmd + " --problem " + p;
  if (!g.given("--n")) return ctx + " requires --n";
  if (p == "infinite-well") return missing(g, {"--radius"}, ctx);
  if (p == "harmonic") return missing(g, {"--omega"}, ctx);
  if (p == "free") return missing(g, {"--eps"}, ctx);
  if (p == "delta-shell") return missing(g, {"--gamma", "--radius"}, ctx);
  if (p == "finite-well") {
    if (auto m = missing(g, {"--v0", "--radius"}, ctx)) return m;
    if (cmd != "scattering" && !(g.cfg.v0 > 0.0)) return "--v0 must be > 0 for bound states";
  }
  return std::nullopt;
}

inline std::optional<std::string> check_command(const Grammar& g) {
  const RunConfig& c = g.cfg;
  switch (c.command) {
    case Command::spectrum:
      return check_problem(g, {"infinite-well", "harmonic", "delta-shell", "finite-well"});
    case Command::wavefunction:
      return check_problem(g, {"infinite-well", "harmonic", "free", "delta-shell", "finite-well"});
    case Command::scattering: {
      if (auto e = check_problem(g, {"delta-shell", "finite-well"})) return e;
      if (auto m = missing(g, {"--eps-from", "--eps-to"}, "scattering")) return m;
      if (!(c.eps_to > c.eps_from)) return "--eps-to must exceed --eps-from";
      return std::nullopt;
    }
    case Command::zeros:
      return missing(g, {"--nu"}, "zeros");
    case Command::closure:
      return missing(g, {"--n", "--k"}, "closure");
    case Command::validate:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

/// The --help text.
inline std::string usage() {
  detail::Grammar g;
  return g.app.help() +
         "\nRequired flags per command:\n"
         "  spectrum      --problem {infinite-well --radius | harmonic --omega | delta-shell --gamma --radius |\n"
         "                finite-well --v0 --radius} --n\n"
         "  wavefunction  as spectrum, or --problem free --eps; optional --level --samples --r-max\n"
         "  scattering    --problem {delta-shell --gamma | finite-well --v0} --radius --n --eps-from --eps-to\n"
         "                [--steps | --target]\n"
         "  zeros         --nu [--count]\n"
         "  closure       --n --k [--k-prime --r-max --width]\n"
         "  validate      [--suite]\n"
         "Exit codes: 0 success (an empty table carries a note), 2 invalid parameter, 3 computation failure.\n";
}

/// argv without the program name.
inline ParseResult parse_args(const std::vector<std::string>& args) {
  detail::Grammar g;
  std::vector<std::string> rev(args.rbegin(), args.rend());  // CLI11 consumes from the back
  try {
    g.app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, exit_ok, usage()};
  } catch (const CLI::ParseError& e) {
    return {std::nullopt, exit_invalid, e.what()};
  }
  RunConfig cfg = g.cfg;
  cfg.command = command_names().at(g.command);
  cfg.format = g.format_given ? (*g.format_given == "json" ? Format::json : Format::csv)
                              : (cfg.command == Command::validate ? Format::json : Format::csv);
  g.cfg = cfg;
  if (auto err = detail::check_command(g)) return {std::nullopt, exit_invalid, *err};
  return {cfg, exit_ok, {}};
}

// ---------------------------------------------------------------------------
// Tables

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::optional<std::string> note;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json extra = nlohmann::json::object();  ///< additional top-level JSON members
};

namespace detail {

inline std::string csv_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return radial::format_number(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

inline nlohmann::json json_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    // Round-trip through the 12-digit text so CSV and JSON carry the same numbers.
    return std::stod(radial::format_number(*d));
  }
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

}  // namespace detail

inline void emit(std::ostream& out, std::ostream& err, const Table& t, const RunConfig& cfg) {
  if (cfg.format == Format::csv) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << detail::csv_cell(row[i]);
      out << '\n';
    }
    if (t.note) err << "note: " << *t.note << '\n';
    return;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json o = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) o[t.columns[i]] = detail::json_cell(row[i]);
    rows.push_back(o);
  }
  nlohmann::json doc = {
      {"meta",
       {{"command", to_string(cfg.command)},
        {"params", t.params},
        {"units", {{"hbar", cfg.scales.hbar}, {"mass", cfg.scales.mass}, {"energy_unit", cfg.scales.energy_unit()}}}}},
      {"rows", rows}};
  if (t.note) doc["note"] = *t.note;
  for (const auto& [k, v] : t.extra.items()) doc[k] = v;
  out << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Commands

namespace detail {

using radial::Dimension;

inline nlohmann::json problem_params(const RunConfig& c) {
  nlohmann::json p = {{"problem", c.problem}, {"n", c.n}};
  if (c.problem == "infinite-well") p["radius"] = c.radius;
  if (c.problem == "harmonic") p["omega"] = c.omega;
  if (c.problem == "free") p["eps"] = c.eps;
  if (c.problem == "delta-shell") {
    p["gamma"] = c.gamma;
    p["radius"] = c.radius;
  }
  if (c.problem == "finite-well") {
    p["v0"] = c.v0;
    p["radius"] = c.radius;
  }
  return p;
}

inline double physical_depth(const RunConfig& c) { return c.scales.energy_from_reduced(c.v0); }

inline Cell level_cell(const radial::EnergyLevel& l) { return std::string(radial::to_string(l.kind)); }

inline Table run_spectrum(const RunConfig& c) {
  const Dimension dim(c.n);
  Table t;
  t.columns = {"N", "eps", "E", "kind", "residual"};
  t.params = problem_params(c);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto add = [&](const radial::EnergyLevel& l, double residual) {
    t.rows.push_back({static_cast<long long>(l.N), l.eps, l.E, level_cell(l), residual});
  };
  if (c.problem == "infinite-well" || c.problem == "harmonic") {
    t.params["levels"] = c.levels;
    const auto levels = c.problem == "infinite-well" ? solvers::infinite_well_spectrum(dim, c.radius, c.levels, c.scales)
                                                     : solvers::oscillator_spectrum(dim, c.omega, c.levels, c.scales);
    for (const auto& l : levels) add(l, nan);
  } else if (c.problem == "delta-shell") {
    if (const auto b = solvers::delta_bound_energy(dim, c.gamma, c.radius, c.scales)) {
      add(b->level, b->root.residual);
    } else {
      t.note = c.gamma > 0.0 ? "no bound state: gamma R must exceed 2 nu for this dimension"
                             : "no bound state: a barrier (gamma <= 0) binds nothing";
    }
  } else {
    for (const auto& b : solvers::finite_well_bound_spectrum(dim, physical_depth(c), c.radius, c.scales))
      add(b.level, b.root.residual);
    if (t.rows.empty()) t.note = "no bound state for this depth and radius";
  }
  return t;
}

inline radial::RadialWaveFunction select_wavefunction(const RunConfig& c, double& r_hi, std::optional<std::string>& note) {
  const Dimension dim(c.n);
  if (c.problem == "infinite-well") {
    r_hi = c.r_max.value_or(c.radius);
    return solvers::infinite_well_wavefunction(dim, c.radius, c.level.value_or(1), c.scales);
  }
  if (c.problem == "harmonic") {
    const int N = c.level.value_or(0);
    const double mu = radial::oscillator_mu(radial::Harmonic{c.omega}, c.scales);
    // Classical turning point plus a margin where the Gaussian is below 1e-10.
    r_hi = c.r_max.value_or(std::sqrt((4.0 * N + 2.0 * c.n + 2.0) / mu) + std::sqrt(46.0 / mu));
    return solvers::oscillator_wavefunction(dim, c.omega, N, c.scales);
  }
  if (c.problem == "free") {
    r_hi = c.r_max.value_or(20.0 * pi / std::sqrt(c.eps));
    note = "continuum mode, not normalizable; amplitude is J_nu(sqrt(eps) r) / r^nu";
    return solvers::free_mode(dim, c.eps, c.scales);
  }
  if (c.problem == "delta-shell") {
    if (c.level.value_or(1) != 1) throw domain_error("--level: the delta shell has at most one bound state (level 1)");
    auto psi = solvers::delta_bound_wavefunction(dim, c.gamma, c.radius, c.scales);
    r_hi = c.r_max.value_or(c.radius + 25.0 / std::sqrt(psi.energy.eps));
    return psi;
  }
  auto psi = solvers::finite_well_bound_wavefunction(dim, physical_depth(c), c.radius, c.level.value_or(1), c.scales);
  r_hi = c.r_max.value_or(c.radius + 25.0 / std::sqrt(psi.energy.eps));
  return psi;
}

inline Table run_wavefunction(const RunConfig& c) {
  Table t;
  t.params = problem_params(c);
  t.columns = {"r", "psi_real", "psi_imag", "piece_index"};
  if (c.problem == "delta-shell" &&
      !solvers::delta_bound_energy(Dimension(c.n), c.gamma, c.radius, c.scales).has_value()) {
    t.note = "no bound state, nothing to sample";
    return t;
  }
  double r_hi = 0.0;
  const auto psi = select_wavefunction(c, r_hi, t.note);
  const double r_lo = Dimension(c.n).is_line() ? -r_hi : 0.0;
  t.params["level"] = psi.energy.N;
  t.params["samples"] = c.samples;
  t.params["r_min"] = r_lo;
  t.params["r_max"] = r_hi;
  for (int i = 0; i < c.samples; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / (c.samples - 1);
    const complex v = psi.sample(r);
    t.rows.push_back({r, v.real(), v.imag(), static_cast<long long>(psi.piece_index(r))});
  }
  t.extra["descriptor"] = radial::to_json(psi);
  return t;
}

inline radial::Potential scattering_potential(const RunConfig& c) {
  if (c.problem == "delta-shell") return radial::delta_shell_from_reduced(c.gamma, c.radius, c.scales);
  return radial::FiniteWell{physical_depth(c), c.radius};
}

inline Table run_scattering(const RunConfig& c) {
  const Dimension dim(c.n);
  Table t;
  t.params = problem_params(c);
  t.params["eps_from"] = c.eps_from;
  t.params["eps_to"] = c.eps_to;
  if (c.target) {
    t.params["target"] = *c.target;
    t.columns = {"eps", "interior_intensity"};
    const auto pot = scattering_potential(c);
    for (double e : solvers::quantized_transmission_energies(pot, dim, *c.target, c.eps_from, c.eps_to, c.scales))
      t.rows.push_back({e, solvers::interior_intensity(pot, dim, e, c.scales)});
    if (t.rows.empty()) t.note = "interior intensity never equals the target in this range";
    return t;
  }
  t.params["steps"] = c.steps;
  t.columns = {"eps",          "interior_intensity", "exterior_reflection", "paper_T",
               "interior_re",  "interior_im",        "outgoing_re",         "outgoing_im"};
  for (int i = 0; i < c.steps; ++i) {
    const double e = c.eps_from + (c.eps_to - c.eps_from) * i / (c.steps - 1);
    const auto s = c.problem == "delta-shell"
                       ? solvers::delta_scattering(dim, c.gamma, c.radius, e, c.scales)
                       : solvers::finite_well_scattering(dim, physical_depth(c), c.radius, e, c.scales);
    t.rows.push_back({e, s.interior_intensity, s.exterior_reflection, s.paper_T, s.interior_coeff.real(),
                      s.interior_coeff.imag(), s.exterior_out_coeff.real(), s.exterior_out_coeff.imag()});
  }
  return t;
}

inline Table run_zeros(const RunConfig& c) {
  Table t;
  t.params = {{"nu", c.nu}, {"count", c.count}};
  t.columns = {"index", "zero"};
  const auto z = specfun::bessel_j_zeros(c.nu, c.count);
  for (std::size_t i = 0; i < z.size(); ++i) t.rows.push_back({static_cast<long long>(i + 1), z[i]});
  return t;
}

inline Table run_closure(const RunConfig& c) {
  Table t;
  const double kp = c.k_prime.value_or(c.k);
  const double rm = c.r_max.value_or(500.0);
  t.params = {{"n", c.n}, {"k", c.k}, {"k_prime", kp}, {"r_max", rm}, {"width", c.width}};
  t.columns = {"k", "k_prime", "r_max", "width", "value"};
  const auto p = solvers::closure_check(Dimension(c.n), c.k, kp, rm, c.width);
  t.rows.push_back({p.k, p.k_prime, p.r_max, p.smear_width, p.value});
  return t;
}

inline Table run_validate(const RunConfig& c, bool& all_passed) {
  Table t;
  t.params = {{"suite", c.suite}};
  t.columns = {"id", "closed_form", "oracle", "rel_diff", "converged", "tolerance", "passed"};
  const auto reports = oracle::cross_validate(c.suite);
  for (const auto& r : reports)
    t.rows.push_back({r.id, r.closed_form, r.oracle, r.rel_diff, std::string(r.converged ? "true" : "false"),
                      r.tolerance, std::string(r.passed() ? "true" : "false")});
  // JSON keeps converged/passed as booleans.
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& r : reports)
    jrows.push_back({{"id", r.id},
                     {"closed_form", r.closed_form},
                     {"oracle", r.oracle},
                     {"rel_diff", r.rel_diff},
                     {"converged", r.converged},
                     {"tolerance", r.tolerance},
                     {"passed", r.passed()}});
  t.extra["rows"] = jrows;

  const auto ledger = oracle::discrepancy_ledger();
  nlohmann::json disc = nlohmann::json::array();
  for (const auto& d : ledger)
    disc.push_back({{"id", d.id},
                    {"formula", d.formula},
                    {"resolution", d.resolution},
                    {"printed", detail::json_cell(d.printed)},
                    {"implemented", detail::json_cell(d.implemented)},
                    {"reference", detail::json_cell(d.reference)},
                    {"probe", d.probe},
                    {"required", d.required}});
  const auto missing_ids = oracle::missing_discrepancies(ledger);
  const auto failed = oracle::failures(reports);
  all_passed = failed.empty() && missing_ids.empty();
  t.extra["discrepancies"] = disc;
  t.extra["missing_discrepancies"] = missing_ids;
  t.extra["summary"] = {{"reports", reports.size()}, {"failures", failed.size()}, {"passed", all_passed}};
  if (reports.empty()) t.note = "empty parameter grid";
  return t;
}

inline void error_object(std::ostream& err, const std::string& kind, const std::string& message) {
  err << nlohmann::json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

}  // namespace detail

/// Runs one configuration; returns the process exit code.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    c.scales.validate();
    bool passed = true;
    Table t;
    switch (c.command) {
      case Command::spectrum: t = detail::run_spectrum(c); break;
      case Command::wavefunction: t = detail::run_wavefunction(c); break;
      case Command::scattering: t = detail::run_scattering(c); break;
      case Command::zeros: t = detail::run_zeros(c); break;
      case Command::closure: t = detail::run_closure(c); break;
      case Command::validate: t = detail::run_validate(c, passed); break;
    }
    emit(out, err, t, c);
    if (!passed) {
      detail::error_object(err, "validation-failed", "some reports failed or a ledger entry is missing");
      return exit_failure;
    }
    return exit_ok;
  } catch (const hyperradial::domain_error& e) {
    detail::error_object(err, "invalid-parameter", e.what());
    return exit_invalid;
  } catch (const std::exception& e) {
    detail::error_object(err, "computation-failure", e.what());
    return exit_failure;
  }
}

/// parse_args followed by run; what main() does.
inline int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParseResult p = parse_args(args);
  if (!p.config) {
    if (p.exit_code == exit_ok) {
      out << p.message;
    } else {
      detail::error_object(err, "invalid-parameter", p.message);
    }
    return p.exit_code;
  }
  return run(*p.config, out, err);
}

}  // namespace hyperradial::cli
