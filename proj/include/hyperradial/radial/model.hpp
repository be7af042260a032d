#pragma once

// Dimension bookkeeping, unit conventions and potentials for angular-invariant
// problems in n+1 spatial dimensions.

#include <cmath>
#include <string>
#include <variant>

#include <boost/rational.hpp>

#include "hyperradial/core.hpp"

namespace hyperradial::radial {

/// n angular coordinates, n+1 spatial dimensions, Bessel order nu = (n-1)/2.
class Dimension {
 public:
  explicit Dimension(int n) : n_(n) {
    if (n < 0) throw domain_error("Dimension: n must be >= 0, got " + std::to_string(n));
  }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] double nu() const { return 0.5 * (n_ - 1); }
  [[nodiscard]] boost::rational<long> nu_exact() const { return {n_ - 1, 2}; }
  /// n = 0 is the whole line; the even extension of a radial function covers
  /// both half-lines, so integrals over r >= 0 count twice.
  [[nodiscard]] bool is_line() const { return n_ == 0; }

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  int n_;
};

struct PhysicalScales {
  double hbar = 1.0;
  double mass = 1.0;

  void validate() const {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw domain_error("PhysicalScales: hbar must be > 0");
    if (!(mass > 0.0) || !std::isfinite(mass)) throw domain_error("PhysicalScales: mass must be > 0");
  }
  /// hbar^2 / 2m, the factor between reduced and physical energy.
  [[nodiscard]] double energy_unit() const { return hbar * hbar / (2.0 * mass); }
  [[nodiscard]] double energy_from_reduced(double eps) const { return energy_unit() * eps; }
  [[nodiscard]] double reduced_from_energy(double e) const { return e / energy_unit(); }
};

struct InfiniteWell {
  double R = 1.0;
};

struct Harmonic {
  double omega = 1.0;
};

struct Free {};

/// V = sign * g * delta(r - R). sign = +1 is a barrier, -1 a well.
struct DeltaShell {
  double g = 1.0;
  int sign = -1;
  double R = 1.0;
};

/// V = -V0 for r < R, 0 outside.
struct FiniteWell {
  double V0 = 1.0;
  double R = 1.0;
};

using Potential = std::variant<InfiniteWell, Harmonic, Free, DeltaShell, FiniteWell>;

inline std::string potential_name(const Potential& p) {
  struct {
    std::string operator()(const InfiniteWell&) const { return "infinite-well"; }
    std::string operator()(const Harmonic&) const { return "harmonic"; }
    std::string operator()(const Free&) const { return "free"; }
    std::string operator()(const DeltaShell&) const { return "delta-shell"; }
    std::string operator()(const FiniteWell&) const { return "finite-well"; }
  } v;
  return std::visit(v, p);
}

inline void validate(const Potential& p) {
  auto positive = [](double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) throw domain_error(std::string(what) + " must be > 0");
  };
  std::visit(
      [&](const auto& q) {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, InfiniteWell>) positive(q.R, "InfiniteWell.R");
        if constexpr (std::is_same_v<T, Harmonic>) positive(q.omega, "Harmonic.omega");
        if constexpr (std::is_same_v<T, DeltaShell>) {
          positive(q.R, "DeltaShell.R");
          // g = 0 is allowed: it is the free limit used by several checks.
          if (!(q.g >= 0.0) || !std::isfinite(q.g)) throw domain_error("DeltaShell.g must be >= 0");
          if (q.sign != 1 && q.sign != -1) throw domain_error("DeltaShell.sign must be +1 or -1");
        }
        if constexpr (std::is_same_v<T, FiniteWell>) {
          positive(q.R, "FiniteWell.R");
          positive(q.V0, "FiniteWell.V0");
        }
      },
      p);
}

/// Reduced delta coupling gamma with v = -gamma delta(r - R): positive for a well.
inline double reduced_coupling(const DeltaShell& d, const PhysicalScales& s) {
  return -d.sign * 2.0 * s.mass * d.g / (s.hbar * s.hbar);
}

/// DeltaShell with the given reduced coupling (positive gamma gives a well).
inline DeltaShell delta_shell_from_reduced(double gamma, double R, const PhysicalScales& s) {
  return DeltaShell{std::abs(gamma) * s.hbar * s.hbar / (2.0 * s.mass), gamma > 0.0 ? -1 : 1, R};
}

/// v0 = 2 m V0 / hbar^2.
inline double reduced_depth(const FiniteWell& w, const PhysicalScales& s) { return s.reduced_from_energy(w.V0); }

/// mu = m omega / hbar.
inline double oscillator_mu(const Harmonic& h, const PhysicalScales& s) { return s.mass * h.omega / s.hbar; }

/// Smooth part of the reduced potential v(r) = 2 m V(r) / hbar^2 for r >= 0.
/// The infinite wall is +inf outside R; the delta shell contributes nothing here.
inline double reduced_potential(const Potential& p, const PhysicalScales& s, double r) {
  r = std::abs(r);
  if (const auto* w = std::get_if<InfiniteWell>(&p)) return r <= w->R ? 0.0 : std::numeric_limits<double>::infinity();
  if (const auto* h = std::get_if<Harmonic>(&p)) {
    const double mu = oscillator_mu(*h, s);
    return mu * mu * r * r;
  }
  if (const auto* f = std::get_if<FiniteWell>(&p)) return r < f->R ? -reduced_depth(*f, s) : 0.0;
  return 0.0;
}

/// Quantum number, reduced energy and physical energy of one level.
///
/// Levels below zero (delta shell, finite well) store eps = |epsilon| and a
/// negative physical energy E = -(hbar^2/2m) eps.
struct EnergyLevel {
  enum class Kind { discrete, negative_energy, continuum };
  int N = 0;
  double eps = 0.0;
  double E = 0.0;
  Kind kind = Kind::discrete;

  /// Signed reduced energy epsilon = 2 m E / hbar^2.
  [[nodiscard]] double signed_eps() const { return kind == Kind::negative_energy ? -eps : eps; }

  static EnergyLevel discrete_level(int N, double eps, const PhysicalScales& s) {
    return {N, eps, s.energy_from_reduced(eps), Kind::discrete};
  }
  static EnergyLevel negative_level(int N, double abs_eps, const PhysicalScales& s) {
    return {N, abs_eps, -s.energy_from_reduced(abs_eps), Kind::negative_energy};
  }
  static EnergyLevel continuum_level(double eps, const PhysicalScales& s) {
    return {0, eps, s.energy_from_reduced(eps), Kind::continuum};
  }
};

inline const char* to_string(EnergyLevel::Kind k) {
  switch (k) {
    case EnergyLevel::Kind::discrete: return "discrete";
    case EnergyLevel::Kind::negative_energy: return "negative_energy";
    case EnergyLevel::Kind::continuum: return "continuum";
  }
  return "?";
}

/// r^2 u'' + (n - 2 nt) r u' + [(eps - v) r^2 + nt (nt - n + 1) - M] u = 0,
/// obtained from the radial equation by s = u / r^nt.
struct ReducedEquation {
  using Rational = boost::rational<long>;

  Dimension dimension{1};
  Rational exponent{0};  ///< the substitution power nt
  Rational M{0};         ///< angular separation constant, zero for radial problems
  Potential potential = Free{};
  PhysicalScales scales{};

  [[nodiscard]] Rational second_derivative_coeff() const { return 1; }
  [[nodiscard]] Rational first_derivative_coeff() const { return Rational(dimension.n()) - 2 * exponent; }
  [[nodiscard]] Rational constant_term() const {
    return exponent * (exponent - Rational(dimension.n()) + 1) - M;
  }
  /// Coefficient of u r^2: eps - v(r).
  [[nodiscard]] double r2_coeff(double eps, double r) const { return eps - reduced_potential(potential, scales, r); }
  /// True when the equation is Bessel's: r^2 u'' + r u' + (eps r^2 - nu^2) u = 0 for v = 0.
  /// (Rationals are compared with rationals only: mixed int comparisons recurse
  /// without end in Boost.Rational under C++20 rewritten operators.)
  [[nodiscard]] bool is_bessel_form() const {
    const Rational nu = dimension.nu_exact();
    return first_derivative_coeff() == Rational(1) && constant_term() == -nu * nu;
  }
};

/// Whittaker form u'' + [-1/4 + kappa/rho + c2/rho^2] u = 0 of the oscillator
/// equation under rho = mu r^2; needs exponent (n+1)/2 so that the u' term drops.
struct WhittakerForm {
  boost::rational<long> constant;     ///< -1/4
  double kappa;                       ///< eps / (4 mu)
  boost::rational<long> inverse_rho2;  ///< -((n+1)(n-3) + 4M) / 16
};

inline ReducedEquation reduce(const Dimension& dim, const Potential& pot, const PhysicalScales& scales,
                              boost::rational<long> exponent) {
  validate(pot);
  scales.validate();
  return ReducedEquation{dim, exponent, 0, pot, scales};
}

/// The reduction with exponent (n-1)/2 and M = 0.
inline ReducedEquation reduce(const Dimension& dim, const Potential& pot, const PhysicalScales& scales) {
  return reduce(dim, pot, scales, dim.nu_exact());
}

inline WhittakerForm whittaker_form(const ReducedEquation& eq, double eps) {
  const auto* h = std::get_if<Harmonic>(&eq.potential);
  if (h == nullptr) throw domain_error("whittaker_form: needs a harmonic potential");
  // r^2 u'' + c1 r u' in rho = mu r^2 is 4 rho^2 u_rr + (2 + 2 c1) rho u_r.
  if (eq.first_derivative_coeff() != boost::rational<long>(-1)) {
    throw domain_error("whittaker_form: exponent must be (n+1)/2 so the first-derivative term vanishes");
  }
  const double mu = oscillator_mu(*h, eq.scales);
  return {boost::rational<long>(-1, 4), eps / (4.0 * mu), eq.constant_term() / 4};
}

}  // namespace hyperradial::radial
