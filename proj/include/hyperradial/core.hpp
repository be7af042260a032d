#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hyperradial {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr double machine_eps = std::numeric_limits<double>::epsilon();

/// Invalid argument outside an operation's domain.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument sits on a pole (Gamma at non-positive integers, Kummer M with q = 0, -1, ...).
class pole_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// An iterative method failed to reach its tolerance.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An integral over a wave-function does not exist.
class divergence_error : public domain_error {
 public:
  enum class Kind {
    non_integrable,    ///< r^n |psi|^2 is not integrable at the origin
    kinetic,           ///< square-integrable, but r^n |psi'|^2 diverges at the origin
    not_normalizable,  ///< oscillatory tail on an unbounded interval
  };
  divergence_error(Kind k, const std::string& what) : domain_error(what), kind_(k) {}
  [[nodiscard]] Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

enum class Status {
  ok,
  overflow,             ///< value left the double range; est_abs_error is infinite
  divergent_at_origin,  ///< function is singular as its argument goes to 0
  divergent,            ///< integral or expectation value does not exist
};

inline const char* to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::overflow: return "overflow";
    case Status::divergent_at_origin: return "divergent_at_origin";
    case Status::divergent: return "divergent";
  }
  return "unknown";
}

/// Value with an a-posteriori absolute error estimate.
template <typename T>
struct BasicEvalResult {
  T value{};
  double est_abs_error = 0.0;
  Status status = Status::ok;

  [[nodiscard]] bool ok() const { return status == Status::ok; }
  operator T() const { return value; }  // NOLINT(google-explicit-constructor)
};

using EvalResult = BasicEvalResult<double>;
using ComplexEvalResult = BasicEvalResult<complex>;

/// sin(pi x) exact at integers and half-integers.
inline double sinpi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == 1.5) return -1.0;
  if (r > 1.0) return -std::sin(pi * (r - 1.0));
  return std::sin(pi * r);
}

/// cos(pi x) exact at integers and half-integers.
inline double cospi(double x) { return sinpi(x + 0.5); }

inline bool is_integer(double x) { return std::isfinite(x) && x == std::nearbyint(x); }

inline bool is_nonpositive_integer(double x) { return x <= 0.0 && is_integer(x); }

/// |a - b| / max(|b|, floor)
inline double rel_diff(double a, double b, double floor = 1e-300) {
  return std::abs(a - b) / std::max(std::abs(b), floor);
}

}  // namespace hyperradial
