#pragma once

// Ascending power series for J, Y, I, K in 100-digit binary floating point,
// independent of the double-precision kernels in specfun. Used to produce and
// check the reference fixture table.

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "hyperradial/core.hpp"

namespace hyperradial::oracle {

using mp_real = boost::multiprecision::cpp_bin_float_100;

enum class SeriesFunction { J, Y, I, K };

inline std::string to_string(SeriesFunction f) {
  switch (f) {
    case SeriesFunction::J: return "J";
    case SeriesFunction::Y: return "Y";
    case SeriesFunction::I: return "I";
    case SeriesFunction::K: return "K";
  }
  return "?";
}

inline SeriesFunction parse_series_function(const std::string& s) {
  if (s == "J") return SeriesFunction::J;
  if (s == "Y") return SeriesFunction::Y;
  if (s == "I") return SeriesFunction::I;
  if (s == "K") return SeriesFunction::K;
  throw domain_error("series_reference: unknown function id '" + s + "'");
}

namespace detail {

struct SeriesSum {
  mp_real value;
  mp_real abs_sum;
};

// sum_k sign^k (x/2)^{2k+nu} / (k! Gamma(k+nu+1)). The term ratio
// (x/2)^2 / ((k+1)(k+1+nu)) decreases once k+1+nu > 0, so after that the tail
// is bounded by the next term over (1 - ratio).
inline SeriesSum power_series(const mp_real& nu, const mp_real& x, int sign, const mp_real& tol) {
  using boost::multiprecision::abs;
  using boost::multiprecision::pow;
  const mp_real h = x / 2;
  const mp_real h2 = h * h;
  mp_real term;
  // Gamma(nu+1) is infinite for nu a negative integer; those orders never reach here.
  term = pow(h, nu) / boost::math::tgamma(nu + 1);
  mp_real sum = term;
  mp_real abs_sum = abs(term);
  for (int k = 0; k < 100000; ++k) {
    const mp_real denom = mp_real(k + 1) * (nu + k + 1);
    term *= (sign > 0 ? h2 : mp_real(-h2)) / denom;
    sum += term;
    abs_sum += abs(term);
    const mp_real ratio = h2 / abs(mp_real(k + 2) * (nu + k + 2));
    if (nu + k + 2 > 0 && ratio < 0.5) {
      const mp_real tail = abs(term) * ratio / (1 - ratio);
      if (tail <= tol * abs(sum)) return {sum, abs_sum};
    }
  }
  throw convergence_error("series_reference: power series did not reach its truncation bound");
}

inline mp_real digamma_int(int m) {  // psi(m), m >= 1
  mp_real s = -boost::math::constants::euler<mp_real>();
  for (int j = 1; j < m; ++j) s += mp_real(1) / j;
  return s;
}

// The psi-weighted series shared by Y_n and K_n at integer order n >= 0:
// sum_k sign^k [psi(k+1) + psi(n+k+1)] (x/2)^{2k+n} / (k!(n+k)!).
inline mp_real psi_series(int n, const mp_real& x, int sign, const mp_real& tol) {
  using boost::multiprecision::abs;
  using boost::multiprecision::pow;
  const mp_real h = x / 2;
  const mp_real h2 = h * h;
  mp_real base = pow(h, n) / boost::math::tgamma(mp_real(n + 1));
  mp_real psi_a = digamma_int(1);
  mp_real psi_b = digamma_int(n + 1);
  mp_real sum = base * (psi_a + psi_b);
  for (int k = 0; k < 100000; ++k) {
    base *= (sign > 0 ? h2 : mp_real(-h2)) / (mp_real(k + 1) * (n + k + 1));
    psi_a += mp_real(1) / (k + 1);
    psi_b += mp_real(1) / (n + k + 1);
    const mp_real weight = psi_a + psi_b;
    const mp_real term = base * weight;
    sum += term;
    if (weight > 0) {
      // Next weights grow by at most 2/(k+2) each step, so the ratio of
      // successive |terms| is below r = a (1 + 2/((k+2) weight)), decreasing in k.
      const mp_real a = h2 / (mp_real(k + 2) * (n + k + 2));
      const mp_real r = a * (1 + mp_real(2) / ((k + 2) * weight));
      if (r < 0.5 && abs(term) * r / (1 - r) <= tol * abs(sum)) return sum;
    }
  }
  throw convergence_error("series_reference: psi series did not reach its truncation bound");
}

inline mp_real series_value(SeriesFunction f, const mp_real& nu, const mp_real& x, const mp_real& tol) {
  using boost::multiprecision::abs;
  using boost::multiprecision::log;
  using boost::multiprecision::pow;
  const mp_real pi_mp = boost::math::constants::pi<mp_real>();
  if (f == SeriesFunction::J) return power_series(nu, x, -1, tol).value;
  if (f == SeriesFunction::I) return power_series(nu, x, +1, tol).value;
  // Y_{-nu}, K_{-nu} reduce to the non-negative order: K is even in nu, and for
  // the half-integer nu = -1/2 the connection formula below works directly.
  const mp_real nu_abs = abs(nu);
  const mp_real rounded = boost::multiprecision::round(nu_abs);
  const bool integer = abs(nu_abs - rounded) == 0;
  if (!integer) {
    const mp_real s = boost::math::sin_pi(nu);
    const mp_real c = boost::math::cos_pi(nu);
    if (f == SeriesFunction::Y) {
      const mp_real jp = power_series(nu, x, -1, tol).value;
      const mp_real jm = power_series(-nu, x, -1, tol).value;
      return (jp * c - jm) / s;
    }
    const mp_real ip = power_series(nu_abs, x, +1, tol).value;
    const mp_real im = power_series(-nu_abs, x, +1, tol).value;
    return pi_mp / 2 * (im - ip) / boost::math::sin_pi(nu_abs);
  }
  const int n = static_cast<int>(rounded);
  const mp_real h = x / 2;
  const mp_real lh = log(h);
  mp_real finite = 0;
  for (int k = 0; k < n; ++k) {
    const mp_real c = boost::math::tgamma(mp_real(n - k)) / boost::math::tgamma(mp_real(k + 1));
    const mp_real t = c * pow(h, 2 * k - n);
    finite += (f == SeriesFunction::K && k % 2 == 1) ? mp_real(-t) : t;
  }
  if (f == SeriesFunction::Y) {
    const mp_real jn = power_series(mp_real(n), x, -1, tol).value;
    const mp_real y = (2 / pi_mp) * jn * lh - finite / pi_mp - psi_series(n, x, -1, tol) / pi_mp;
    // Y_{-n} = (-1)^n Y_n.
    return (nu < 0 && n % 2 == 1) ? mp_real(-y) : y;
  }
  const mp_real in = power_series(mp_real(n), x, +1, tol).value;
  const mp_real sgn = n % 2 == 0 ? mp_real(1) : mp_real(-1);
  return -sgn * lh * in + finite / 2 + sgn * psi_series(n, x, +1, tol) / 2;
}

}  // namespace detail

/// High-precision value of J, Y, I or K from ascending series, accurate to
/// `digits` significant digits. Requires 0 < x <= 30 and digits <= 50.
inline mp_real series_reference(SeriesFunction f, double nu, double x, int digits) {
  if (!(x > 0.0) || x > 30.0) {
    throw domain_error("series_reference: the truncation bound is only certified for 0 < x <= 30");
  }
  if (digits < 1 || digits > 50) throw domain_error("series_reference: digits must be in 1..50");
  if (nu < -0.5) throw domain_error("series_reference: order must be >= -1/2");
  const mp_real tol = boost::multiprecision::pow(mp_real(10), -(digits + 5));
  return detail::series_value(f, mp_real(nu), mp_real(x), tol);
}

inline mp_real series_reference(const std::string& id, double nu, double x, int digits) {
  return series_reference(parse_series_function(id), nu, x, digits);
}

struct FixtureRecord {
  SeriesFunction function;
  double nu;
  double x;
  std::string value;  // decimal text with at least 30 significant digits
};

/// The (function, nu, x) grid shipped in the reference fixture.
inline std::vector<FixtureRecord> default_fixture_grid() {
  const SeriesFunction fs[] = {SeriesFunction::J, SeriesFunction::Y, SeriesFunction::I, SeriesFunction::K};
  const double nus[] = {-0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.5, 7.3};
  const double xs[] = {0.05, 0.3, 1.0, 2.404825557695773, 3.7, 6.0, 10.0};
  std::vector<FixtureRecord> out;
  for (auto f : fs)
    for (double nu : nus)
      for (double x : xs) out.push_back({f, nu, x, {}});
  return out;
}

/// Fills the value column with `digits` significant digits.
inline void fill_fixture(std::vector<FixtureRecord>& records, int digits = 32) {
  for (auto& r : records) {
    const mp_real v = series_reference(r.function, r.nu, r.x, std::min(digits + 8, 50));
    std::ostringstream os;
    os << std::setprecision(digits) << std::scientific << v;
    r.value = os.str();
  }
}

/// One record per line: `function nu x value`, nu and x with 17 digits so they
/// round-trip to the same doubles.
inline void write_fixture(std::ostream& out, const std::vector<FixtureRecord>& records) {
  out << "# function nu x value\n";
  for (const auto& r : records) {
    out << to_string(r.function) << ' ' << std::setprecision(17) << r.nu << ' ' << r.x << ' ' << r.value << '\n';
  }
}

inline std::vector<FixtureRecord> read_fixture(std::istream& in) {
  std::vector<FixtureRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string f;
    FixtureRecord r{};
    if (!(is >> f >> r.nu >> r.x >> r.value)) throw domain_error("read_fixture: malformed line '" + line + "'");
    r.function = parse_series_function(f);
    out.push_back(r);
  }
  return out;
}

}  // namespace hyperradial::oracle
