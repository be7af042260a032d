#pragma once

// Kummer's confluent hypergeometric functions M(p, q, z) and U(p, q, z) for
// real parameters and real argument.

#include <cmath>
#include <limits>
#include <string>

#include "hyperradial/core.hpp"
#include "hyperradial/numerics/quadrature.hpp"
#include "hyperradial/specfun/gamma.hpp"
#include "hyperradial/specfun/polynomials.hpp"

namespace hyperradial::specfun {

namespace detail {

inline EvalResult kummer_m_series(double p, double q, double z) {
  double term = 1.0;
  double sum = 1.0;
  double abs_sum = 1.0;
  for (int k = 0; k < 200000; ++k) {
    const double ratio = (p + k) / ((q + k) * (k + 1.0)) * z;
    term *= ratio;
    sum += term;
    abs_sum += std::abs(term);
    if (term == 0.0) return {sum, 4.0 * machine_eps * abs_sum, Status::ok};
    if (!std::isfinite(sum)) {
      return {sum, std::numeric_limits<double>::infinity(), Status::overflow};
    }
    if (std::abs(ratio) < 0.5 && std::abs(term) <= 1e-17 * std::abs(sum)) {
      return {sum, 4.0 * machine_eps * abs_sum + std::abs(term), Status::ok};
    }
  }
  throw convergence_error("kummer_m: series did not converge");
}

// Large-z expansion U ~ z^{-p} sum (p)_k (p-q+1)_k / k! (-1/z)^k; false if not accurate.
inline bool kummer_u_asymptotic(double p, double q, double z, EvalResult& out) {
  double term = 1.0;
  double sum = 1.0;
  double last = 1.0;
  for (int k = 0; k < 500; ++k) {
    term *= -(p + k) * (p - q + 1.0 + k) / ((k + 1.0) * z);
    const double mag = std::abs(term);
    if (mag > last && k > 1) return false;
    sum += term;
    last = mag;
    if (mag <= 1e-17 * std::abs(sum)) {
      const double scale = std::pow(z, -p);
      out = {scale * sum, 8.0 * machine_eps * std::abs(scale * sum), Status::ok};
      return true;
    }
  }
  return false;
}

// U(a, b, z) = 1/Gamma(a) int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt, a > 0.
inline EvalResult kummer_u_integral(double a, double b, double z) {
  auto integrand = [a, b, z](double t) {
    if (t <= 0.0) return 0.0;
    return std::exp(-z * t + (a - 1.0) * std::log(t) + (b - a - 1.0) * std::log1p(t));
  };
  numerics::QuadratureOptions opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = 1e-14;
  opt.max_intervals = 20000;
  const auto r = numerics::integrate_to_infinity(integrand, 0.0, opt);
  const double rg = rgamma(a);
  return {r.value * rg, std::max(r.abs_error * std::abs(rg), 8.0 * machine_eps * std::abs(r.value * rg)),
          r.converged ? Status::ok : Status::divergent};
}

}  // namespace detail

/// Kummer's function M(p, q, z) = 1F1(p; q; z).
inline EvalResult kummer_m(double p, double q, double z) {
  if (is_nonpositive_integer(q)) {
    throw pole_error("kummer_m: q = " + std::to_string(q) + " is a non-positive integer");
  }
  if (is_nonpositive_integer(p)) {
    const int n = static_cast<int>(-p);
    double term = 1.0;
    double sum = 1.0;
    double abs_sum = 1.0;
    for (int k = 0; k < n; ++k) {
      term *= (p + k) / ((q + k) * (k + 1.0)) * z;
      sum += term;
      abs_sum += std::abs(term);
    }
    return {sum, 4.0 * machine_eps * abs_sum, Status::ok};
  }
  if (z < 0.0) {
    // Kummer's transformation keeps the series free of cancellation.
    const EvalResult t = kummer_m(q - p, q, -z);
    const double e = std::exp(z);
    return {e * t.value, e * t.est_abs_error, t.status};
  }
  return detail::kummer_m_series(p, q, z);
}

/// Tricomi's function U(p, q, z), z > 0.
///
/// p = -N: (-1)^N (q)_N M(-N, q, z), equal to (-1)^N N! L_N^(q-1)(z).
/// Otherwise, non-integer q: the connection formula through M; integer q:
/// the Laplace integral for p > 0 and the stable downward recurrence in p
/// below. Large z switches to the asymptotic series. Non-polynomial U with
/// q >= 1 is singular at z = 0 and reports Status::divergent_at_origin.
inline EvalResult kummer_u(double p, double q, double z) {
  if (!(z > 0.0)) throw domain_error("kummer_u: argument must be > 0");
  if (is_nonpositive_integer(p)) {
    const int n = static_cast<int>(-p);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    if (q - 1.0 > -1.0) {
      const double v = sign * factorial(n) * laguerre(n, q - 1.0, z);
      return {v, 16.0 * machine_eps * factorial(n) * (1.0 + std::abs(v)), Status::ok};
    }
    // (q)_N M(-N, q, z) = sum_k (-N)_k (q+k)_{N-k} z^k / k!, finite even where M has a pole.
    double sum = 0.0;
    double abs_sum = 0.0;
    double lead = 1.0;  // (-N)_k z^k / k!
    for (int k = 0; k <= n; ++k) {
      const double t = lead * pochhammer(q + k, n - k);
      sum += t;
      abs_sum += std::abs(t);
      lead *= (p + k) / (k + 1.0) * z;
    }
    return {sign * sum, 16.0 * machine_eps * abs_sum, Status::ok};
  }
  const Status flag = q >= 1.0 ? Status::divergent_at_origin : Status::ok;
  EvalResult r;
  if (z > 25.0 + std::abs(p) + std::abs(q) && detail::kummer_u_asymptotic(p, q, z, r)) {
    r.status = flag;
    return r;
  }
  if (!is_integer(q)) {
    const EvalResult m1 = kummer_m(p, q, z);
    const EvalResult m2 = kummer_m(p - q + 1.0, 2.0 - q, z);
    const double c1 = gamma_fn(1.0 - q).value * rgamma(p - q + 1.0);
    const double c2 = gamma_fn(q - 1.0).value * rgamma(p) * std::pow(z, 1.0 - q);
    const double t1 = c1 * m1.value;
    const double t2 = c2 * m2.value;
    r.value = t1 + t2;
    r.est_abs_error = std::abs(c1) * m1.est_abs_error + std::abs(c2) * m2.est_abs_error +
                      8.0 * machine_eps * (std::abs(t1) + std::abs(t2));
    r.status = flag;
    return r;
  }
  if (p > 0.0) {
    r = detail::kummer_u_integral(p, q, z);
    if (r.status == Status::ok) r.status = flag;
    return r;
  }
  // Integer q, negative non-integer p: U is recessive as p grows, so recur downward.
  const int m = static_cast<int>(std::ceil(-p)) + 1;
  double a = p + m;
  EvalResult hi = detail::kummer_u_integral(a + 1.0, q, z);
  EvalResult mid = detail::kummer_u_integral(a, q, z);
  double u_hi = hi.value;
  double u_mid = mid.value;
  for (int k = 0; k < m; ++k) {
    // U(a-1) = -(q - 2a - z) U(a) - a (a - q + 1) U(a+1)
    const double u_lo = -(q - 2.0 * a - z) * u_mid - a * (a - q + 1.0) * u_hi;
    u_hi = u_mid;
    u_mid = u_lo;
    a -= 1.0;
  }
  const double rel = (mid.est_abs_error / std::max(std::abs(mid.value), 1e-300)) + 64.0 * machine_eps * m;
  return {u_mid, rel * std::abs(u_mid), flag};
}

}  // namespace hyperradial::specfun
