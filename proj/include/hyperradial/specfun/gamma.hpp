#pragma once

#include <array>
#include <cmath>
#include <string>

#include "hyperradial/core.hpp"

namespace hyperradial::specfun {

namespace detail {

// B_{2k} / (2k (2k-1)), k = 1..8
inline constexpr std::array<double, 8> stirling_coeffs = {
    1.0 / 12.0,       -1.0 / 360.0,          1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,     -691.0 / 360360.0,     1.0 / 156.0,   -3617.0 / 122400.0,
};

inline constexpr double stirling_threshold = 20.0;

// Tail of the Stirling series, z >= stirling_threshold.
inline double stirling_tail(double z) {
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double sum = 0.0;
  for (int k = static_cast<int>(stirling_coeffs.size()) - 1; k >= 0; --k) {
    sum = sum * inv2 + stirling_coeffs[static_cast<std::size_t>(k)];
  }
  return sum * inv;
}

// Gamma(z) for z >= stirling_threshold without intermediate overflow.
inline double gamma_stirling(double z) {
  const double half_power = std::pow(z, 0.5 * (z - 0.5));
  double v = half_power * std::exp(-z);
  v *= half_power;
  return v * std::sqrt(2.0 * pi) * std::exp(stirling_tail(z));
}

inline double zeta_int(int k) {
  // Euler-Maclaurin with N = 50; remainder below 1e-17 for every k >= 2.
  constexpr int n_cut = 50;
  double sum = 0.0;
  for (int n = n_cut - 1; n >= 1; --n) sum += std::pow(static_cast<double>(n), -k);
  const double big_n = n_cut;
  const double dk = k;
  sum += std::pow(big_n, 1.0 - dk) / (dk - 1.0);
  sum += 0.5 * std::pow(big_n, -dk);
  sum += dk / 12.0 * std::pow(big_n, -dk - 1.0);
  sum -= dk * (dk + 1) * (dk + 2) / 720.0 * std::pow(big_n, -dk - 3.0);
  sum += dk * (dk + 1) * (dk + 2) * (dk + 3) * (dk + 4) / 30240.0 * std::pow(big_n, -dk - 5.0);
  return sum;
}

inline constexpr int zeta_terms = 60;

inline const std::array<double, zeta_terms + 1>& zeta_table() {
  static const std::array<double, zeta_terms + 1> table = [] {
    std::array<double, zeta_terms + 1> t{};
    for (int k = 2; k <= zeta_terms; ++k) t[static_cast<std::size_t>(k)] = zeta_int(k);
    return t;
  }();
  return table;
}

}  // namespace detail

/// The four Gamma combinations used by Temme's series for Bessel functions of
/// order |mu| <= 1/2:
///   gam1 = (1/G(1-mu) - 1/G(1+mu)) / (2 mu),  gam2 = (1/G(1-mu) + 1/G(1+mu)) / 2,
///   gampl = 1/G(1+mu),  gammi = 1/G(1-mu).
/// Built from the Taylor series of ln G(1 +- mu) so gam1 carries no cancellation at mu -> 0.
struct TemmeGammas {
  double gam1;
  double gam2;
  double gampl;
  double gammi;
};

inline TemmeGammas temme_gammas(double mu) {
  if (!(std::abs(mu) <= 0.5)) throw domain_error("temme_gammas: |mu| must be <= 1/2");
  const auto& zeta = detail::zeta_table();
  // ln G(1+mu) = E - O, ln G(1-mu) = E + O.
  double even = 0.0;
  double odd_over_mu = 0.0;
  for (int k = detail::zeta_terms; k >= 2; --k) {
    const double c = zeta[static_cast<std::size_t>(k)] / k;
    if (k % 2 == 0) {
      even = even * mu * mu + c;
    } else {
      odd_over_mu = odd_over_mu * mu * mu + c;
    }
  }
  even *= mu * mu;                                     // sum_{k even} zeta(k)/k mu^k
  odd_over_mu = euler_gamma + odd_over_mu * mu * mu;   // O / mu
  const double odd = odd_over_mu * mu;
  const double sinhc = std::abs(odd) < 1e-8 ? 1.0 + odd * odd / 6.0 : std::sinh(odd) / odd;
  const double damp = std::exp(-even);
  TemmeGammas g{};
  g.gam1 = -damp * sinhc * odd_over_mu;
  g.gam2 = damp * std::cosh(odd);
  g.gampl = damp * std::exp(odd);
  g.gammi = damp * std::exp(-odd);
  return g;
}

/// Gamma function. Relative error below 1e-14 on (0, 170].
inline EvalResult gamma_fn(double x) {
  if (std::isnan(x)) throw domain_error("gamma_fn: NaN argument");
  if (is_nonpositive_integer(x)) {
    throw pole_error("gamma_fn: pole at non-positive integer " + std::to_string(x));
  }
  EvalResult r;
  if (x > 171.61447887182298) {
    r.value = std::numeric_limits<double>::infinity();
    r.est_abs_error = std::numeric_limits<double>::infinity();
    r.status = Status::overflow;
    return r;
  }
  if (x < 0.5) {
    // Reflection: G(x) G(1-x) = pi / sin(pi x)
    const EvalResult g = gamma_fn(1.0 - x);
    r.value = pi / (sinpi(x) * g.value);
    r.est_abs_error = 8.0 * machine_eps * std::abs(r.value) * (1.0 + std::abs(x));
    if (!std::isfinite(r.value)) r.status = Status::overflow;
    return r;
  }
  if (is_integer(x) && x <= 171.0) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
    r.value = f;
    r.est_abs_error = x < 23.0 ? 0.0 : x * machine_eps * f;
    return r;
  }
  if (x >= detail::stirling_threshold) {
    r.value = detail::gamma_stirling(x);
    r.est_abs_error = 16.0 * machine_eps * r.value;
    return r;
  }
  // Shift upward, G(x) = G(x + k) / (x (x+1) ... (x+k-1)).
  double denom = 1.0;
  double z = x;
  while (z < detail::stirling_threshold) {
    denom *= z;
    z += 1.0;
  }
  r.value = detail::gamma_stirling(z) / denom;
  r.est_abs_error = 40.0 * machine_eps * r.value;
  return r;
}

/// ln Gamma(x) for x > 0.
inline double lgamma_fn(double x) {
  if (!(x > 0.0)) throw domain_error("lgamma_fn: argument must be positive");
  if (x < 150.0) {
    const EvalResult g = gamma_fn(x);
    return std::log(g.value);
  }
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * pi) + detail::stirling_tail(x);
}

/// 1 / Gamma(x), zero at the poles.
inline double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / gamma_fn(x).value;
}

}  // namespace hyperradial::specfun
