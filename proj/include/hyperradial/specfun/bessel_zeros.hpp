#pragma once

#include <cmath>
#include <vector>

#include "hyperradial/core.hpp"
#include "hyperradial/specfun/bessel.hpp"

namespace hyperradial::specfun {

/// McMahon's large-N expansion for the N-th positive zero of J_nu.
inline double mcmahon_zero_estimate(double nu, int n) {
  const double beta = (n + 0.5 * nu - 0.25) * pi;
  const double mu = 4.0 * nu * nu;
  const double e8 = 8.0 * beta;
  return beta - (mu - 1.0) / e8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e8 * e8 * e8) -
         32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * std::pow(e8, 5));
}

namespace detail {

// Safeguarded Newton inside a sign-change bracket of J_nu.
inline double refine_j_zero(double nu, double lo, double hi, double guess) {
  auto jval = [nu](double x) { return bessel_jy(nu, x); };
  double flo = jval(lo).j;
  double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const BesselJY v = jval(x);
    if (v.j == 0.0) return x;
    if ((v.j > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = v.j;
    } else {
      hi = x;
    }
    double next = x - v.j / v.jp;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4.0 * machine_eps * x || hi - lo <= 4.0 * machine_eps * hi) return next;
    x = next;
  }
  return x;
}

}  // namespace detail

/// The first `count` positive zeros of J_nu, increasing.
///
/// J_nu is sampled from just below the first zero with a step of 1/2 (zeros of
/// J_nu for nu >= -1/2 are more than 2.7 apart), each sign change is then
/// refined by Newton's method using J'_nu and kept inside its bracket.
inline std::vector<double> bessel_j_zeros(double nu, int count) {
  detail::check_order(nu, "bessel_j_zeros");
  if (count < 1) throw domain_error("bessel_j_zeros: count must be >= 1");
  std::vector<double> zeros;
  zeros.reserve(static_cast<std::size_t>(count));
  if (nu == 0.5 || nu == -0.5) {
    const double shift = nu > 0 ? 0.0 : 0.5;
    for (int n = 1; n <= count; ++n) zeros.push_back((n - shift) * pi);
    return zeros;
  }
  constexpr double step = 0.5;
  // j_{nu,1} > max(nu, 1) for every nu >= -1/2.
  double a = std::max(nu, 1.0);
  double fa = bessel_jy(nu, a).j;
  while (static_cast<int>(zeros.size()) < count) {
    const double b = a + step;
    const double fb = bessel_jy(nu, b).j;
    if (fa == 0.0) {
      zeros.push_back(a);
    } else if ((fa > 0.0) != (fb > 0.0) && fb != 0.0) {
      const int n = static_cast<int>(zeros.size()) + 1;
      zeros.push_back(detail::refine_j_zero(nu, a, b, mcmahon_zero_estimate(nu, n)));
    }
    a = b;
    fa = fb;
  }
  return zeros;
}

/// N-th positive zero j_{nu,N} of J_nu.
inline double bessel_j_zero(double nu, int n) {
  if (n < 1) throw domain_error("bessel_j_zero: N must be >= 1");
  return bessel_j_zeros(nu, n).back();
}

}  // namespace hyperradial::specfun
