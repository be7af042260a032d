#pragma once

// Cylinder functions J, Y, I, K and the Hankel pair for real order nu >= -1/2
// and real argument.
//
// Small arguments (x^2 <= 4(nu + 2)) use the ascending series for J and I.
// Elsewhere the Temme/Steed scheme is used: a continued fraction for the
// logarithmic derivative of J (or I), equivalent to Miller's backward
// recurrence, fixes the ratio at order nu; Temme's series (x < 2) or Steed's
// complex continued fraction (x >= 2) gives Y (or K) at a reduced order
// |mu| <= 1/2 (or mu < x); Y/K are then carried forward by the stable upward
// recurrence, and the Wronskian normalises J/I. For x >= 30, J and Y come from
// Hankel's asymptotic expansion whenever it reaches full precision. Orders in
// [-1/2, 0) are reached through the reflection formulas.

#include <cmath>
#include <complex>
#include <string>

#include "hyperradial/core.hpp"
#include "hyperradial/specfun/gamma.hpp"

namespace hyperradial::specfun {

struct BesselJY {
  double j = 0.0;
  double y = 0.0;
  double jp = 0.0;  ///< dJ/dx
  double yp = 0.0;  ///< dY/dx
};

/// I and K together with derivatives, scaled: i, ip carry e^{-x}; k, kp carry e^{+x}.
struct BesselIKScaled {
  double i = 0.0;
  double k = 0.0;
  double ip = 0.0;
  double kp = 0.0;
};

namespace detail {

inline constexpr double tiny = 1e-300;
inline constexpr double cf_eps = 1e-16;
inline constexpr int cf_max_iter = 200000;
inline constexpr double temme_switch = 2.0;

inline void check_order(double nu, const char* who) {
  if (!(nu >= -0.5) || !std::isfinite(nu)) {
    throw domain_error(std::string(who) + ": order must be finite and >= -1/2");
  }
}

inline bool use_series(double nu, double x) { return x * x <= 4.0 * (nu + 2.0); }

// (x/2)^nu / Gamma(nu + 1), finite for every nu >= -1/2 and x > 0.
inline double series_prefactor(double nu, double x) {
  const double half = 0.5 * x;
  const double direct = std::pow(half, nu) * rgamma(nu + 1.0);
  if (std::isfinite(direct) && direct != 0.0 && nu < 150.0) return direct;
  return std::exp(nu * std::log(half) - lgamma_fn(nu + 1.0));
}

struct SeriesValue {
  double value;       // Z_nu(x) * Gamma(nu + 1) / (x/2)^nu
  double derivative;  // sum_k (nu + 2k) t_k; times prefactor / x gives Z'_nu(x)
  double abs_sum;     // sum of |t_k|
};

// sum_k (sign x^2/4)^k / (k! (nu+1)_k); sign = -1 for J, +1 for I.
// Returns J (or I) divided by the prefactor (x/2)^nu / Gamma(nu+1).
inline SeriesValue reduced_series(double nu, double x, double sign) {
  const double q = sign * 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  double abs_sum = 1.0;
  // derivative: d/dx [(x/2)^{nu+2k}] = (nu+2k)/x (x/2)^{nu+2k}; tracked as sum_k (nu+2k) t_k
  double dsum = nu;
  for (int k = 1; k < 1000; ++k) {
    term *= q / (k * (k + nu));
    sum += term;
    abs_sum += std::abs(term);
    dsum += (nu + 2.0 * k) * term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && k > 1) break;
  }
  return {sum, dsum, abs_sum};
}

// Temme/Steed for nu >= 0, x > 0. Follows the classical bessjy layout.
inline BesselJY steed_jy(double nu, double x) {
  const int nl = x < temme_switch ? static_cast<int>(nu + 0.5)
                                  : std::max(0, static_cast<int>(nu - x + 1.5));
  const double mu = nu - nl;
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / pi;

  // CF1: J'_nu / J_nu by modified Lentz.
  int isign = 1;
  double h = nu * xi;
  if (h < tiny) h = tiny;
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int i = 1;
  for (; i <= cf_max_iter; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < tiny) d = tiny;
    c = b - 1.0 / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) < cf_eps) break;
  }
  if (i > cf_max_iter) throw convergence_error("bessel_jy: CF1 did not converge");

  // Downward recurrence from nu to mu with unnormalised values.
  double rjl = isign * 1e-30;
  double rjpl = h * rjl;
  const double rjl1 = rjl;
  const double rjp1 = rjpl;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double rjtemp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * rjtemp - rjl;
    rjl = rjtemp;
  }
  if (rjl == 0.0) rjl = machine_eps;
  const double f = rjpl / rjl;

  double rjmu = 0.0;
  double rymu = 0.0;
  double rymup = 0.0;
  double ry1 = 0.0;
  if (x < temme_switch) {
    const double x2 = 0.5 * x;
    const double pimu = pi * mu;
    const double fact1 = std::abs(pimu) < cf_eps ? 1.0 : pimu / std::sin(pimu);
    d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < cf_eps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    double ff = 2.0 / pi * fact1 * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    e = std::exp(e);
    double p = e / (g.gampl * pi);
    double q = 1.0 / (e * pi * g.gammi);
    const double pimu2 = 0.5 * pimu;
    const double fact3 = std::abs(pimu2) < cf_eps ? 1.0 : std::sin(pimu2) / pimu2;
    const double r = pi * pimu2 * fact3 * fact3;
    c = 1.0;
    d = -x2 * x2;
    double sum = ff + r * q;
    double sum1 = p;
    int k = 1;
    for (; k <= cf_max_iter; ++k) {
      ff = (k * ff + p + q) / (k * static_cast<double>(k) - mu2);
      c *= d / k;
      p /= k - mu;
      q /= k + mu;
      const double del = c * (ff + r * q);
      sum += del;
      const double del1 = c * p - k * del;
      sum1 += del1;
      if (std::abs(del) < (1.0 + std::abs(sum)) * cf_eps) break;
    }
    if (k > cf_max_iter) throw convergence_error("bessel_jy: Temme series did not converge");
    rymu = -sum;
    ry1 = -sum1 * xi2;
    rymup = mu * xi * rymu - ry1;
    rjmu = w / (rymup - f * rymu);
  } else {
    // CF2: p + i q = (J' + i Y') / (J + i Y) by Steed's algorithm.
    double a = 0.25 - mu2;
    double p = -0.5 * xi;
    double q = 1.0;
    const double br = 2.0 * x;
    double bi = 2.0;
    double fct = a * xi / (p * p + q * q);
    double cr = br + q * fct;
    double ci = bi + p * fct;
    double den = br * br + bi * bi;
    double dr = br / den;
    double di = -bi / den;
    double dlr = cr * dr - ci * di;
    double dli = cr * di + ci * dr;
    double temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    int k = 2;
    for (; k <= cf_max_iter; ++k) {
      a += 2 * (k - 1);
      bi += 2.0;
      dr = a * dr + br;
      di = a * di + bi;
      if (std::abs(dr) + std::abs(di) < tiny) dr = tiny;
      fct = a / (cr * cr + ci * ci);
      cr = br + cr * fct;
      ci = bi - ci * fct;
      if (std::abs(cr) + std::abs(ci) < tiny) cr = tiny;
      den = dr * dr + di * di;
      dr /= den;
      di /= -den;
      dlr = cr * dr - ci * di;
      dli = cr * di + ci * dr;
      temp = p * dlr - q * dli;
      q = p * dli + q * dlr;
      p = temp;
      if (std::abs(dlr - 1.0) + std::abs(dli) < cf_eps) break;
    }
    if (k > cf_max_iter) throw convergence_error("bessel_jy: CF2 did not converge");
    const double gam = (p - f) / q;
    rjmu = std::sqrt(w / ((p - f) * gam + q));
    rjmu = std::copysign(rjmu, rjl);
    rymu = rjmu * gam;
    rymup = rymu * (p + q / gam);
    ry1 = mu * xi * rymu - rymup;
  }
  const double scale = rjmu / rjl;
  BesselJY out;
  out.j = rjl1 * scale;
  out.jp = rjp1 * scale;
  for (int k = 1; k <= nl; ++k) {
    const double rytemp = (mu + k) * xi2 * ry1 - rymu;
    rymu = ry1;
    ry1 = rytemp;
  }
  out.y = rymu;
  out.yp = nu * xi * rymu - ry1;
  return out;
}

// Temme/Steed for I and K, nu >= 0, x > 0; scaled output.
inline BesselIKScaled temme_ik_scaled(double nu, double x) {
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;

  // CF1: I'_nu / I_nu.
  double h = nu * xi;
  if (h < tiny) h = tiny;
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int i = 1;
  for (; i <= cf_max_iter; ++i) {
    b += xi2;
    d = 1.0 / (b + d);
    c = b + 1.0 / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < cf_eps) break;
  }
  if (i > cf_max_iter) throw convergence_error("bessel_ik: CF1 did not converge");

  double ril = 1e-30;
  double ripl = h * ril;
  const double ril1 = ril;
  const double rip1 = ripl;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double ritemp = fact * ril + ripl;
    fact -= xi;
    ripl = fact * ritemp + ril;
    ril = ritemp;
  }
  const double f = ripl / ril;

  // K_mu and K_{mu+1}, both multiplied by e^{x}.
  double rkmu = 0.0;
  double rk1 = 0.0;
  if (x < temme_switch) {
    const double x2 = 0.5 * x;
    const double pimu = pi * mu;
    const double fact1 = std::abs(pimu) < cf_eps ? 1.0 : pimu / std::sin(pimu);
    d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < cf_eps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    double ff = fact1 * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / g.gampl;
    double q = 0.5 / (e * g.gammi);
    c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    int k = 1;
    for (; k <= cf_max_iter; ++k) {
      ff = (k * ff + p + q) / (k * static_cast<double>(k) - mu2);
      c *= d / k;
      p /= k - mu;
      q /= k + mu;
      const double del = c * ff;
      sum += del;
      const double del1 = c * (p - k * ff);
      sum1 += del1;
      if (std::abs(del) < std::abs(sum) * cf_eps) break;
    }
    if (k > cf_max_iter) throw convergence_error("bessel_ik: Temme series did not converge");
    const double ex = std::exp(x);
    rkmu = sum * ex;
    rk1 = sum1 * xi2 * ex;
  } else {
    b = 2.0 * (1.0 + x);
    d = 1.0 / b;
    double delh = d;
    h = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1;
    c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int k = 2;
    for (; k <= cf_max_iter; ++k) {
      a -= 2 * (k - 1);
      c = -a * c / k;
      const double qnew = (q1 - b * q2) / a;
      q1 = q2;
      q2 = qnew;
      q += c * qnew;
      b += 2.0;
      d = 1.0 / (b + a * d);
      delh = (b * d - 1.0) * delh;
      h += delh;
      const double dels = q * delh;
      s += dels;
      if (std::abs(dels / s) < cf_eps) break;
    }
    if (k > cf_max_iter) throw convergence_error("bessel_ik: CF2 did not converge");
    h = a1 * h;
    rkmu = std::sqrt(pi / (2.0 * x)) / s;
    rk1 = rkmu * (mu + x + 0.5 - h) * xi;
  }
  const double rkmup = mu * xi * rkmu - rk1;
  // Wronskian I K' - I' K = -1/x with the e^{+-x} scalings cancelling.
  const double rimu = xi / (f * rkmu - rkmup);
  BesselIKScaled out;
  out.i = rimu * ril1 / ril;
  out.ip = rimu * rip1 / ril;
  for (int k = 1; k <= nl; ++k) {
    const double rktemp = (mu + k) * xi2 * rk1 + rkmu;
    rkmu = rk1;
    rk1 = rktemp;
  }
  out.k = rkmu;
  out.kp = nu * xi * rkmu - rk1;
  return out;
}

// Hankel's large-argument expansion. Returns false when the series has not
// reached double precision before its terms start to grow.
inline bool hankel_asymptotic(double nu, double x, double& j, double& y) {
  if (x < 30.0) return false;
  const double four_nu2 = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = 1.0;
  bool converged = false;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (four_nu2 - odd * odd) / (k * 8.0 * x);
    const double mag = std::abs(term);
    if (mag > last && k > 2) break;
    last = mag;
    // k odd -> Q with sign (-1)^{(k-1)/2}; k even -> P with sign (-1)^{k/2}
    if (k % 2 == 1) {
      q += ((k / 2) % 2 == 0 ? term : -term);
    } else {
      p += ((k / 2) % 2 == 0 ? term : -term);
    }
    if (mag < 1e-17) {
      converged = true;
      break;
    }
  }
  if (!converged) return false;
  const double phase = 0.5 * nu + 0.25;  // in units of pi
  const double cphi = cospi(phase);
  const double sphi = sinpi(phase);
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cw = cx * cphi + sx * sphi;  // cos(x - phase*pi)
  const double sw = sx * cphi - cx * sphi;  // sin(x - phase*pi)
  const double amp = std::sqrt(2.0 / (pi * x));
  j = amp * (p * cw - q * sw);
  y = amp * (p * sw + q * cw);
  return true;
}

}  // namespace detail

/// J, Y and their derivatives at x > 0 for nu >= -1/2.
inline BesselJY bessel_jy(double nu, double x) {
  detail::check_order(nu, "bessel_jy");
  if (!(x > 0.0)) throw domain_error("bessel_jy: argument must be positive");
  {
    BesselJY a;
    double j1 = 0.0;
    double y1 = 0.0;
    if (detail::hankel_asymptotic(nu, x, a.j, a.y) && detail::hankel_asymptotic(nu + 1.0, x, j1, y1)) {
      a.jp = nu / x * a.j - j1;
      a.yp = nu / x * a.y - y1;
      return a;
    }
  }
  if (nu < 0.0) {
    const double mu = -nu;
    const BesselJY p = detail::steed_jy(mu, x);
    const double c = cospi(mu);
    const double s = sinpi(mu);
    return {c * p.j - s * p.y, s * p.j + c * p.y, c * p.jp - s * p.yp, s * p.jp + c * p.yp};
  }
  return detail::steed_jy(nu, x);
}

/// Scaled I and K with derivatives at x > 0 for nu >= -1/2.
inline BesselIKScaled bessel_ik_scaled(double nu, double x) {
  detail::check_order(nu, "bessel_ik");
  if (!(x > 0.0)) throw domain_error("bessel_ik: argument must be positive");
  if (nu < 0.0) {
    const double mu = -nu;
    const BesselIKScaled p = detail::temme_ik_scaled(mu, x);
    const double s = 2.0 / pi * sinpi(mu) * std::exp(-2.0 * x);
    return {p.i + s * p.k, p.k, p.ip + s * p.kp, p.kp};
  }
  return detail::temme_ik_scaled(nu, x);
}

/// J_nu(x) / x^nu, finite at x = 0 where it equals 1 / (2^nu Gamma(nu+1)).
inline double bessel_j_over_power(double nu, double x) {
  detail::check_order(nu, "bessel_j_over_power");
  if (x < 0.0) throw domain_error("bessel_j_over_power: negative argument");
  const double base = std::pow(2.0, -nu) * rgamma(nu + 1.0);
  if (x == 0.0) return base;
  if (detail::use_series(nu, x)) return base * detail::reduced_series(nu, x, -1.0).value;
  return bessel_jy(nu, x).j / std::pow(x, nu);
}

/// e^{-x} I_nu(x) / x^nu, finite at x = 0.
inline double bessel_i_over_power_scaled(double nu, double x) {
  detail::check_order(nu, "bessel_i_over_power_scaled");
  if (x < 0.0) throw domain_error("bessel_i_over_power_scaled: negative argument");
  const double base = std::pow(2.0, -nu) * rgamma(nu + 1.0);
  if (x == 0.0) return base;
  if (detail::use_series(nu, x)) {
    return base * detail::reduced_series(nu, x, 1.0).value * std::exp(-x);
  }
  return bessel_ik_scaled(nu, x).i / std::pow(x, nu);
}

/// Bessel function of the first kind.
inline EvalResult bessel_j(double nu, double x) {
  detail::check_order(nu, "bessel_j");
  if (x < 0.0 || std::isnan(x)) throw domain_error("bessel_j: argument must be >= 0");
  EvalResult r;
  if (x == 0.0) {
    if (nu == 0.0) {
      r.value = 1.0;
    } else if (nu > 0.0) {
      r.value = 0.0;
    } else {
      r.value = std::numeric_limits<double>::infinity();
      r.est_abs_error = std::numeric_limits<double>::infinity();
      r.status = Status::divergent_at_origin;
    }
    return r;
  }
  if (detail::use_series(nu, x)) {
    const double pre = detail::series_prefactor(nu, x);
    const auto s = detail::reduced_series(nu, x, -1.0);
    r.value = pre * s.value;
    r.est_abs_error = 4.0 * machine_eps * std::abs(pre) * s.abs_sum;
    return r;
  }
  r.value = bessel_jy(nu, x).j;
  r.est_abs_error = 8.0 * machine_eps * (std::abs(r.value) + std::sqrt(2.0 / (pi * x)));
  return r;
}

/// Bessel function of the second kind, x > 0.
inline EvalResult bessel_y(double nu, double x) {
  detail::check_order(nu, "bessel_y");
  if (!(x > 0.0)) throw domain_error("bessel_y: argument must be > 0");
  EvalResult r;
  r.value = bessel_jy(nu, x).y;
  if (!std::isfinite(r.value)) {
    r.value = -std::numeric_limits<double>::infinity();
    r.est_abs_error = std::numeric_limits<double>::infinity();
    r.status = Status::overflow;
    return r;
  }
  r.est_abs_error = 8.0 * machine_eps * (std::abs(r.value) + std::sqrt(2.0 / (pi * x)));
  return r;
}

/// Modified Bessel function of the first kind.
inline EvalResult bessel_i(double nu, double x) {
  detail::check_order(nu, "bessel_i");
  if (x < 0.0 || std::isnan(x)) throw domain_error("bessel_i: argument must be >= 0");
  EvalResult r;
  if (x == 0.0) {
    if (nu == 0.0) {
      r.value = 1.0;
    } else if (nu > 0.0) {
      r.value = 0.0;
    } else {
      r.value = std::numeric_limits<double>::infinity();
      r.est_abs_error = std::numeric_limits<double>::infinity();
      r.status = Status::divergent_at_origin;
    }
    return r;
  }
  if (detail::use_series(nu, x)) {
    const double pre = detail::series_prefactor(nu, x);
    const auto s = detail::reduced_series(nu, x, 1.0);
    r.value = pre * s.value;
    r.est_abs_error = 4.0 * machine_eps * std::abs(r.value);
    return r;
  }
  const double scaled = bessel_ik_scaled(nu, x).i;
  r.value = scaled * std::exp(x);
  if (!std::isfinite(r.value)) {
    r.est_abs_error = std::numeric_limits<double>::infinity();
    r.status = Status::overflow;
    return r;
  }
  r.est_abs_error = 8.0 * machine_eps * std::abs(r.value);
  return r;
}

/// Modified Bessel function of the second kind, x > 0.
inline EvalResult bessel_k(double nu, double x) {
  detail::check_order(nu, "bessel_k");
  if (!(x > 0.0)) throw domain_error("bessel_k: argument must be > 0");
  EvalResult r;
  r.value = bessel_ik_scaled(nu, x).k * std::exp(-x);
  if (!std::isfinite(r.value)) {
    r.value = std::numeric_limits<double>::infinity();
    r.est_abs_error = std::numeric_limits<double>::infinity();
    r.status = Status::overflow;
    return r;
  }
  r.est_abs_error = 8.0 * machine_eps * std::abs(r.value);
  return r;
}

/// Hankel functions H^(1) = J + iY (kind 1) and H^(2) = J - iY (kind 2).
inline ComplexEvalResult hankel(int kind, double nu, double x) {
  if (kind != 1 && kind != 2) throw domain_error("hankel: kind must be 1 or 2");
  const EvalResult j = bessel_j(nu, x);
  const EvalResult y = bessel_y(nu, x);
  ComplexEvalResult r;
  r.value = kind == 1 ? complex(j.value, y.value) : complex(j.value, -y.value);
  r.est_abs_error = std::hypot(j.est_abs_error, y.est_abs_error);
  r.status = y.status != Status::ok ? y.status : j.status;
  return r;
}

/// Spherical Bessel j_l(x) = sqrt(pi / 2x) J_{l+1/2}(x).
inline double spherical_bessel_j(double l, double x) {
  if (!(x > 0.0)) throw domain_error("spherical_bessel_j: argument must be > 0");
  return std::sqrt(pi / (2.0 * x)) * bessel_j(l + 0.5, x).value;
}

/// Spherical Bessel y_l(x) = sqrt(pi / 2x) Y_{l+1/2}(x).
inline double spherical_bessel_y(double l, double x) {
  if (!(x > 0.0)) throw domain_error("spherical_bessel_y: argument must be > 0");
  return std::sqrt(pi / (2.0 * x)) * bessel_y(l + 0.5, x).value;
}

}  // namespace hyperradial::specfun
