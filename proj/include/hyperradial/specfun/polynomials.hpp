#pragma once

#include "hyperradial/core.hpp"

namespace hyperradial::specfun {

/// Physicists' Hermite polynomial H_N(z) by the three-term recurrence.
inline double hermite(int n, double z) {
  if (n < 0) throw domain_error("hermite: degree must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * z * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Generalized Laguerre polynomial L_N^(alpha)(z), alpha > -1.
inline double laguerre(int n, double alpha, double z) {
  if (n < 0) throw domain_error("laguerre: degree must be >= 0");
  if (!(alpha > -1.0)) throw domain_error("laguerre: alpha must be > -1");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - z;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - z) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// d/dz L_N^(alpha)(z) = -L_{N-1}^(alpha+1)(z).
inline double laguerre_derivative(int n, double alpha, double z) {
  if (n == 0) return 0.0;
  return -laguerre(n - 1, alpha + 1.0, z);
}

/// Rising factorial (a)_n.
inline double pochhammer(double a, int n) {
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + k;
  return p;
}

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace hyperradial::specfun
