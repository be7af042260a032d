#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "hyperradial/core.hpp"

namespace hyperradial::numerics {

struct Bracket {
  double lo;
  double hi;
};

struct Root {
  double x = 0.0;
  double fx = 0.0;
  Bracket bracket{};
  int iterations = 0;
};

/// Brent's method on a sign-changing bracket. Stops when the bracket is
/// narrower than 2 * (4 eps |x| + xtol) or f hits zero.
template <typename F>
Root brent(F&& f, double a, double b, double xtol = 0.0, int max_iter = 200) {
  double fa = f(a);
  double fb = f(b);
  const Bracket original{std::min(a, b), std::max(a, b)};
  if (fa == 0.0) return {a, fa, original, 0};
  if (fb == 0.0) return {b, fb, original, 0};
  if ((fa > 0.0) == (fb > 0.0)) throw domain_error("brent: endpoints do not bracket a sign change");
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  int it = 0;
  for (; it < max_iter; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * machine_eps * std::abs(b) + 0.5 * xtol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) break;
    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      } else {
        p = -p;
      }
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
  }
  Bracket br{std::min(b, c), std::max(b, c)};
  return {b, fb, br, it};
}

/// Adjacent grid intervals over which f changes sign (exact zeros on the grid
/// are returned as degenerate brackets).
template <typename F>
std::vector<Bracket> sign_change_brackets(F&& f, const std::vector<double>& grid) {
  std::vector<Bracket> out;
  if (grid.size() < 2) return out;
  double x_prev = grid.front();
  double f_prev = f(x_prev);
  if (f_prev == 0.0) out.push_back({x_prev, x_prev});
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double x = grid[i];
    const double fx = f(x);
    if (fx == 0.0) {
      out.push_back({x, x});
    } else if (f_prev != 0.0 && std::isfinite(fx) && std::isfinite(f_prev) && ((fx > 0.0) != (f_prev > 0.0))) {
      out.push_back({x_prev, x});
    }
    x_prev = x;
    f_prev = fx;
  }
  return out;
}

/// lo, lo*r, ..., hi with at least per_decade points per factor of ten.
inline std::vector<double> log_grid(double lo, double hi, int per_decade) {
  if (!(lo > 0.0) || !(hi > lo)) throw domain_error("log_grid: need 0 < lo < hi");
  const double decades = std::log10(hi / lo);
  const int n = std::max(2, static_cast<int>(std::ceil(decades * per_decade)) + 1);
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  g.back() = hi;
  return g;
}

inline std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 2) throw domain_error("linear_grid: need at least two points");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  g.back() = hi;
  return g;
}

}  // namespace hyperradial::numerics
