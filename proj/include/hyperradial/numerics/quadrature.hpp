#pragma once

// Globally adaptive Gauss-Kronrod (10/21 point) integration.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "hyperradial/core.hpp"

namespace hyperradial::numerics {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  int intervals = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
};

namespace detail {

// Abscissae of the 21-point Kronrod rule; odd entries are the 10-point Gauss nodes.
inline constexpr std::array<double, 11> gk21_nodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};

inline constexpr std::array<double, 5> g10_weights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

inline constexpr std::array<double, 11> gk21_weights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <typename F>
Segment gk21(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * gk21_weights[10];
  double gauss = 0.0;
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * gk21_nodes[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += gk21_weights[j] * (f1 + f2);
    if (j % 2 == 1) gauss += g10_weights[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  double err = std::abs(kronrod - gauss);
  // QUADPACK-style rescaling of the raw Gauss/Kronrod difference.
  if (err > 0.0) err = std::min(err, std::pow(200.0 * err, 1.5));
  err = std::max(err, 50.0 * machine_eps * std::abs(kronrod));
  return {a, b, kronrod, err};
}

}  // namespace detail

/// Integrates f over [a, b] (finite) by bisecting the worst segment until the
/// summed error estimate drops below max(abs_tol, rel_tol * |I|).
template <typename F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
  QuadratureResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  const double sign = b < a ? -1.0 : 1.0;
  if (b < a) std::swap(a, b);
  std::priority_queue<detail::Segment> heap;
  heap.push(detail::gk21(f, a, b));
  res.evaluations = 21;
  double total = heap.top().value;
  double error = heap.top().error;
  while (error > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
    if (static_cast<int>(heap.size()) >= opt.max_intervals) break;
    const detail::Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // cannot split further
    heap.pop();
    const detail::Segment left = detail::gk21(f, worst.a, mid);
    const detail::Segment right = detail::gk21(f, mid, worst.b);
    res.evaluations += 42;
    heap.push(left);
    heap.push(right);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
  }
  // Re-sum from scratch so the result does not depend on the running update order.
  total = 0.0;
  error = 0.0;
  std::vector<detail::Segment> segs;
  segs.reserve(heap.size());
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  std::sort(segs.begin(), segs.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
  for (const auto& s : segs) {
    total += s.value;
    error += s.error;
  }
  res.value = sign * total;
  res.abs_error = error;
  res.intervals = static_cast<int>(segs.size());
  res.converged = error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
  return res;
}

/// Integral over [a, inf) through t = a + s / (1 - s).
template <typename F>
QuadratureResult integrate_to_infinity(F&& f, double a, const QuadratureOptions& opt = {}) {
  auto g = [&](double s) {
    if (s >= 1.0) return 0.0;
    const double one_minus = 1.0 - s;
    const double v = f(a + s / one_minus);
    return std::isfinite(v) ? v / (one_minus * one_minus) : 0.0;
  };
  return integrate(g, 0.0, 1.0, opt);
}

}  // namespace hyperradial::numerics
