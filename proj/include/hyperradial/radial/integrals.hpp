#pragma once

// r^n-weighted integrals of radial wave-functions: norm, overlap, energy.
//
// Finite pieces are split into chunks of about one half-wavelength and
// integrated with adaptive Gauss-Kronrod. A semi-infinite last piece is cut at
// r_c once the certified tail bound 2 f(r_c) / lambda(r_c) drops below
// tol * 1e-3, where lambda bounds the logarithmic decay rate of the integrand
// beyond r_c. For n = 0 the integrals run over the whole line, folded onto
// r >= 0 as f(r) + f(-r).

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "hyperradial/core.hpp"
#include "hyperradial/numerics/quadrature.hpp"
#include "hyperradial/radial/model.hpp"
#include "hyperradial/radial/wavefunction.hpp"

namespace hyperradial::radial {

struct IntegralResult {
  double value = 0.0;
  double abs_error = 0.0;   ///< quadrature estimate plus tail bound
  double tail_bound = 0.0;  ///< bound on the part beyond the cut
  double cut = 0.0;         ///< upper limit actually integrated
};

namespace detail {

// |psi| ~ r^power e^{-kappa r - mu r^2 / 2} at large r.
struct Decay {
  double kappa = 0.0;
  double mu = 0.0;
  double power = 0.0;
  [[nodiscard]] bool decays() const { return kappa > 0.0 || mu > 0.0; }
};

inline Decay term_decay(const Term& t) {
  switch (t.kind) {
    case PieceKind::BesselK: return {t.scale, 0.0, -t.order - 0.5};
    case PieceKind::GaussLaguerre: return {0.0, t.scale, 2.0 * t.degree};
    case PieceKind::GaussHermite: return {0.0, t.scale, static_cast<double>(t.degree)};
    case PieceKind::KummerU: return {0.0, t.scale, std::max(0.0, -2.0 * t.param)};
    default: return {};
  }
}

// The slowest-decaying term dominates a sum.
inline Decay piece_decay(const Piece& p) {
  Decay d{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), 0.0};
  bool any = false;
  for (const auto& t : p.terms) {
    if (t.coeff == complex(0.0, 0.0)) continue;
    const Decay e = term_decay(t);
    if (!e.decays()) return {};
    any = true;
    if (e.mu < d.mu || (e.mu == d.mu && e.kappa < d.kappa)) {
      d.mu = e.mu;
      d.kappa = e.kappa;
    }
    d.power = std::max(d.power, e.power);
  }
  if (!any) return {};
  if (d.mu > 0.0) d.kappa = 0.0;
  return d;
}

// Largest oscillation or variation rate of a piece, for pre-splitting.
inline double piece_rate(const Piece& p) {
  double rate = 0.0;
  for (const auto& t : p.terms) {
    switch (t.kind) {
      case PieceKind::GaussLaguerre:
      case PieceKind::GaussHermite:
      case PieceKind::KummerU:
        rate = std::max(rate, std::sqrt(t.scale * (4.0 * t.degree + 2.0 * std::abs(t.order) + 2.0)));
        break;
      default: rate = std::max(rate, t.scale);
    }
  }
  return rate;
}

// Integrand weight r^n, with the n = 0 whole line folded onto r >= 0.
inline double measure(const Dimension& d, double r) { return d.n() == 0 ? 1.0 : std::pow(r, d.n()); }

using RealFn = std::function<double(double)>;

inline numerics::QuadratureResult integrate_chunked(const RealFn& f, double a, double b, double rate, double tol) {
  const double span = b - a;
  const int chunks = std::clamp(static_cast<int>(std::ceil(span * rate / pi)) + 1, 1, 4000);
  numerics::QuadratureOptions opt;
  opt.abs_tol = tol / chunks;
  opt.rel_tol = 1e-14;
  opt.max_intervals = 2000;
  numerics::QuadratureResult total;
  total.converged = true;
  for (int c = 0; c < chunks; ++c) {
    const double lo = a + span * c / chunks;
    const double hi = c + 1 == chunks ? b : a + span * (c + 1) / chunks;
    const auto r = numerics::integrate(f, lo, hi, opt);
    total.value += r.value;
    total.abs_error += r.abs_error;
    total.evaluations += r.evaluations;
    total.intervals += r.intervals;
    total.converged = total.converged && r.converged;
  }
  return total;
}

// Chooses r_c >= a for the integrand f whose |psi|^2 factor decays as `d` and
// which carries an extra polynomial weight r^extra_power.
inline std::pair<double, double> tail_cut(const RealFn& f, const Decay& d, int n, double extra_power, double a,
                                          double tol) {
  const double P = n + 2.0 * d.power + extra_power;
  auto rate = [&](double r) { return 2.0 * d.kappa + 2.0 * d.mu * r - std::max(P, 0.0) / r; };
  // Start beyond the region where the asymptotic decay rate is not yet positive.
  double r = std::max(a, 1e-300);
  const double length = d.mu > 0.0 ? 1.0 / std::sqrt(d.mu) : 1.0 / d.kappa;
  if (d.mu > 0.0) r = std::max(r, std::sqrt((std::max(P, 0.0) + 4.0) / d.mu));
  if (d.kappa > 0.0) r = std::max(r, (std::max(P, 0.0) + 4.0) / d.kappa);
  for (int it = 0; it < 10000; ++it) {
    const double lam = rate(r);
    if (lam > 0.0) {
      const double bound = 2.0 * std::abs(f(r)) / lam;
      if (bound <= tol * 1e-3) return {r, bound};
    }
    r += 0.5 * length;
  }
  throw convergence_error("tail_cut: integrand does not decay");
}

inline void check_origin(const RadialWaveFunction& psi, const char* who) {
  if (psi.pieces.empty() || psi.pieces.front().r_lo > 0.0) return;
  const int n = psi.dimension.n();
  for (const auto& t : psi.pieces.front().terms) {
    const OriginBehaviour o = origin_behaviour(t);
    if (o.regular) continue;
    const double e_norm = n + 2.0 * o.power;
    const std::string what = std::string(who) + ": " + to_string(t.kind) + " term (order " + std::to_string(t.order) +
                             ") is irregular at r = 0 in n = " + std::to_string(n);
    if (e_norm <= -1.0) {
      throw divergence_error(divergence_error::Kind::non_integrable, what + "; r^n |psi|^2 is not integrable there");
    }
    if (o.log || e_norm - 2.0 <= -1.0) {
      throw divergence_error(divergence_error::Kind::kinetic,
                             what + "; it is square-integrable but the kinetic energy integral diverges");
    }
  }
}

// Integrates g over [0, r_max] split at the piece boundaries of the given
// functions. `decay` describes the integrand beyond the last boundary.
inline IntegralResult integrate_over_pieces(const RealFn& g, const std::vector<double>& breaks, double rate,
                                            const Decay& decay, int n, double extra_power, double r_max, double tol,
                                            const char* who) {
  IntegralResult out;
  std::vector<double> b;
  for (double x : breaks)
    if (x < r_max) b.push_back(x);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  const double last = b.empty() ? 0.0 : b.back();
  const std::size_t segments = b.size();
  const double seg_tol = 0.5 * tol / std::max<std::size_t>(segments, 1);
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const auto r = integrate_chunked(g, b[i], b[i + 1], rate, seg_tol);
    out.value += r.value;
    out.abs_error += r.abs_error;
  }
  double hi = r_max;
  if (std::isinf(r_max)) {
    if (!decay.decays()) {
      throw divergence_error(divergence_error::Kind::not_normalizable,
                             std::string(who) + ": the wave-function does not decay on an unbounded interval");
    }
    const auto [rc, bound] = tail_cut(g, decay, n, extra_power, last, tol);
    hi = rc;
    out.tail_bound = bound;
  }
  if (hi > last) {
    const auto r = integrate_chunked(g, last, hi, rate, seg_tol);
    out.value += r.value;
    out.abs_error += r.abs_error;
  }
  out.abs_error += out.tail_bound;
  out.cut = hi;
  return out;
}

inline std::vector<double> breakpoints(const RadialWaveFunction& psi) {
  std::vector<double> b{0.0};
  for (const auto& p : psi.pieces) {
    b.push_back(p.r_lo);
    if (std::isfinite(p.r_hi)) b.push_back(p.r_hi);
  }
  return b;
}

inline double max_rate(const RadialWaveFunction& psi) {
  double r = 0.0;
  for (const auto& p : psi.pieces) r = std::max(r, piece_rate(p));
  return r;
}

// Upper end of integration: r_max, or the end of a bounded support.
inline double effective_limit(const RadialWaveFunction& psi, double r_max) {
  return std::min(r_max, psi.support_end());
}

}  // namespace detail

/// int_0^{r_max} r^n |Psi|^2 dr (the whole line for n = 0), with error estimate.
inline IntegralResult norm_integral_detailed(const RadialWaveFunction& psi,
                                             double r_max = std::numeric_limits<double>::infinity(),
                                             double tol = 1e-12) {
  if (!(tol > 0.0)) throw domain_error("norm_integral: tol must be > 0");
  if (!(r_max > 0.0)) throw domain_error("norm_integral: r_max must be > 0");
  detail::check_origin(psi, "norm_integral");
  const Dimension dim = psi.dimension;
  auto g = [&psi, dim](double r) {
    double v = detail::measure(dim, r) * std::norm(psi.sample(r));
    if (dim.is_line()) v += std::norm(psi.sample(-r));
    return v;
  };
  const double hi = detail::effective_limit(psi, r_max);
  const detail::Decay decay = psi.pieces.empty() ? detail::Decay{} : detail::piece_decay(psi.pieces.back());
  return detail::integrate_over_pieces(g, detail::breakpoints(psi), detail::max_rate(psi), decay, dim.n(), 0.0, hi,
                                       tol, "norm_integral");
}

inline double norm_integral(const RadialWaveFunction& psi, double r_max = std::numeric_limits<double>::infinity(),
                            double tol = 1e-12) {
  return norm_integral_detailed(psi, r_max, tol).value;
}

/// int r^n conj(Psi_a) Psi_b dr over the common support.
inline complex overlap(const RadialWaveFunction& a, const RadialWaveFunction& b,
                       double r_max = std::numeric_limits<double>::infinity(), double tol = 1e-12) {
  if (a.dimension != b.dimension) throw domain_error("overlap: wave-functions live in different dimensions");
  detail::check_origin(a, "overlap");
  detail::check_origin(b, "overlap");
  const Dimension dim = a.dimension;
  auto part = [&](auto proj) {
    return [&, proj](double r) {
      double v = detail::measure(dim, r) * proj(std::conj(a.sample(r)) * b.sample(r));
      if (dim.is_line()) v += proj(std::conj(a.sample(-r)) * b.sample(-r));
      return v;
    };
  };
  std::vector<double> br = detail::breakpoints(a);
  for (double x : detail::breakpoints(b)) br.push_back(x);
  double hi = std::min(detail::effective_limit(a, r_max), detail::effective_limit(b, r_max));
  const double rate = std::max(detail::max_rate(a), detail::max_rate(b));
  if (std::isinf(hi)) {
    // By Cauchy-Schwarz the neglected tail is at most the geometric mean of
    // the two norm tails, so cutting where both are negligible suffices.
    hi = std::max(norm_integral_detailed(a, hi, tol).cut, norm_integral_detailed(b, hi, tol).cut);
  }
  auto re = part([](complex z) { return z.real(); });
  auto im = part([](complex z) { return z.imag(); });
  const auto vr = detail::integrate_over_pieces(re, br, rate, {}, dim.n(), 0.0, hi, tol, "overlap");
  const auto vi = b.is_real() && a.is_real()
                      ? IntegralResult{}
                      : detail::integrate_over_pieces(im, br, rate, {}, dim.n(), 0.0, hi, tol, "overlap");
  return {vr.value, vi.value};
}

/// Copy of psi rescaled to unit norm.
inline RadialWaveFunction normalize(const RadialWaveFunction& psi, double tol = 1e-12) {
  const double n = norm_integral(psi, std::numeric_limits<double>::infinity(), tol);
  if (!(n > 0.0) || !std::isfinite(n)) throw domain_error("normalize: norm integral is not a positive number");
  RadialWaveFunction out = psi;
  out.norm_constant = psi.norm_constant / std::sqrt(n);
  return out;
}

/// Physical energy <Psi|H|Psi> / <Psi|Psi> with the kinetic term written as
/// (hbar^2/2m) int r^n |Psi'|^2 dr. The delta shell adds -gamma R^n |Psi(R)|^2
/// (twice on the line), the infinite wall needs Psi = 0 outside R.
inline double energy_functional(const RadialWaveFunction& psi, const PhysicalScales& scales, double tol = 1e-11) {
  scales.validate();
  detail::check_origin(psi, "energy_functional");
  const Dimension dim = psi.dimension;
  const double norm = norm_integral(psi, std::numeric_limits<double>::infinity(), tol);
  const Potential pot = psi.potential;
  auto kinetic_and_smooth = [&psi, dim, &pot, &scales](double r) {
    auto at = [&](double x) {
      const double v = reduced_potential(pot, scales, x);
      const double smooth = std::isfinite(v) ? v * std::norm(psi.sample(x)) : 0.0;
      return std::norm(psi.derivative(x)) + smooth;
    };
    double v = detail::measure(dim, r) * at(r);
    if (dim.is_line()) v += at(-r);
    return v;
  };
  const double hi = detail::effective_limit(psi, std::numeric_limits<double>::infinity());
  const detail::Decay decay = psi.pieces.empty() ? detail::Decay{} : detail::piece_decay(psi.pieces.back());
  const double extra = std::holds_alternative<Harmonic>(pot) ? 2.0 : 0.0;
  std::vector<double> br = detail::breakpoints(psi);
  if (const auto* w = std::get_if<FiniteWell>(&pot)) br.push_back(w->R);
  if (const auto* d = std::get_if<DeltaShell>(&pot)) br.push_back(d->R);
  const auto t = detail::integrate_over_pieces(kinetic_and_smooth, br, detail::max_rate(psi), decay, dim.n(), extra,
                                               hi, tol * std::max(1.0, norm), "energy_functional");
  double e = t.value;
  if (const auto* d = std::get_if<DeltaShell>(&pot)) {
    const double gamma = reduced_coupling(*d, scales);
    const double w = dim.is_line() ? 2.0 : std::pow(d->R, dim.n());
    e -= gamma * w * std::norm(psi.sample(d->R));
  }
  return scales.energy_from_reduced(e / norm);
}

}  // namespace hyperradial::radial
