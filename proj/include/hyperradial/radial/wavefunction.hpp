#pragma once

// Piecewise analytic radial wave-functions. Each piece on [r_lo, r_hi) is a
// sum of tagged terms, so the solution stays introspectable by the oracle,
// the CLI and the exporters.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hyperradial/core.hpp"
#include "hyperradial/radial/model.hpp"
#include "hyperradial/specfun.hpp"

namespace hyperradial::radial {

/// Analytic form of one term. With x = scale * r and nu = order:
///   BesselJ       coeff * J_nu(x) / r^nu
///   BesselY       coeff * Y_nu(x) / r^nu
///   BesselI       coeff * e^{-scale anchor} I_nu(x) / r^nu
///   BesselK       coeff * e^{+scale anchor} K_nu(x) / r^nu
///   Hankel1/2     coeff * H^(1,2)_nu(x) / r^nu
///   GaussLaguerre coeff * e^{-mu r^2 / 2} L_N^(order)(mu r^2),   mu = scale
///   GaussHermite  coeff * e^{-mu r^2 / 2} H_N(sqrt(mu) r)
///   KummerU       coeff * e^{-mu r^2 / 2} U(param, order, mu r^2)
/// The anchor keeps I and K coefficients of order one when kappa R is large.
enum class PieceKind { BesselJ, BesselY, BesselI, BesselK, Hankel1, Hankel2, GaussLaguerre, GaussHermite, KummerU };

inline const char* to_string(PieceKind k) {
  switch (k) {
    case PieceKind::BesselJ: return "BesselJ";
    case PieceKind::BesselY: return "BesselY";
    case PieceKind::BesselI: return "BesselI";
    case PieceKind::BesselK: return "BesselK";
    case PieceKind::Hankel1: return "Hankel1";
    case PieceKind::Hankel2: return "Hankel2";
    case PieceKind::GaussLaguerre: return "GaussLaguerre";
    case PieceKind::GaussHermite: return "GaussHermite";
    case PieceKind::KummerU: return "KummerU";
  }
  return "?";
}

struct Term {
  PieceKind kind = PieceKind::BesselJ;
  complex coeff{1.0, 0.0};
  double order = 0.0;
  double scale = 1.0;
  int degree = 0;
  double param = 0.0;
  double anchor = 0.0;
};

struct Piece {
  double r_lo = 0.0;
  double r_hi = std::numeric_limits<double>::infinity();
  std::vector<Term> terms;
};

namespace detail {

struct ValueDerivative {
  complex value;
  complex derivative;
};

// Value and r-derivative of a term at r >= 0 (coefficient not applied).
inline ValueDerivative eval_term_shape(const Term& t, double r) {
  using namespace specfun;
  const double nu = t.order;
  const double s = t.scale;
  const double x = s * r;
  switch (t.kind) {
    case PieceKind::BesselJ: {
      // d/dr [J_nu(s r) / r^nu] = -s J_{nu+1}(s r) / r^nu, written through J/x^nu
      // so r = 0 is finite.
      const double snu = std::pow(s, nu);
      const double v = snu * bessel_j_over_power(nu, x);
      const double d = -s * snu * x * bessel_j_over_power(nu + 1.0, x);
      return {v, d};
    }
    case PieceKind::BesselI: {
      const double snu = std::pow(s, nu);
      const double e = std::exp(s * (r - t.anchor));
      const double v = snu * bessel_i_over_power_scaled(nu, x) * e;
      const double d = s * snu * x * bessel_i_over_power_scaled(nu + 1.0, x) * e;
      return {v, d};
    }
    case PieceKind::BesselY:
    case PieceKind::Hankel1:
    case PieceKind::Hankel2: {
      if (!(r > 0.0)) {
        const double inf = std::numeric_limits<double>::infinity();
        return {complex(inf, 0.0), complex(inf, 0.0)};
      }
      const BesselJY b = bessel_jy(nu, x);
      const double rn = std::pow(r, -nu);
      const double yv = b.y * rn;
      const double yd = (s * b.yp - nu / r * b.y) * rn;
      if (t.kind == PieceKind::BesselY) return {yv, yd};
      const double jv = b.j * rn;
      const double jd = (s * b.jp - nu / r * b.j) * rn;
      const double sgn = t.kind == PieceKind::Hankel1 ? 1.0 : -1.0;
      return {complex(jv, sgn * yv), complex(jd, sgn * yd)};
    }
    case PieceKind::BesselK: {
      if (!(r > 0.0)) {
        const double inf = std::numeric_limits<double>::infinity();
        return {complex(inf, 0.0), complex(inf, 0.0)};
      }
      const BesselIKScaled b = bessel_ik_scaled(nu, x);
      const double e = std::exp(-s * (r - t.anchor));
      const double rn = std::pow(r, -nu);
      const double k1 = nu / x * b.k - b.kp;  // e^x K_{nu+1}(x)
      return {b.k * e * rn, -s * k1 * e * rn};
    }
    case PieceKind::GaussLaguerre: {
      const double z = s * r * r;
      const double g = std::exp(-0.5 * z);
      const double l = laguerre(t.degree, nu, z);
      const double lp = laguerre_derivative(t.degree, nu, z);
      return {g * l, g * (-s * r * l + 2.0 * s * r * lp)};
    }
    case PieceKind::GaussHermite: {
      const double sq = std::sqrt(s);
      const double g = std::exp(-0.5 * s * r * r);
      const double h = hermite(t.degree, sq * r);
      const double hm = t.degree > 0 ? hermite(t.degree - 1, sq * r) : 0.0;
      return {g * h, g * (-s * r * h + sq * 2.0 * t.degree * hm)};
    }
    case PieceKind::KummerU: {
      const double z = s * r * r;
      const double g = std::exp(-0.5 * z);
      if (!(z > 0.0)) {
        const double inf = std::numeric_limits<double>::infinity();
        const double u0 = nu < 1.0 ? gamma_fn(1.0 - nu).value * rgamma(t.param - nu + 1.0) : inf;
        return {u0, 0.0};
      }
      const double u = kummer_u(t.param, nu, z).value;
      // dU/dz = -p U(p+1, q+1, z)
      const double up = t.param == 0.0 ? 0.0 : -t.param * kummer_u(t.param + 1.0, nu + 1.0, z).value;
      return {g * u, g * 2.0 * s * r * (-0.5 * u + up)};
    }
  }
  return {0.0, 0.0};
}

// Terms that are even in r on the whole line (n = 0). Hermite terms carry
// their own parity and are evaluated at signed r.
inline bool even_extension(PieceKind k) { return k != PieceKind::GaussHermite; }

}  // namespace detail

/// Behaviour of a term at r -> 0: psi ~ r^power, or ~ log r when `log` is set.
struct OriginBehaviour {
  double power = 0.0;
  bool log = false;
  bool regular = true;
};

inline OriginBehaviour origin_behaviour(const Term& t) {
  if (t.coeff == complex(0.0, 0.0)) return {};
  switch (t.kind) {
    case PieceKind::BesselY:
    case PieceKind::BesselK:
    case PieceKind::Hankel1:
    case PieceKind::Hankel2:
      if (t.order > 0.0) return {-2.0 * t.order, false, false};
      if (t.order == 0.0) return {0.0, true, false};
      return {};
    case PieceKind::KummerU:
      if (is_nonpositive_integer(t.param)) return {};
      if (t.order > 1.0) return {2.0 * (1.0 - t.order), false, false};
      if (t.order == 1.0) return {0.0, true, false};
      return {};
    default:
      return {};
  }
}

class RadialWaveFunction {
 public:
  Dimension dimension{1};
  EnergyLevel energy{};
  Potential potential = Free{};
  std::vector<Piece> pieces;
  double norm_constant = 1.0;

  /// Index of the piece holding r (|r| on the line), -1 beyond the last piece.
  [[nodiscard]] int piece_index(double r) const {
    const double a = std::abs(r);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const bool last = i + 1 == pieces.size();
      if (a >= pieces[i].r_lo && (a < pieces[i].r_hi || (last && a == pieces[i].r_hi))) return static_cast<int>(i);
    }
    return -1;
  }

  /// Psi(r) evaluated with the terms of piece i (the piece's analytic
  /// continuation, used for matching checks at its ends).
  [[nodiscard]] complex piece_value(std::size_t i, double r) const { return eval(i, r).value; }
  [[nodiscard]] complex piece_derivative(std::size_t i, double r) const { return eval(i, r).derivative; }

  [[nodiscard]] complex sample(double r) const {
    const int i = piece_index(r);
    return i < 0 ? complex(0.0, 0.0) : piece_value(static_cast<std::size_t>(i), r);
  }
  [[nodiscard]] complex derivative(double r) const {
    const int i = piece_index(r);
    return i < 0 ? complex(0.0, 0.0) : piece_derivative(static_cast<std::size_t>(i), r);
  }

  [[nodiscard]] bool is_real() const {
    for (const auto& p : pieces)
      for (const auto& t : p.terms)
        if (t.coeff.imag() != 0.0 || t.kind == PieceKind::Hankel1 || t.kind == PieceKind::Hankel2) return false;
    return true;
  }

  /// Outer end of the last piece (infinite for unbounded problems).
  [[nodiscard]] double support_end() const { return pieces.empty() ? 0.0 : pieces.back().r_hi; }

 private:
  [[nodiscard]] detail::ValueDerivative eval(std::size_t i, double r) const {
    complex v{0.0, 0.0};
    complex d{0.0, 0.0};
    const double a = std::abs(r);
    const bool mirrored = r < 0.0;
    for (const auto& t : pieces.at(i).terms) {
      if (t.coeff == complex(0.0, 0.0)) continue;
      if (mirrored && !detail::even_extension(t.kind)) {
        const auto e = detail::eval_term_shape(t, r);
        v += t.coeff * e.value;
        d += t.coeff * e.derivative;
      } else {
        const auto e = detail::eval_term_shape(t, a);
        v += t.coeff * e.value;
        d += t.coeff * (mirrored ? -e.derivative : e.derivative);
      }
    }
    return {norm_constant * v, norm_constant * d};
  }
};

/// Relative jumps of Psi and Psi' across the boundary between pieces i and i+1.
struct MatchResidual {
  double radius = 0.0;
  double value_jump = 0.0;       ///< |Psi_i - Psi_{i+1}| / max(|Psi|, floor)
  double derivative_jump = 0.0;  ///< same for Psi'
  complex left_value{};
  complex right_value{};
  complex left_derivative{};
  complex right_derivative{};
};

inline MatchResidual match_residual(const RadialWaveFunction& psi, std::size_t i) {
  if (i + 1 >= psi.pieces.size()) throw domain_error("match_residual: no boundary after piece " + std::to_string(i));
  MatchResidual m;
  m.radius = psi.pieces[i].r_hi;
  m.left_value = psi.piece_value(i, m.radius);
  m.right_value = psi.piece_value(i + 1, m.radius);
  m.left_derivative = psi.piece_derivative(i, m.radius);
  m.right_derivative = psi.piece_derivative(i + 1, m.radius);
  const double vs = std::max({std::abs(m.left_value), std::abs(m.right_value), 1e-300});
  const double ds = std::max({std::abs(m.left_derivative), std::abs(m.right_derivative), 1e-300});
  m.value_jump = std::abs(m.left_value - m.right_value) / vs;
  m.derivative_jump = std::abs(m.left_derivative - m.right_derivative) / ds;
  return m;
}

}  // namespace hyperradial::radial
