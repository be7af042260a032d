#pragma once

// Wave-function export: sampled CSV and a JSON descriptor of the pieces.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperradial/radial/wavefunction.hpp"

namespace hyperradial::radial {

/// %.12g, with nan/inf spelled the way JSON consumers and spreadsheets expect.
inline std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// Uniform samples on [r_lo, r_hi]; on the line r_lo may be negative.
inline void write_wavefunction_csv(std::ostream& out, const RadialWaveFunction& psi, double r_lo, double r_hi,
                                   int samples) {
  if (samples < 2) throw domain_error("write_wavefunction_csv: need at least 2 samples");
  if (!(r_hi > r_lo)) throw domain_error("write_wavefunction_csv: empty sampling range");
  if (r_lo < 0.0 && !psi.dimension.is_line()) throw domain_error("write_wavefunction_csv: r < 0 only exists for n = 0");
  out << "r,psi_real,psi_imag,piece_index\n";
  for (int i = 0; i < samples; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / (samples - 1);
    const complex v = psi.sample(r);
    out << format_number(r) << ',' << format_number(v.real()) << ',' << format_number(v.imag()) << ','
        << psi.piece_index(r) << '\n';
  }
}

inline nlohmann::json to_json(const Term& t) {
  nlohmann::json j{{"kind", to_string(t.kind)},
                   {"coeff", {t.coeff.real(), t.coeff.imag()}},
                   {"order", t.order},
                   {"scale", t.scale}};
  if (t.kind == PieceKind::GaussLaguerre || t.kind == PieceKind::GaussHermite) j["degree"] = t.degree;
  if (t.kind == PieceKind::KummerU) j["param"] = t.param;
  if (t.kind == PieceKind::BesselI || t.kind == PieceKind::BesselK) j["anchor"] = t.anchor;
  return j;
}

/// {dimension, energy, pieces[], norm_constant}. An infinite r_hi is written as null.
inline nlohmann::json to_json(const RadialWaveFunction& psi) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& p : psi.pieces) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms) terms.push_back(to_json(t));
    pieces.push_back({{"r_lo", p.r_lo},
                      {"r_hi", std::isinf(p.r_hi) ? nlohmann::json(nullptr) : nlohmann::json(p.r_hi)},
                      {"terms", terms}});
  }
  return {{"dimension", {{"n", psi.dimension.n()}, {"nu", psi.dimension.nu()}}},
          {"energy",
           {{"N", psi.energy.N}, {"eps", psi.energy.eps}, {"E", psi.energy.E}, {"kind", to_string(psi.energy.kind)}}},
          {"potential", potential_name(psi.potential)},
          {"pieces", pieces},
          {"norm_constant", psi.norm_constant}};
}

}  // namespace hyperradial::radial
