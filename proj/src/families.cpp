#include "ghps/render.hpp"

#include <numbers>
#include <stdexcept>

namespace ghps {

namespace {
constexpr double kPi = std::numbers::pi;
}

Family parse_family(const std::string& name) {
  if (name == "A" || name == "a") return Family::kA;
  if (name == "B" || name == "b") return Family::kB;
  if (name == "C" || name == "c") return Family::kC;
  if (name == "D" || name == "d") return Family::kD;
  if (name == "custom") return Family::kCustom;
  throw std::invalid_argument("unknown family '" + name + "' (expected A, B, C, D or custom)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kA: return "A";
    case Family::kB: return "B";
    case Family::kC: return "C";
    case Family::kD: return "D";
    case Family::kCustom: break;
  }
  return "custom";
}

// A: circular spin poles x charge poles (the conventional higher-order sphere).
// B: spin poles moved to the equator (H, V). C: charge poles moved to the
// equator (two-lobe modes). D: both on their equators.
GhpsConfigd family_config(Family family, double theta_g, double phi_g) {
  double theta_s = 0, theta_o = 0;
  switch (family) {
    case Family::kA: break;
    case Family::kB: theta_s = kPi / 2; break;
    case Family::kC: theta_o = kPi / 2; break;
    case Family::kD:
      theta_s = kPi / 2;
      theta_o = kPi / 2;
      break;
    case Family::kCustom: throw std::invalid_argument("custom family has no predefined pole bases");
  }
  return {SphereCoordd(theta_s, 0), SphereCoordd(theta_o, 0), SphereCoordd(theta_g, phi_g), OamPair(1, -1)};
}

SweepParam parse_sweep_param(const std::string& name) {
  if (name == "theta_s") return SweepParam::kThetaS;
  if (name == "phi_s") return SweepParam::kPhiS;
  if (name == "theta_o") return SweepParam::kThetaO;
  if (name == "phi_o") return SweepParam::kPhiO;
  if (name == "theta_g") return SweepParam::kThetaG;
  if (name == "phi_g") return SweepParam::kPhiG;
  throw std::invalid_argument("unknown sweep parameter '" + name + "'");
}

std::string sweep_param_label(SweepParam p) {
  switch (p) {
    case SweepParam::kThetaS: return "TS";
    case SweepParam::kPhiS: return "PS";
    case SweepParam::kThetaO: return "TO";
    case SweepParam::kPhiO: return "PO";
    case SweepParam::kThetaG: return "TG";
    case SweepParam::kPhiG: return "PG";
  }
  return "?";
}

GhpsConfigd with_param(GhpsConfigd cfg, SweepParam p, double value) {
  switch (p) {
    case SweepParam::kThetaS: cfg.sam = SphereCoordd(value, cfg.sam.phi()); break;
    case SweepParam::kPhiS: cfg.sam = SphereCoordd(cfg.sam.theta(), value); break;
    case SweepParam::kThetaO: cfg.orb = SphereCoordd(value, cfg.orb.phi()); break;
    case SweepParam::kPhiO: cfg.orb = SphereCoordd(cfg.orb.theta(), value); break;
    case SweepParam::kThetaG: cfg.ghps = SphereCoordd(value, cfg.ghps.phi()); break;
    case SweepParam::kPhiG: cfg.ghps = SphereCoordd(cfg.ghps.theta(), value); break;
  }
  return cfg;
}

HybridKetd panel_ket(const GhpsConfigd& cfg, PanelState state) {
  switch (state) {
    case PanelState::kNorthPole: return ghps_poles(cfg).north;
    case PanelState::kSouthPole: return ghps_poles(cfg).south;
    case PanelState::kSuperposition: break;
  }
  return ghps_ket(cfg);
}

void PanelGridSpec::validate() const {
  if (row_param == col_param) throw std::invalid_argument("row and column sweep parameters must differ");
  if (row_values.empty() || col_values.empty()) throw std::invalid_argument("sweep value lists must be non-empty");
}

std::vector<double> default_latitudes() { return {0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi}; }
std::vector<double> default_longitudes() { return {0, kPi / 2, kPi, 3 * kPi / 2}; }

PanelGridSpec pole_grid_spec(PanelState pole, const OamPair& oam) {
  PanelGridSpec spec;
  spec.family = Family::kCustom;
  spec.row_param = SweepParam::kThetaS;
  spec.col_param = SweepParam::kThetaO;
  spec.row_values = default_latitudes();
  spec.col_values = default_latitudes();
  spec.base_cfg.oam = oam;
  spec.state = pole;
  return spec;
}

PanelGridSpec sphere_grid_spec(Family family) {
  PanelGridSpec spec;
  spec.family = family;
  spec.row_param = SweepParam::kThetaG;
  spec.col_param = SweepParam::kPhiG;
  spec.row_values = default_latitudes();
  spec.col_values = default_longitudes();
  spec.base_cfg = family_config(family, 0, 0);
  spec.state = PanelState::kSuperposition;
  return spec;
}

}  // namespace ghps
