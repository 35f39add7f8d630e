// Panel and figure-grid rendering: intensity under a colormap with
// polarization ellipses overlaid on a coarse grid.
//
// Overlay colours: red for right-handed (S3 > 0), blue for left-handed,
// white for linear (|chi| below the style's linear tolerance).

#pragma once

#include "ghps/fields.hpp"
#include "ghps/image.hpp"
#include "ghps/state_space.hpp"

#include <string>
#include <vector>

namespace ghps {

enum class Colormap { kGrayscale, kViridis };

Colormap parse_colormap(const std::string& name);

/// t is clamped to [0, 1].
Rgb colormap_lookup(Colormap map, double t);

struct RenderStyle {
  Colormap colormap = Colormap::kViridis;
  int ellipse_grid = 12;
  double ellipse_scale = 0.8;
  double intensity_gamma = 1.0;
  double mask_threshold = 0.05;
  double linear_tol = 0.01;

  void validate() const;
};

inline constexpr Rgb kRightHandColor{230, 40, 40};
inline constexpr Rgb kLeftHandColor{40, 120, 255};
inline constexpr Rgb kLinearColor{255, 255, 255};

enum class Handedness { kLinear, kRight, kLeft };

struct OverlayMarker {
  double cx = 0, cy = 0;  // image coordinates, y down
  double psi = 0, chi = 0;
  Handedness handedness = Handedness::kLinear;
};

std::vector<OverlayMarker> overlay_markers(const JonesField& f, const RenderStyle& style);

/// One image pixel per grid sample, +y up.
Image render_panel(const JonesField& f, const RenderStyle& style);

/// Draws upper-case text with a 5x7 bitmap font; lower case is folded.
void draw_text(Image& img, int x, int y, const std::string& text, Rgb color, int scale = 1);

// Figure grids ---------------------------------------------------------------

enum class Family { kA, kB, kC, kD, kCustom };

Family parse_family(const std::string& name);
std::string family_name(Family f);

/// Pole bases of the four structural families, (l, m) = (+1, -1).
GhpsConfigd family_config(Family family, double theta_g, double phi_g);

enum class SweepParam { kThetaS, kPhiS, kThetaO, kPhiO, kThetaG, kPhiG };

SweepParam parse_sweep_param(const std::string& name);
std::string sweep_param_label(SweepParam p);

GhpsConfigd with_param(GhpsConfigd cfg, SweepParam p, double value);

enum class PanelState { kSuperposition, kNorthPole, kSouthPole };

HybridKetd panel_ket(const GhpsConfigd& cfg, PanelState state);

struct PanelGridSpec {
  Family family = Family::kCustom;
  SweepParam row_param = SweepParam::kThetaS;
  SweepParam col_param = SweepParam::kThetaO;
  std::vector<double> row_values;
  std::vector<double> col_values;
  GhpsConfigd base_cfg;
  PanelState state = PanelState::kSuperposition;

  void validate() const;
};

/// {0, π/4, π/2, 3π/4, π}
std::vector<double> default_latitudes();
/// {0, π/2, π, 3π/2}
std::vector<double> default_longitudes();

/// Pole-state grid over (θ_s rows, θ_o cols).
PanelGridSpec pole_grid_spec(PanelState pole, const OamPair& oam = {});

/// Family grid over (θ_G rows, φ_G cols).
PanelGridSpec sphere_grid_spec(Family family);

struct FigureLayout {
  int panel = 0;
  int caption_height = 0;
  int text_scale = 1;
  int gap = 4;

  int panel_x(int col) const { return gap + col * (panel + gap); }
  int panel_y(int row) const { return gap + row * (caption_height + panel + gap) + caption_height; }
  int width(int cols) const { return gap + cols * (panel + gap); }
  int height(int rows) const { return gap + rows * (caption_height + panel + gap); }
};

FigureLayout figure_layout(const GridSpec& grid);

/// "PI/4", "3PI/2", "0" for multiples of π/12, else three decimals.
std::string format_angle(double value);

Image grid_figure(const PanelGridSpec& spec, const GridSpec& grid, const RenderStyle& style);

}  // namespace ghps
