#include "ghps/render.hpp"

#include "ghps/field_synthesis.hpp"
#include "ghps/polarimetry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ghps {

namespace {

constexpr double kPi = std::numbers::pi;

// Sampled from the viridis colormap at 17 equally spaced points.
constexpr std::array<std::array<double, 3>, 17> kViridis{{
    {0.267004, 0.004874, 0.329415}, {0.282327, 0.094955, 0.417331}, {0.278826, 0.175490, 0.483397},
    {0.258965, 0.251537, 0.524736}, {0.229739, 0.322361, 0.545706}, {0.199430, 0.387607, 0.554642},
    {0.172719, 0.448791, 0.557885}, {0.149039, 0.508051, 0.557250}, {0.127568, 0.566949, 0.550556},
    {0.120638, 0.625828, 0.533488}, {0.157851, 0.683765, 0.501686}, {0.246070, 0.738910, 0.452024},
    {0.369214, 0.788888, 0.382914}, {0.515992, 0.831158, 0.294279}, {0.678489, 0.863742, 0.189503},
    {0.845561, 0.887322, 0.099702}, {0.993248, 0.906157, 0.143936},
}};

std::uint8_t to_byte(double v) { return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0)); }

// 5x7 glyphs, one row per entry, bit 4 is the leftmost column.
struct Glyph {
  char c;
  std::array<std::uint8_t, 7> rows;
};

constexpr Glyph kFont[] = {
    {'0', {0x0E, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0E}}, {'1', {0x04, 0x0C, 0x04, 0x04, 0x04, 0x04, 0x0E}},
    {'2', {0x0E, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1F}}, {'3', {0x1F, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0E}},
    {'4', {0x02, 0x06, 0x0A, 0x12, 0x1F, 0x02, 0x02}}, {'5', {0x1F, 0x10, 0x1E, 0x01, 0x01, 0x11, 0x0E}},
    {'6', {0x06, 0x08, 0x10, 0x1E, 0x11, 0x11, 0x0E}}, {'7', {0x1F, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08}},
    {'8', {0x0E, 0x11, 0x11, 0x0E, 0x11, 0x11, 0x0E}}, {'9', {0x0E, 0x11, 0x11, 0x0F, 0x01, 0x02, 0x0C}},
    {'A', {0x0E, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11}}, {'B', {0x1E, 0x11, 0x11, 0x1E, 0x11, 0x11, 0x1E}},
    {'C', {0x0E, 0x11, 0x10, 0x10, 0x10, 0x11, 0x0E}}, {'D', {0x1C, 0x12, 0x11, 0x11, 0x11, 0x12, 0x1C}},
    {'E', {0x1F, 0x10, 0x10, 0x1E, 0x10, 0x10, 0x1F}}, {'F', {0x1F, 0x10, 0x10, 0x1E, 0x10, 0x10, 0x10}},
    {'G', {0x0E, 0x11, 0x10, 0x17, 0x11, 0x11, 0x0F}}, {'H', {0x11, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11}},
    {'I', {0x0E, 0x04, 0x04, 0x04, 0x04, 0x04, 0x0E}}, {'J', {0x07, 0x02, 0x02, 0x02, 0x02, 0x12, 0x0C}},
    {'K', {0x11, 0x12, 0x14, 0x18, 0x14, 0x12, 0x11}}, {'L', {0x10, 0x10, 0x10, 0x10, 0x10, 0x10, 0x1F}},
    {'M', {0x11, 0x1B, 0x15, 0x15, 0x11, 0x11, 0x11}}, {'N', {0x11, 0x11, 0x19, 0x15, 0x13, 0x11, 0x11}},
    {'O', {0x0E, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0E}}, {'P', {0x1E, 0x11, 0x11, 0x1E, 0x10, 0x10, 0x10}},
    {'Q', {0x0E, 0x11, 0x11, 0x11, 0x15, 0x12, 0x0D}}, {'R', {0x1E, 0x11, 0x11, 0x1E, 0x14, 0x12, 0x11}},
    {'S', {0x0F, 0x10, 0x10, 0x0E, 0x01, 0x01, 0x1E}}, {'T', {0x1F, 0x04, 0x04, 0x04, 0x04, 0x04, 0x04}},
    {'U', {0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0E}}, {'V', {0x11, 0x11, 0x11, 0x11, 0x11, 0x0A, 0x04}},
    {'W', {0x11, 0x11, 0x11, 0x15, 0x15, 0x15, 0x0A}}, {'X', {0x11, 0x11, 0x0A, 0x04, 0x0A, 0x11, 0x11}},
    {'Y', {0x11, 0x11, 0x11, 0x0A, 0x04, 0x04, 0x04}}, {'Z', {0x1F, 0x01, 0x02, 0x04, 0x08, 0x10, 0x1F}},
    {'=', {0x00, 0x00, 0x1F, 0x00, 0x1F, 0x00, 0x00}}, {'/', {0x00, 0x01, 0x02, 0x04, 0x08, 0x10, 0x00}},
    {'.', {0x00, 0x00, 0x00, 0x00, 0x00, 0x0C, 0x0C}}, {'-', {0x00, 0x00, 0x00, 0x1F, 0x00, 0x00, 0x00}},
    {'+', {0x00, 0x04, 0x04, 0x1F, 0x04, 0x04, 0x00}}, {',', {0x00, 0x00, 0x00, 0x00, 0x0C, 0x04, 0x08}},
    {':', {0x00, 0x0C, 0x0C, 0x00, 0x0C, 0x0C, 0x00}}, {'(', {0x02, 0x04, 0x08, 0x08, 0x08, 0x04, 0x02}},
    {')', {0x08, 0x04, 0x02, 0x02, 0x02, 0x04, 0x08}},
};

const Glyph* find_glyph(char c) {
  if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  for (const Glyph& g : kFont)
    if (g.c == c) return &g;
  return nullptr;
}

void draw_line(Image& img, double x0, double y0, double x1, double y1, Rgb color) {
  const int steps = std::max(1, int(std::ceil(std::max(std::abs(x1 - x0), std::abs(y1 - y0)))));
  for (int s = 0; s <= steps; ++s) {
    const double t = double(s) / steps;
    img.set(int(std::lround(x0 + t * (x1 - x0))), int(std::lround(y0 + t * (y1 - y0))), color);
  }
}

Rgb handedness_color(Handedness h) {
  switch (h) {
    case Handedness::kRight: return kRightHandColor;
    case Handedness::kLeft: return kLeftHandColor;
    case Handedness::kLinear: break;
  }
  return kLinearColor;
}

constexpr Rgb kBackground{24, 24, 24};
constexpr Rgb kCaptionColor{235, 235, 235};

}  // namespace

Colormap parse_colormap(const std::string& name) {
  if (name == "grayscale" || name == "gray") return Colormap::kGrayscale;
  if (name == "viridis") return Colormap::kViridis;
  throw std::invalid_argument("unknown colormap '" + name + "'");
}

Rgb colormap_lookup(Colormap map, double t) {
  t = std::isfinite(t) ? std::clamp(t, 0.0, 1.0) : 0.0;
  if (map == Colormap::kGrayscale) {
    const auto v = to_byte(t);
    return {v, v, v};
  }
  const double pos = t * (kViridis.size() - 1);
  const std::size_t k = std::min<std::size_t>(std::size_t(pos), kViridis.size() - 2);
  const double f = pos - double(k);
  const auto& a = kViridis[k];
  const auto& b = kViridis[k + 1];
  return {to_byte(a[0] + f * (b[0] - a[0])), to_byte(a[1] + f * (b[1] - a[1])), to_byte(a[2] + f * (b[2] - a[2]))};
}

void RenderStyle::validate() const {
  if (ellipse_grid <= 0) throw std::invalid_argument("ellipse_grid must be positive");
  if (!(ellipse_scale > 0)) throw std::invalid_argument("ellipse_scale must be positive");
  if (!(intensity_gamma > 0)) throw std::invalid_argument("intensity_gamma must be positive");
  if (!(mask_threshold > 0 && mask_threshold < 1)) throw std::invalid_argument("mask_threshold must lie in (0, 1)");
  if (!(linear_tol > 0 && linear_tol < kPi / 8)) throw std::invalid_argument("linear_tol must lie in (0, pi/8)");
}

std::vector<OverlayMarker> overlay_markers(const JonesField& f, const RenderStyle& style) {
  style.validate();
  const int n = f.grid.n;
  const Eigen::ArrayXXd intensity = f.intensity();
  const double peak = intensity.maxCoeff();
  const double cell = double(n) / style.ellipse_grid;

  std::vector<OverlayMarker> markers;
  for (int gy = 0; gy < style.ellipse_grid; ++gy) {
    for (int gx = 0; gx < style.ellipse_grid; ++gx) {
      const double cx = (gx + 0.5) * cell;
      const double cy = (gy + 0.5) * cell;
      const int col = std::clamp(int(cx), 0, n - 1);
      const int row = n - 1 - std::clamp(int(cy), 0, n - 1);
      if (!(intensity(row, col) > style.mask_threshold * peak)) continue;

      const Eigen::Vector4d s = stokes(Eigen::Vector2cd(f.ex(row, col), f.ey(row, col)));
      const Ellipse e = ellipse_of(s);
      Handedness h = Handedness::kLinear;
      if (std::abs(e.chi) >= style.linear_tol) h = e.chi > 0 ? Handedness::kRight : Handedness::kLeft;
      markers.push_back({cx, cy, e.psi, e.chi, h});
    }
  }
  return markers;
}

Image render_panel(const JonesField& f, const RenderStyle& style) {
  style.validate();
  if (!f.finite()) throw std::invalid_argument("cannot render a field with non-finite samples");
  const int n = f.grid.n;
  const Eigen::ArrayXXd intensity = f.intensity();
  const double peak = intensity.maxCoeff();

  Image img(n, n);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const double t = peak > 0 ? std::pow(intensity(row, col) / peak, style.intensity_gamma) : 0.0;
      img.set(col, n - 1 - row, colormap_lookup(style.colormap, t));
    }
  }

  constexpr int kSegments = 48;
  const double semi_major = 0.5 * style.ellipse_scale * double(n) / style.ellipse_grid;
  for (const OverlayMarker& m : overlay_markers(f, style)) {
    const double semi_minor = semi_major * std::abs(std::tan(m.chi));
    const double c = std::cos(m.psi), s = std::sin(m.psi);
    const Rgb color = handedness_color(m.handedness);
    auto point = [&](int k) {
      const double t = 2.0 * kPi * k / kSegments;
      const double u = semi_major * std::cos(t), v = semi_minor * std::sin(t);
      // Physical +y points up; image rows grow downward.
      return std::pair{m.cx + c * u - s * v, m.cy - (s * u + c * v)};
    };
    if (m.handedness == Handedness::kLinear) {
      draw_line(img, m.cx - c * semi_major, m.cy + s * semi_major, m.cx + c * semi_major, m.cy - s * semi_major, color);
      continue;
    }
    auto prev = point(0);
    for (int k = 1; k <= kSegments; ++k) {
      const auto next = point(k);
      draw_line(img, prev.first, prev.second, next.first, next.second, color);
      prev = next;
    }
  }
  return img;
}

void draw_text(Image& img, int x, int y, const std::string& text, Rgb color, int scale) {
  int pen = x;
  for (char ch : text) {
    if (const Glyph* g = find_glyph(ch)) {
      for (int r = 0; r < 7; ++r) {
        for (int b = 0; b < 5; ++b) {
          if (!(g->rows[r] & (0x10 >> b))) continue;
          for (int dy = 0; dy < scale; ++dy)
            for (int dx = 0; dx < scale; ++dx) img.set(pen + b * scale + dx, y + r * scale + dy, color);
        }
      }
    }
    pen += 6 * scale;
  }
}

FigureLayout figure_layout(const GridSpec& grid) {
  FigureLayout layout;
  layout.panel = grid.n;
  layout.text_scale = std::max(1, grid.n / 128);
  layout.caption_height = 7 * layout.text_scale + 6;
  return layout;
}

std::string format_angle(double value) {
  const double twelfths = value / kPi * 12.0;
  const double k = std::round(twelfths);
  if (std::abs(twelfths - k) < 1e-9) {
    const long num = long(k);
    if (num == 0) return "0";
    const long g = std::gcd(std::abs(num), 12L);
    const long p = num / g, q = 12 / g;
    std::string out = p == 1 ? "" : (p == -1 ? "-" : std::to_string(p));
    out += "PI";
    if (q != 1) out += "/" + std::to_string(q);
    return out;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  return buf;
}

Image grid_figure(const PanelGridSpec& spec, const GridSpec& grid, const RenderStyle& style) {
  spec.validate();
  grid.validate();
  style.validate();
  const FigureLayout layout = figure_layout(grid);
  const int rows = int(spec.row_values.size());
  const int cols = int(spec.col_values.size());
  Image figure(layout.width(cols), layout.height(rows), kBackground);

  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      GhpsConfigd cfg = with_param(spec.base_cfg, spec.row_param, spec.row_values[r]);
      cfg = with_param(cfg, spec.col_param, spec.col_values[c]);
      const JonesField field = synthesize(panel_ket(cfg, spec.state), cfg.oam, grid);
      const Image panel = render_panel(field, style);
      const int x = layout.panel_x(c), y = layout.panel_y(r);
      figure.blit(panel, x, y);

      std::string caption = sweep_param_label(spec.row_param) + "=" + format_angle(spec.row_values[r]) + " " +
                            sweep_param_label(spec.col_param) + "=" + format_angle(spec.col_values[c]);
      caption.resize(std::min<std::size_t>(caption.size(), std::size_t((layout.panel - 2) / (6 * layout.text_scale))));
      draw_text(figure, x + 2, y - layout.caption_height + 3, caption, kCaptionColor, layout.text_scale);
    }
  }
  return figure;
}

}  // namespace ghps
