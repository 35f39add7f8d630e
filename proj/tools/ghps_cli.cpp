// ghps: command-line front end for hybrid-sphere states.
//
//   ghps state       print kets and Stokes vectors for a configuration
//   ghps render      render one intensity/polarization panel
//   ghps pole-grid   pole states over (theta_s, theta_o)
//   ghps sphere-grid family states over (theta_g, phi_g)
//   ghps stokes      export the Stokes field (csv or binary container)
//   ghps hologram    double-phase masks for E_x and E_y plus round-trip fidelity
//   ghps verify      run verification suites, JSON report, nonzero exit on failure

#include "ghps/field_synthesis.hpp"
#include "ghps/hologram.hpp"
#include "ghps/io.hpp"
#include "ghps/polarimetry.hpp"
#include "ghps/render.hpp"
#include "ghps/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;

struct CommonOptions {
  std::string config_path;
  std::string family;
  std::optional<double> theta_g;
  std::optional<double> phi_g;
  std::optional<int> n;
  std::optional<double> extent;
  std::string out;
  std::string format;
  std::uint64_t seed = 42;
};

void add_common(CLI::App* cmd, CommonOptions& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--config", o.config_path, "GhpsConfig JSON file (optional grid/style blocks)");
  cmd->add_option("--family", o.family, "structural family A|B|C|D");
  cmd->add_option("--theta-g", o.theta_g, "hybrid-sphere latitude (rad)");
  cmd->add_option("--phi-g", o.phi_g, "hybrid-sphere longitude (rad)");
  cmd->add_option("--n", o.n, "samples per axis (even, >= 16)");
  cmd->add_option("--extent", o.extent, "grid half-width in waists");
  cmd->add_option("--out", o.out, "output path");
  cmd->add_option("--format", o.format, "output format")->capture_default_str();
  cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
}

json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return json::parse(is);
}

ghps::RenderStyle style_from_json(const json& j) {
  ghps::RenderStyle s;
  if (j.contains("colormap")) s.colormap = ghps::parse_colormap(j.at("colormap").get<std::string>());
  if (j.contains("ellipse_grid")) s.ellipse_grid = j.at("ellipse_grid").get<int>();
  if (j.contains("ellipse_scale")) s.ellipse_scale = j.at("ellipse_scale").get<double>();
  if (j.contains("intensity_gamma")) s.intensity_gamma = j.at("intensity_gamma").get<double>();
  if (j.contains("mask_threshold")) s.mask_threshold = j.at("mask_threshold").get<double>();
  if (j.contains("linear_tol")) s.linear_tol = j.at("linear_tol").get<double>();
  s.validate();
  return s;
}

struct Resolved {
  ghps::GhpsConfigd cfg;
  ghps::GridSpec grid;
  ghps::RenderStyle style;
};

// Config file first, then --family, then individual overrides.
Resolved resolve(const CommonOptions& o) {
  Resolved r;
  r.cfg = ghps::family_config(ghps::Family::kA, 0, 0);
  if (!o.config_path.empty()) {
    const json j = read_json_file(o.config_path);
    r.cfg = ghps::config_from_json(j);
    if (j.contains("grid")) r.grid = ghps::grid_from_json(j.at("grid"));
    if (j.contains("style")) r.style = style_from_json(j.at("style"));
  }
  if (!o.family.empty()) {
    r.cfg = ghps::family_config(ghps::parse_family(o.family), r.cfg.ghps.theta(), r.cfg.ghps.phi());
  }
  r.cfg.ghps = ghps::SphereCoordd(o.theta_g.value_or(r.cfg.ghps.theta()), o.phi_g.value_or(r.cfg.ghps.phi()));
  if (o.n) r.grid.n = *o.n;
  if (o.extent) r.grid.half_extent = *o.extent;
  r.grid.validate();
  return r;
}

void require_out(const CommonOptions& o) {
  if (o.out.empty()) throw std::invalid_argument("--out is required for this command");
}

void write_image(const CommonOptions& o, const ghps::Image& img) {
  require_out(o);
  ghps::write_bytes(o.out, ghps::encode_image(img, ghps::parse_image_format(o.format)));
}

json stokes_json(const ghps::StokesVectord& s) { return {s(0), s(1), s(2)}; }

int cmd_state(const CommonOptions& o) {
  const Resolved r = resolve(o);
  const ghps::PolePaird poles = ghps::ghps_poles(r.cfg);
  const ghps::HybridKetd k = ghps::ghps_ket(r.cfg);
  json j;
  j["config"] = ghps::config_to_json(r.cfg);
  j["ket"] = ghps::ket_to_json(k);
  j["north_pole"] = ghps::ket_to_json(poles.north);
  j["south_pole"] = ghps::ket_to_json(poles.south);
  j["stokes_sam"] = stokes_json(ghps::stokes_ps(ghps::sphere_ket(r.cfg.sam)));
  j["stokes_orb"] = stokes_json(ghps::stokes_ps(ghps::sphere_ket(r.cfg.orb)));
  j["stokes_ghps"] = stokes_json(ghps::ghps_stokes(k, poles));
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream(o.out) << text;
  }
  return 0;
}

int cmd_render(const CommonOptions& o, const std::string& pole) {
  const Resolved r = resolve(o);
  ghps::PanelState state = ghps::PanelState::kSuperposition;
  if (pole == "N") state = ghps::PanelState::kNorthPole;
  else if (pole == "S") state = ghps::PanelState::kSouthPole;
  else if (!pole.empty()) throw std::invalid_argument("--pole must be N or S");
  const ghps::JonesField f = ghps::synthesize(ghps::panel_ket(r.cfg, state), r.cfg.oam, r.grid);
  write_image(o, ghps::render_panel(f, r.style));
  return 0;
}

int cmd_pole_grid(const CommonOptions& o, const std::string& pole, const std::vector<double>& rows,
                  const std::vector<double>& cols) {
  const Resolved r = resolve(o);
  const ghps::PanelState state = pole == "S" ? ghps::PanelState::kSouthPole : ghps::PanelState::kNorthPole;
  if (pole != "N" && pole != "S") throw std::invalid_argument("--pole must be N or S");
  ghps::PanelGridSpec spec = ghps::pole_grid_spec(state, r.cfg.oam);
  spec.base_cfg = r.cfg;
  if (!rows.empty()) spec.row_values = rows;
  if (!cols.empty()) spec.col_values = cols;
  write_image(o, ghps::grid_figure(spec, r.grid, r.style));
  return 0;
}

int cmd_sphere_grid(const CommonOptions& o, const std::vector<double>& rows, const std::vector<double>& cols) {
  const Resolved r = resolve(o);
  ghps::PanelGridSpec spec =
      ghps::sphere_grid_spec(o.family.empty() ? ghps::Family::kA : ghps::parse_family(o.family));
  if (!o.config_path.empty() && o.family.empty()) {
    spec.family = ghps::Family::kCustom;
    spec.base_cfg = r.cfg;
  }
  if (!rows.empty()) spec.row_values = rows;
  if (!cols.empty()) spec.col_values = cols;
  write_image(o, ghps::grid_figure(spec, r.grid, r.style));
  return 0;
}

int cmd_stokes(const CommonOptions& o) {
  require_out(o);
  const Resolved r = resolve(o);
  const ghps::StokesField s = ghps::stokes_field(ghps::synthesize(ghps::ghps_ket(r.cfg), r.cfg.oam, r.grid));
  if (o.format == "csv") {
    std::ofstream os(o.out);
    ghps::write_csv(os, s);
  } else if (o.format == "bin") {
    std::ofstream os(o.out, std::ios::binary);
    ghps::write_binary(os, s);
  } else {
    throw std::invalid_argument("stokes export format must be csv or bin");
  }
  return 0;
}

int cmd_hologram(const CommonOptions& o, double cutoff) {
  require_out(o);
  if (o.format != "pgm" && o.format != "bin") throw std::invalid_argument("hologram format must be pgm or bin");
  const Resolved r = resolve(o);
  const ghps::JonesField f = ghps::synthesize(ghps::ghps_ket(r.cfg), r.cfg.oam, r.grid);
  json report = {{"cutoff", cutoff}, {"components", json::array()}};
  for (const auto& [name, values] : {std::pair{"ex", &f.ex}, std::pair{"ey", &f.ey}}) {
    const ghps::ScalarField target{r.grid, *values};
    const std::string path = o.out + "_" + name + "." + o.format;
    json entry = {{"component", name}, {"mask", path}};
    const ghps::PhaseMask mask = ghps::double_phase_encode(target);
    std::ofstream os(path, std::ios::binary);
    if (o.format == "pgm") ghps::write_phase_pgm(os, mask);
    else ghps::write_binary(os, mask);
    if (target.values.abs2().sum() > 0) {
      entry["fidelity"] = ghps::fidelity(target, ghps::reconstruct(mask, cutoff));
    } else {
      entry["fidelity"] = nullptr;
    }
    report["components"].push_back(entry);
  }
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_verify(const CommonOptions& o, const std::string& suite) {
  ghps::VerifyOptions opts;
  opts.seed = o.seed;
  if (o.n) opts.n = *o.n;
  const ghps::Report report = ghps::run_suite(ghps::parse_suite(suite), opts);
  const std::string text = report.to_json().dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream(o.out) << text;
  }
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid Poincare sphere states: synthesis, polarimetry, figures and holograms"};
  app.require_subcommand(1);

  CommonOptions state_o, render_o, pole_o, sphere_o, stokes_o, holo_o, verify_o;
  std::string render_pole, grid_pole = "N", suite = "all";
  std::vector<double> pole_rows, pole_cols, sphere_rows, sphere_cols;
  double cutoff = ghps::kDefaultCutoff;

  auto* state = app.add_subcommand("state", "print kets and Stokes vectors");
  add_common(state, state_o, "json");

  auto* render = app.add_subcommand("render", "render a single panel");
  add_common(render, render_o, "png");
  render->add_option("--pole", render_pole, "render the N or S pole instead of the superposition");

  auto* pole_grid = app.add_subcommand("pole-grid", "pole states over theta_s (rows) x theta_o (cols)");
  add_common(pole_grid, pole_o, "png");
  pole_grid->add_option("--pole", grid_pole, "N or S")->capture_default_str();
  pole_grid->add_option("--rows", pole_rows, "theta_s values (rad)")->delimiter(',');
  pole_grid->add_option("--cols", pole_cols, "theta_o values (rad)")->delimiter(',');

  auto* sphere_grid = app.add_subcommand("sphere-grid", "family states over theta_g (rows) x phi_g (cols)");
  add_common(sphere_grid, sphere_o, "png");
  sphere_grid->add_option("--rows", sphere_rows, "theta_g values (rad)")->delimiter(',');
  sphere_grid->add_option("--cols", sphere_cols, "phi_g values (rad)")->delimiter(',');

  auto* stokes = app.add_subcommand("stokes", "export the Stokes field");
  add_common(stokes, stokes_o, "csv");

  auto* hologram = app.add_subcommand("hologram", "double-phase masks and reconstruction fidelity");
  add_common(hologram, holo_o, "pgm");
  hologram->add_option("--cutoff", cutoff, "aperture radius as a fraction of Nyquist")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, verify_o, "json");
  verify->add_option("--suite", suite, "algebra|eq8|eq9|states|hologram|all")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*state) return cmd_state(state_o);
    if (*render) return cmd_render(render_o, render_pole);
    if (*pole_grid) return cmd_pole_grid(pole_o, grid_pole, pole_rows, pole_cols);
    if (*sphere_grid) return cmd_sphere_grid(sphere_o, sphere_rows, sphere_cols);
    if (*stokes) return cmd_stokes(stokes_o);
    if (*hologram) return cmd_hologram(holo_o, cutoff);
    if (*verify) return cmd_verify(verify_o, suite);
  } catch (const std::exception& e) {
    std::cerr << "ghps: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
