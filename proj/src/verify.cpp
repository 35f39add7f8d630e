#include "ghps/verify.hpp"

#include "ghps/field_synthesis.hpp"
#include "ghps/hologram.hpp"
#include "ghps/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ghps {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kRingSamples = 64;

class Check {
 public:
  Check(std::string name, double tolerance) : result_{std::move(name), 0, 0, tolerance, false} {}

  void observe(double error) {
    ++result_.samples;
    if (std::isnan(error)) error = std::numeric_limits<double>::infinity();
    result_.max_error = std::max(result_.max_error, error);
  }

  CheckResult finish() const {
    CheckResult r = result_;
    r.pass = r.samples > 0 && r.max_error < r.tolerance;
    return r;
  }

 private:
  CheckResult result_;
};

GridSpec verify_grid(const VerifyOptions& o) { return {o.n, 4.0, 1.0}; }

double max_abs(const HybridKetd& a) { return a.cwiseAbs().maxCoeff(); }

// algebra --------------------------------------------------------------------

void algebra_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
  std::mt19937_64 rng(o.seed);

  Check ket_norm("two-level kets normalized", 1e-12);
  Check ket_orth("<psi+|psi-> = 0", 1e-12);
  Check round_trip("sphere_ket -> stokes_ps recovers unit vector", 1e-12);
  Check antipodal("orthogonal ket is antipodal on the sphere", 1e-12);
  for (int s = 0; s < o.algebra_samples; ++s) {
    const SphereCoordd c = random_coord(rng);
    const Ket2d p = sphere_ket(c), m = orthogonal_ket(c);
    ket_norm.observe(std::max(std::abs(p.norm() - 1), std::abs(m.norm() - 1)));
    ket_orth.observe(std::abs(inner(p, m)));
    round_trip.observe((stokes_ps(p) - c.unit_vector()).norm());
    antipodal.observe((stokes_ps(m) + stokes_ps(p)).norm());
  }

  Check pole_norm("hybrid poles and superposition normalized", 1e-12);
  Check pole_orth("<N_G|S_G> = 0", 1e-12);
  Check frame("ghps_stokes recovers (theta_G, phi_G)", 1e-12);
  for (int s = 0; s < o.algebra_samples; ++s) {
    const GhpsConfigd cfg = random_config(rng);
    const PolePaird poles = ghps_poles(cfg);
    const HybridKetd k = ghps_ket(cfg);
    pole_norm.observe(std::max({std::abs(poles.north.norm() - 1), std::abs(poles.south.norm() - 1), std::abs(k.norm() - 1)}));
    pole_orth.observe(std::abs(inner(poles.north, poles.south)));
    frame.observe((ghps_stokes(k, poles) - cfg.ghps.unit_vector()).norm());
  }

  Check hops("ghps_ket at PS/OPS poles equals hops_ket", 1e-12);
  for (int s = 0; s < 1000; ++s) {
    const SphereCoordd g = random_coord(rng);
    const GhpsConfigd cfg{SphereCoordd(0, 0), SphereCoordd(0, 0), g, OamPair(1, -1)};
    hops.observe(max_abs(ghps_ket(cfg) - hops_ket(g.theta(), g.phi())));
  }

  for (const Check* c : {&ket_norm, &ket_orth, &round_trip, &antipodal, &pole_norm, &pole_orth, &frame, &hops})
    out.push_back(c->finish());
}

// eq8 ------------------------------------------------------------------------

void eq8_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
  std::mt19937_64 rng(o.seed + 1);
  const GridSpec grid = verify_grid(o);
  Check check("S0 equals weighted OPS intensities (relative to max S0)", 1e-10);
  Check purity("S0^2 = S1^2 + S2^2 + S3^2 (relative to max S0^2)", 1e-10);
  for (int s = 0; s < o.random_configs; ++s) {
    const GhpsConfigd cfg = random_config(rng);
    const StokesField st = stokes_field(synthesize(ghps_ket(cfg), cfg.oam, grid), o.convention);
    const double peak = st.s0.maxCoeff();
    check.observe((st.s0 - eq8_prediction(cfg, grid)).abs().maxCoeff() / peak);
    purity.observe((st.s0.square() - st.s1.square() - st.s2.square() - st.s3.square()).abs().maxCoeff() / (peak * peak));
  }
  out.push_back(check.finish());
  out.push_back(purity.finish());
}

// eq9 ------------------------------------------------------------------------

void compare_ratio(const GhpsConfigd& cfg, Check& rho, Check& delta) {
  const double waist = 1.0;
  const HybridKetd k = ghps_ket(cfg);
  const double radius = peak_ring_radius(k, cfg.oam, waist);
  const JonesRing ring = sample_ring(k, cfg.oam, waist, radius, kRingSamples);
  const LocalRatio lr = local_ratio(ring, sphere_ket(cfg.sam), orthogonal_ket(cfg.sam));
  for (Eigen::Index a = 0; a < ring.size(); ++a) {
    if (!lr.valid(a)) continue;
    RhoDelta expected;
    try {
      expected = analytic_rho_delta(cfg, ring.azimuth(a), radius, waist);
    } catch (const UndefinedRatioError&) {
      rho.observe(std::numeric_limits<double>::infinity());
      continue;
    }
    // Below ρ = 1e-6 the comparison becomes absolute and the phase of the
    // vanishing coefficient is not compared.
    const double scale = std::max({expected.rho, lr.rho(a), 1e-6});
    rho.observe(std::abs(expected.rho - lr.rho(a)) / scale);
    if (scale > 1e-6) delta.observe(std::abs(wrap_pi(expected.delta - lr.delta(a))));
  }
}

void eq9_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
  std::mt19937_64 rng(o.seed + 2);
  Check rho("random configs: |rho_analytic - rho_field| / rho", 1e-8);
  Check delta("random configs: |delta_analytic - delta_field| wrapped", 1e-8);
  for (int s = 0; s < o.random_configs; ++s) compare_ratio(random_config(rng), rho, delta);

  Check fam_rho("families A-D: |rho_analytic - rho_field| / rho", 1e-8);
  Check fam_delta("families A-D: |delta_analytic - delta_field| wrapped", 1e-8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (Family f : {Family::kA, Family::kB, Family::kC, Family::kD}) {
    for (int s = 0; s < 8; ++s) {
      // θ_G < π keeps the ψ_s⁺ coefficient nonzero.
      compare_ratio(family_config(f, 0.95 * kPi * unit(rng), 2 * kPi * unit(rng)), fam_rho, fam_delta);
    }
  }
  for (const Check* c : {&rho, &delta, &fam_rho, &fam_delta}) out.push_back(c->finish());
}

// states -----------------------------------------------------------------------

double orientation(const Eigen::Vector2cd& e, S3Convention conv) { return ellipse_of(stokes(e, conv)).psi; }

void states_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const GridSpec grid = verify_grid(o);
  const double waist = grid.waist;

  // State A: the ψ_s⁻ coefficient relative to ψ_s⁺ winds as e^{-2iφ}, i.e.
  // the relative phase changes by 2φ (sign fixed by the ket expansion).
  {
    Check winding("state A: delta(phi) - delta(0) = -2 phi (mod 2pi)", 1e-8);
    for (double phi_g : {0.0, kPi / 3, 1.0}) {
      const GhpsConfigd cfg = family_config(Family::kA, kPi / 2, phi_g);
      const HybridKetd k = ghps_ket(cfg);
      const JonesRing ring = sample_ring(k, cfg.oam, waist, peak_ring_radius(k, cfg.oam, waist), kRingSamples);
      const LocalRatio lr = local_ratio(ring, sphere_ket(cfg.sam), orthogonal_ket(cfg.sam));
      for (Eigen::Index a = 0; a < ring.size(); ++a) {
        if (!lr.valid(a) || !lr.valid(0)) {
          winding.observe(std::numeric_limits<double>::infinity());
          continue;
        }
        winding.observe(std::abs(wrap_pi(lr.delta(a) - lr.delta(0) + 2 * ring.azimuth(a))));
      }
    }
    out.push_back(winding.finish());
  }

  {
    Check linear("state A equator: |chi| at every valid pixel", 1e-6);
    for (double phi_g : {0.0, kPi / 2, 2.0}) {
      const GhpsConfigd cfg = family_config(Family::kA, kPi / 2, phi_g);
      const EllipseMap e = ellipse_map(stokes_field(synthesize(ghps_ket(cfg), cfg.oam, grid), o.convention));
      for (Eigen::Index c = 0; c < e.chi.cols(); ++c)
        for (Eigen::Index r = 0; r < e.chi.rows(); ++r)
          if (e.valid(r, c)) linear.observe(std::abs(e.chi(r, c)));
    }
    out.push_back(linear.finish());
  }

  {
    // Raising φ_G by Δ turns every local polarization axis by -Δ/2.
    Check rotation("state A: phi_G shift rotates orientation by half the shift", 1e-8);
    for (double base : {0.0, 1.0}) {
      for (double shift : {kPi / 6, kPi / 2, 2.5}) {
        const GhpsConfigd c0 = family_config(Family::kA, kPi / 2, base);
        const GhpsConfigd c1 = family_config(Family::kA, kPi / 2, base + shift);
        const HybridKetd k0 = ghps_ket(c0), k1 = ghps_ket(c1);
        const double radius = peak_ring_radius(k0, c0.oam, waist);
        const JonesRing r0 = sample_ring(k0, c0.oam, waist, radius, kRingSamples);
        const JonesRing r1 = sample_ring(k1, c1.oam, waist, radius, kRingSamples);
        for (Eigen::Index a = 0; a < r0.size(); ++a) {
          const double turn = orientation(r1.values[a], o.convention) - orientation(r0.values[a], o.convention);
          // Orientation is defined mod π.
          rotation.observe(std::abs(wrap_pi(2 * (turn + shift / 2))) / 2);
        }
      }
    }
    out.push_back(rotation.finish());
  }

  {
    Check uniform("states A and B: ring intensity relative variation", 1e-9);
    for (Family f : {Family::kA, Family::kB}) {
      for (double theta_g : default_latitudes()) {
        const GhpsConfigd cfg = family_config(f, theta_g, 0.7);
        const HybridKetd k = ghps_ket(cfg);
        uniform.observe(ring_relative_variation(intensity_ring(k, cfg.oam, waist, peak_ring_radius(k, cfg.oam, waist), kRingSamples)));
      }
    }
    out.push_back(uniform.finish());
  }

  {
    // Handedness is part of the placement: R at φ = 0, π and L at π/2, 3π/2.
    Check placement("state C equator: circular at 0, pi/2, pi, 3pi/2 (R, L, R, L) and linear at odd pi/4", 0.5);
    const GhpsConfigd cfg = family_config(Family::kC, kPi / 2, 0);
    const HybridKetd k = ghps_ket(cfg);
    const JonesRing ring = sample_ring(k, cfg.oam, waist, peak_ring_radius(k, cfg.oam, waist), kRingSamples);
    for (int j = 0; j < 8; ++j) {
      const Eigen::Index a = j * kRingSamples / 8;
      const Eigen::Vector4d s = stokes(ring.values[a], o.convention);
      const double chi = ellipse_of(s).chi;
      bool ok;
      if (j % 2 == 0) {
        const bool right_expected = (j / 2) % 2 == 0;
        ok = classify(chi, 0.01) == PolarizationClass::kCircular && (chi > 0) == right_expected;
      } else {
        ok = classify(chi, 0.01) == PolarizationClass::kLinear;
      }
      placement.observe(ok ? 0.0 : 1.0);
    }
    out.push_back(placement.finish());

    Check uniform("state C equator: ring intensity relative variation", 1e-9);
    uniform.observe(ring_relative_variation(intensity_ring(k, cfg.oam, waist, ring.radius, kRingSamples)));
    out.push_back(uniform.finish());
  }

  {
    Check same("state D intensity equals state C intensity (relative to max)", 1e-10);
    for (double theta_g : default_latitudes()) {
      for (double phi_g : {0.0, 1.3}) {
        const GhpsConfigd c = family_config(Family::kC, theta_g, phi_g);
        const GhpsConfigd d = family_config(Family::kD, theta_g, phi_g);
        const Eigen::ArrayXXd ic = synthesize(ghps_ket(c), c.oam, grid).intensity();
        const Eigen::ArrayXXd id = synthesize(ghps_ket(d), d.oam, grid).intensity();
        same.observe((ic - id).abs().maxCoeff() / std::max(ic.maxCoeff(), id.maxCoeff()));
      }
    }
    out.push_back(same.finish());
  }

  {
    Check lobes("OPS equator lobe count equals |l - m|", 0.5);
    const std::array<OamPair, 4> pairs{OamPair(1, -1), OamPair(2, -1), OamPair(2, -2), OamPair(3, -1)};
    for (const OamPair& oam : pairs) {
      const Ket2d spin(1, 0);
      const HybridKetd k = tensor(spin, sphere_ket(SphereCoordd(kPi / 2, 0)));
      const IntensityRing ring = intensity_ring(k, oam, waist, peak_ring_radius(k, oam, waist), 256);
      lobes.observe(std::abs(lobe_count(ring) - std::abs(oam.l() - oam.m())));
    }
    out.push_back(lobes.finish());
  }
}

// hologram ---------------------------------------------------------------------

void hologram_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const GridSpec grid = verify_grid(o);
  Check fid("family field components: 1 - round-trip fidelity", 0.01);
  Check ops("family OPS components: 1 - round-trip fidelity", 0.01);
  Check identity("double-phase pair averages to the normalized field", 1e-12);

  auto observe_round_trip = [&](Check& check, const ScalarField& target) {
    check.observe(1.0 - fidelity(target, reconstruct(double_phase_encode(target))));
    const DoublePhase dp = double_phase_components(target);
    const double peak = target.values.abs().maxCoeff();
    const Eigen::ArrayXXcd avg = 0.5 * ((std::complex<double>(0, 1) * dp.theta1.cast<std::complex<double>>()).exp() +
                                        (std::complex<double>(0, 1) * dp.theta2.cast<std::complex<double>>()).exp());
    identity.observe((avg - target.values / peak).abs().maxCoeff());
  };

  for (Family f : {Family::kA, Family::kB, Family::kC, Family::kD}) {
    const GhpsConfigd cfg = family_config(f, kPi / 2, 0);
    const JonesField field = synthesize(ghps_ket(cfg), cfg.oam, grid);
    observe_round_trip(fid, {grid, field.ex});
    observe_round_trip(fid, {grid, field.ey});
    observe_round_trip(ops, ops_scalar(sphere_ket(cfg.orb), cfg.oam, grid));
    observe_round_trip(ops, ops_scalar(orthogonal_ket(cfg.orb), cfg.oam, grid));
  }
  for (const Check* c : {&fid, &ops, &identity}) out.push_back(c->finish());
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "algebra") return Suite::kAlgebra;
  if (name == "eq8") return Suite::kEq8;
  if (name == "eq9") return Suite::kEq9;
  if (name == "states") return Suite::kStates;
  if (name == "hologram") return Suite::kHologram;
  if (name == "all") return Suite::kAll;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::kAlgebra: return "algebra";
    case Suite::kEq8: return "eq8";
    case Suite::kEq9: return "eq9";
    case Suite::kStates: return "states";
    case Suite::kHologram: return "hologram";
    case Suite::kAll: break;
  }
  return "all";
}

bool Report::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["n"] = n;
  j["pass"] = pass();
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"samples", c.samples},
                           {"max_error", std::isfinite(c.max_error) ? nlohmann::json(c.max_error) : nlohmann::json("inf")},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
  }
  return j;
}

Report run_suite(Suite suite, const VerifyOptions& options) {
  Report report{suite_name(suite), options.seed, options.n, {}};
  auto want = [&](Suite s) { return suite == Suite::kAll || suite == s; };
  if (want(Suite::kAlgebra)) algebra_suite(options, report.checks);
  if (want(Suite::kEq8)) eq8_suite(options, report.checks);
  if (want(Suite::kEq9)) eq9_suite(options, report.checks);
  if (want(Suite::kStates)) states_suite(options, report.checks);
  if (want(Suite::kHologram)) hologram_suite(options, report.checks);
  return report;
}

SphereCoordd random_coord(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double z = 1.0 - 2.0 * unit(rng);
  return {std::acos(std::clamp(z, -1.0, 1.0)), 2.0 * kPi * unit(rng)};
}

GhpsConfigd random_config(std::mt19937_64& rng, bool random_oam) {
  static constexpr std::array<std::array<int, 2>, 7> kPairs{{{1, -1}, {2, -1}, {2, -2}, {3, -1}, {0, 1}, {1, 2}, {-1, 2}}};
  GhpsConfigd cfg;
  cfg.sam = random_coord(rng);
  cfg.orb = random_coord(rng);
  cfg.ghps = random_coord(rng);
  if (random_oam) {
    std::uniform_int_distribution<std::size_t> pick(0, kPairs.size() - 1);
    const auto& p = kPairs[pick(rng)];
    cfg.oam = OamPair(p[0], p[1]);
  }
  return cfg;
}

}  // namespace ghps
