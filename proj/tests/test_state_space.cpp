#include <doctest.h>

#include "ghps/state_space.hpp"

#include <random>

using namespace ghps;
using std::numbers::pi;

namespace {

constexpr double kTol = 1e-12;
const double kS = 1.0 / std::sqrt(2.0);

bool close(const Ket2d& a, const Ket2d& b, double tol = kTol) { return (a - b).norm() < tol; }
bool close(const HybridKetd& a, const HybridKetd& b, double tol = kTol) { return (a - b).norm() < tol; }

HybridKetd basis(Eigen::Index i) {
  HybridKetd k = HybridKetd::Zero();
  k(i) = 1;
  return k;
}

SphereCoordd draw(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  return {std::acos(1 - 2 * u(rng)), 2 * pi * u(rng)};
}

GhpsConfigd draw_config(std::mt19937_64& rng) {
  return {draw(rng), draw(rng), draw(rng), OamPair(1, -1)};
}

}  // namespace

TEST_CASE("sphere_ket examples") {
  using namespace std::complex_literals;
  CHECK(close(sphere_ket(SphereCoordd(0, 0)), Ket2d(1, 0)));
  CHECK(close(sphere_ket(SphereCoordd(pi, 0)), Ket2d(0, 1)));
  CHECK(close(sphere_ket(SphereCoordd(pi / 2, pi / 2)), Ket2d(kS, 1i * kS)));
}

TEST_CASE("orthogonal_ket examples") {
  CHECK(close(orthogonal_ket(SphereCoordd(0, 0)), Ket2d(0, -1)));
  CHECK(close(orthogonal_ket(SphereCoordd(pi, 0)), Ket2d(1, 0)));
}

TEST_CASE("latitude outside [0, pi] is rejected, longitude wraps") {
  CHECK_THROWS_AS(SphereCoordd(-0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(SphereCoordd(pi + 0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(SphereCoordd(std::nan(""), 0), std::invalid_argument);
  CHECK(SphereCoordd(pi + 1e-14, 0).theta() == pi);
  CHECK(SphereCoordd(-1e-14, 0).theta() == 0);
  CHECK(SphereCoordd(1, -pi / 2).phi() == doctest::Approx(3 * pi / 2).epsilon(1e-15));
  CHECK(SphereCoordd(1, 5 * pi).phi() == doctest::Approx(pi).epsilon(1e-15));
  CHECK(SphereCoordd(1, 2 * pi).phi() == 0);
}

TEST_CASE("OAM pair needs distinct charges") {
  CHECK_THROWS_AS(OamPair(2, 2), std::invalid_argument);
  const OamPair def;
  CHECK(def.l() == 1);
  CHECK(def.m() == -1);
}

TEST_CASE("ghps_poles examples") {
  SUBCASE("spin and orbit at their north poles") {
    for (double phi : {0.0, 1.0, 4.0}) {
      const GhpsConfigd cfg{{0, phi}, {0, phi}, {0, 0}, {}};
      CHECK(close(ghps_poles(cfg).north, basis(kRl)));
    }
  }
  SUBCASE("south pole is the Lm product up to phase") {
    const GhpsConfigd cfg{{0, 0}, {0, 0}, {0, 0}, {}};
    const auto poles = ghps_poles(cfg);
    CHECK(same_ray(poles.south, basis(kLm)));
    CHECK(std::abs(inner(poles.north, poles.south)) < kTol);
  }
}

TEST_CASE("ghps_ket at the poles") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    GhpsConfigd cfg = draw_config(rng);
    const auto poles = ghps_poles(cfg);
    cfg.ghps = SphereCoordd(0, cfg.ghps.phi());
    CHECK(ghps_ket(cfg) == poles.north);
    cfg.ghps = SphereCoordd(pi, 0);
    CHECK(close(ghps_ket(cfg), poles.south, 1e-15));
  }
}

TEST_CASE("hops_ket examples") {
  CHECK(close(hops_ket(0.0, 0.0), basis(kRl)));
  CHECK(close(hops_ket(pi, 0.0), basis(kLm)));
  HybridKetd eq = HybridKetd::Zero();
  eq(kRl) = kS;
  eq(kLm) = kS;
  CHECK(close(hops_ket(pi / 2, 0.0), eq));
}

TEST_CASE("ghps reduces to hops when spin and orbit sit at their north poles") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const SphereCoordd g = draw(rng);
    const GhpsConfigd cfg{{0, 0}, {0, 0}, g, {}};
    CHECK(close(ghps_ket(cfg), hops_ket(g.theta(), g.phi())));
  }
}

TEST_CASE("inner examples") {
  CHECK(inner(basis(kRl), basis(kRm)) == std::complex<double>(0, 0));
  using namespace std::complex_literals;
  const HybridKetd x = basis(kRl) * 1i;
  CHECK(inner(x, basis(kRl)) == std::complex<double>(0, -1));  // antilinear in the first slot
  std::mt19937_64 rng(3);
  const HybridKetd k = ghps_ket(draw_config(rng));
  CHECK(std::abs(inner(k, k) - 1.0) < kTol);
}

TEST_CASE("stokes_ps examples") {
  CHECK((stokes_ps(Ket2d(1, 0)) - StokesVectord(0, 0, 1)).norm() < kTol);
  CHECK((stokes_ps(Ket2d(kS, kS)) - StokesVectord(1, 0, 0)).norm() < kTol);
}

TEST_CASE("ghps_stokes examples") {
  const GhpsConfigd cfg{{1.1, 0.3}, {2.0, 5.0}, {pi / 2, 0}, {}};
  const auto poles = ghps_poles(cfg);
  CHECK((ghps_stokes(poles.north, poles) - StokesVectord(0, 0, 1)).norm() < kTol);
  CHECK((ghps_stokes(ghps_ket(cfg), poles) - StokesVectord(1, 0, 0)).norm() < kTol);

  // Rl and Lm are the poles here; Rm is orthogonal to both.
  const GhpsConfigd hops{{0, 0}, {0, 0}, {0, 0}, {}};
  CHECK_THROWS_AS(ghps_stokes(basis(kRm), ghps_poles(hops)), OutOfSubspaceError);
  const HybridKetd leak = (basis(kRl) + 1e-6 * basis(kLl)).normalized();
  CHECK_THROWS_AS(ghps_stokes(leak, ghps_poles(hops)), OutOfSubspaceError);
}

TEST_CASE("same_ray ignores global phase only") {
  std::mt19937_64 rng(5);
  const GhpsConfigd cfg = draw_config(rng);
  const HybridKetd k = ghps_ket(cfg);
  CHECK(same_ray(k, std::polar(1.0, 2.3) * k));
  CHECK_FALSE(same_ray(k, ghps_poles(cfg).north));
  CHECK_FALSE(same_ray(basis(kRl), basis(kRm)));
}

TEST_CASE("property: normalization and orthogonality over 1e4 random configs") {
  std::mt19937_64 rng(42);
  double worst = 0;
  for (int t = 0; t < 10000; ++t) {
    const GhpsConfigd cfg = draw_config(rng);
    const auto poles = ghps_poles(cfg);
    const Ket2d sp = sphere_ket(cfg.sam), sm = orthogonal_ket(cfg.sam);
    const Ket2d op = sphere_ket(cfg.orb), om = orthogonal_ket(cfg.orb);
    worst = std::max({worst, std::abs(sp.norm() - 1), std::abs(sm.norm() - 1),
                      std::abs(op.norm() - 1), std::abs(om.norm() - 1),
                      std::abs(poles.north.norm() - 1), std::abs(poles.south.norm() - 1),
                      std::abs(ghps_ket(cfg).norm() - 1), std::abs(inner(sp, sm)),
                      std::abs(inner(op, om)), std::abs(inner(poles.north, poles.south))});
  }
  CHECK(worst < kTol);
}

TEST_CASE("property: Stokes round trip and antipodes") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 1000; ++t) {
    const SphereCoordd c = draw(rng);
    CHECK((stokes_ps(sphere_ket(c)) - c.unit_vector()).norm() < kTol);
    CHECK((stokes_ps(orthogonal_ket(c)) + stokes_ps(sphere_ket(c))).norm() < kTol);
  }
}

TEST_CASE("property: moving-frame Stokes vector is the GHPS coordinate") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 1000; ++t) {
    const GhpsConfigd cfg = draw_config(rng);
    CHECK((ghps_stokes(ghps_ket(cfg), ghps_poles(cfg)) - cfg.ghps.unit_vector()).norm() < 1e-11);
  }
}

TEST_CASE("single precision instantiation") {
  const SphereCoord<float> c(1.0f, 2.0f);
  const GhpsConfig<float> cfg{c, c, c, {}};
  CHECK(std::abs(ghps_ket(cfg).norm() - 1.0f) < 1e-6f);
  CHECK((stokes_ps(sphere_ket(c)) - c.unit_vector()).norm() < 1e-6f);
}

TEST_CASE("angle wrapping helpers") {
  CHECK(wrap_two_pi(-0.5) == doctest::Approx(2 * pi - 0.5));
  CHECK(wrap_two_pi(2 * pi) == 0);
  CHECK(wrap_pi(pi) == doctest::Approx(-pi));
  CHECK(wrap_pi(0.25) == doctest::Approx(0.25));
}
