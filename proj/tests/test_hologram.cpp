#include <doctest.h>

#include "ghps/field_synthesis.hpp"
#include "ghps/hologram.hpp"

#include <random>

using namespace ghps;
using std::numbers::pi;

namespace {

// Direct O(n^4) 4f filter: forward DFT, circular aperture on signed
// frequencies, inverse DFT with 1/n² scaling.
Eigen::ArrayXXcd filter_oracle(const Eigen::ArrayXXd& phase, double cutoff) {
  const int n = int(phase.rows());
  const double radius = cutoff * n / 2.0;
  auto freq = [n](int k) { return k < n / 2 ? k : k - n; };
  Eigen::ArrayXXcd spec = Eigen::ArrayXXcd::Zero(n, n);
  for (int ky = 0; ky < n; ++ky) {
    for (int kx = 0; kx < n; ++kx) {
      if (freq(kx) * freq(kx) + freq(ky) * freq(ky) > radius * radius) continue;
      std::complex<double> s = 0;
      for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
          s += std::polar(1.0, phase(y, x) - 2 * pi * double(kx * x + ky * y) / n);
        }
      }
      spec(ky, kx) = s;
    }
  }
  Eigen::ArrayXXcd out(n, n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      std::complex<double> s = 0;
      for (int ky = 0; ky < n; ++ky) {
        for (int kx = 0; kx < n; ++kx) {
          s += spec(ky, kx) * std::polar(1.0, 2 * pi * double(kx * x + ky * y) / n);
        }
      }
      out(y, x) = s / double(n * n);
    }
  }
  return out;
}

ScalarField field_of(const GridSpec& g, std::complex<double> fill) {
  return {g, Eigen::ArrayXXcd::Constant(g.n, g.n, fill)};
}

}  // namespace

TEST_CASE("double-phase pixel examples") {
  const GridSpec g{16, 4, 1};
  ScalarField f = field_of(g, 0.3);
  f.values(0, 0) = std::polar(1.0, 0.7);  // A = 1
  f.values(0, 1) = 0.0;                   // A = 0
  f.values(0, 2) = 0.5;                   // A = 1/2, θ = 0
  const DoublePhase dp = double_phase_components(f);

  CHECK(dp.theta1(0, 0) == doctest::Approx(0.7));
  CHECK(dp.theta2(0, 0) == doctest::Approx(0.7));
  CHECK(dp.theta1(0, 1) - dp.theta2(0, 1) == doctest::Approx(pi));
  CHECK(dp.theta1(0, 2) == doctest::Approx(pi / 3));
  CHECK(dp.theta2(0, 2) == doctest::Approx(-pi / 3));
  const std::complex<double> avg = (std::polar(1.0, dp.theta1(0, 2)) + std::polar(1.0, dp.theta2(0, 2))) / 2.0;
  CHECK(std::abs(avg - 0.5) < 1e-15);
}

TEST_CASE("property: double-phase pairs average to the normalized field") {
  const GridSpec g{32, 4, 1};
  std::mt19937_64 rng(51);
  std::normal_distribution<double> nd;
  ScalarField f{g, Eigen::ArrayXXcd(g.n, g.n)};
  for (int t = 0; t < 5; ++t) {
    for (Eigen::Index i = 0; i < f.values.size(); ++i) f.values(i) = {nd(rng), nd(rng)};
    const DoublePhase dp = double_phase_components(f);
    const Eigen::ArrayXXcd target = f.values / f.values.abs().maxCoeff();
    for (Eigen::Index i = 0; i < f.values.size(); ++i) {
      const std::complex<double> avg = (std::polar(1.0, dp.theta1(i)) + std::polar(1.0, dp.theta2(i))) / 2.0;
      CHECK(std::abs(avg - target(i)) < 1e-12);
    }
  }
}

TEST_CASE("encoded mask interleaves on a checkerboard within [0, 2pi)") {
  const GridSpec g{16, 4, 1};
  const ScalarField f = lg_mode(1, g);
  const DoublePhase dp = double_phase_components(f);
  const PhaseMask m = double_phase_encode(f);
  CHECK(m.grid == g);
  CHECK((m.phase >= 0).all());
  CHECK((m.phase < 2 * pi).all());
  for (int r = 0; r < g.n; ++r) {
    for (int c = 0; c < g.n; ++c) {
      const double src = (r + c) % 2 == 0 ? dp.theta1(r, c) : dp.theta2(r, c);
      CHECK(std::abs(std::polar(1.0, m.phase(r, c)) - std::polar(1.0, src)) < 1e-14);
    }
  }
  CHECK_THROWS_AS(double_phase_encode(field_of(g, std::nan(""))), std::invalid_argument);
}

TEST_CASE("reconstruct matches a direct DFT filter") {
  const GridSpec g{16, 4, 1};
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0, 2 * pi);
  PhaseMask m{g, Eigen::ArrayXXd(g.n, g.n)};
  for (Eigen::Index i = 0; i < m.phase.size(); ++i) m.phase(i) = u(rng);
  for (double cutoff : {0.25, 0.6, 1.0}) {
    const ScalarField fast = reconstruct(m, cutoff);
    const Eigen::ArrayXXcd slow = filter_oracle(m.phase, cutoff);
    CHECK((fast.values - slow).abs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("reconstruct examples") {
  const GridSpec g;
  SUBCASE("l=+1 donut round trip") {
    const ScalarField target = lg_mode(1, g);
    CHECK(fidelity(reconstruct(double_phase_encode(target)), target) > 0.99);
  }
  SUBCASE("constant phase gives a uniform field") {
    const PhaseMask m{g, Eigen::ArrayXXd::Constant(g.n, g.n, 1.2)};
    CHECK(fidelity(reconstruct(m), field_of(g, 1.0)) > 0.99);
  }
  SUBCASE("deterministic") {
    const PhaseMask m = double_phase_encode(lg_mode(-1, g));
    CHECK((reconstruct(m).values == reconstruct(m).values).all());
  }
  SUBCASE("cutoff range") {
    const PhaseMask m{GridSpec{16, 4, 1}, Eigen::ArrayXXd::Zero(16, 16)};
    CHECK_THROWS_AS(reconstruct(m, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct(m, 1.01), std::invalid_argument);
    CHECK_NOTHROW(reconstruct(m, 1.0));
  }
}

TEST_CASE("fidelity properties") {
  const GridSpec g{64, 4, 1};
  const ScalarField f = ops_scalar(Ket2d(0.6, std::complex<double>(0, 0.8)), {2, -1}, g);
  CHECK(fidelity(f, f) == doctest::Approx(1).epsilon(1e-14));
  const ScalarField scaled{g, std::polar(3.5, 1.1) * f.values};
  CHECK(fidelity(f, scaled) == doctest::Approx(1).epsilon(1e-14));

  const ScalarField up = lg_mode(1, g), down = lg_mode(-1, g);
  CHECK(fidelity(up, down) < 1e-20);

  const ScalarField other = lg_mode(0, g);
  CHECK(fidelity(f, other) == doctest::Approx(fidelity(other, f)).epsilon(1e-14));
  CHECK(fidelity(f, other) >= 0);
  CHECK(fidelity(f, other) <= 1);

  CHECK_THROWS_AS(fidelity(f, field_of(g, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(fidelity(f, lg_mode(1, GridSpec{32, 4, 1})), std::invalid_argument);
  CHECK_THROWS_AS(fidelity(f, lg_mode(1, GridSpec{64, 3, 1})), std::invalid_argument);
}
