#include "ghps/field_synthesis.hpp"

#include <cmath>
#include <numbers>

namespace ghps {

namespace {

constexpr double kPi = std::numbers::pi;

// |u_l| as a function of radius only.
double lg_envelope(int l, double r, double waist) {
  const int al = std::abs(l);
  const double rho = r * std::numbers::sqrt2 / waist;
  return lg_norm_constant(l, waist) * std::pow(rho, al) * std::exp(-(r * r) / (waist * waist));
}

Eigen::ArrayXd ring_azimuths(int count) {
  if (count <= 0) throw std::invalid_argument("ring sample count must be positive");
  return Eigen::ArrayXd::LinSpaced(count, 0.0, 2.0 * kPi * (count - 1) / count);
}

// Fills (u_l, u_m) pairs over the grid once; both the scalar and vector paths
// go through lg_value so point and grid evaluation agree bit for bit.
Eigen::ArrayXXcd sample_mode(int l, const GridSpec& grid) {
  grid.validate();
  Eigen::ArrayXXcd out(grid.n, grid.n);
  for (int j = 0; j < grid.n; ++j) {
    const double y = grid.coord(j);
    for (int i = 0; i < grid.n; ++i) out(j, i) = lg_value(l, grid.coord(i), y, grid.waist);
  }
  return out;
}

}  // namespace

double lg_norm_constant(int l, double waist) {
  return std::sqrt(2.0 / (kPi * waist * waist * std::tgamma(std::abs(l) + 1.0)));
}

std::complex<double> lg_value(int l, double x, double y, double waist) {
  const double r = std::hypot(x, y);
  const double phase = l * std::atan2(y, x);
  return std::polar(lg_envelope(l, r, waist), phase);
}

ScalarField lg_mode(int l, const GridSpec& grid) { return {grid, sample_mode(l, grid)}; }

Eigen::Vector2cd jones_of_sam(const Ket2d& k) {
  using namespace std::complex_literals;
  const double s = 1.0 / std::numbers::sqrt2;
  return {s * (k(0) + k(1)), s * (-1i * k(0) + 1i * k(1))};
}

namespace {

// Spin-resolved scalar amplitudes (R part, L part) at a point given the two
// mode values.
std::pair<std::complex<double>, std::complex<double>> spin_parts(const HybridKetd& k,
                                                                 std::complex<double> ul,
                                                                 std::complex<double> um) {
  return {k(kRl) * ul + k(kRm) * um, k(kLl) * ul + k(kLm) * um};
}

}  // namespace

Eigen::Vector2cd jones_at(const HybridKetd& k, const OamPair& oam, double x, double y,
                          double waist) {
  const auto [r, l] =
      spin_parts(k, lg_value(oam.l(), x, y, waist), lg_value(oam.m(), x, y, waist));
  return jones_of_sam(Ket2d(r, l));
}

JonesField synthesize(const HybridKetd& k, const OamPair& oam, const GridSpec& grid) {
  const Eigen::ArrayXXcd ul = sample_mode(oam.l(), grid);
  const Eigen::ArrayXXcd um = sample_mode(oam.m(), grid);
  JonesField f{grid, Eigen::ArrayXXcd(grid.n, grid.n), Eigen::ArrayXXcd(grid.n, grid.n)};
  for (Eigen::Index c = 0; c < ul.cols(); ++c) {
    for (Eigen::Index r = 0; r < ul.rows(); ++r) {
      const auto [right, left] = spin_parts(k, ul(r, c), um(r, c));
      const Eigen::Vector2cd e = jones_of_sam(Ket2d(right, left));
      f.ex(r, c) = e(0);
      f.ey(r, c) = e(1);
    }
  }
  return f;
}

std::complex<double> ops_value(const Ket2d& k, const OamPair& oam, double x, double y,
                               double waist) {
  return k(0) * lg_value(oam.l(), x, y, waist) + k(1) * lg_value(oam.m(), x, y, waist);
}

ScalarField ops_scalar(const Ket2d& k, const OamPair& oam, const GridSpec& grid) {
  return {grid, k(0) * sample_mode(oam.l(), grid) + k(1) * sample_mode(oam.m(), grid)};
}

JonesRing sample_ring(const HybridKetd& k, const OamPair& oam, double waist, double radius,
                      int count) {
  JonesRing ring{radius, ring_azimuths(count), {}};
  ring.values.reserve(count);
  for (double phi : ring.azimuth) {
    ring.values.push_back(jones_at(k, oam, radius * std::cos(phi), radius * std::sin(phi), waist));
  }
  return ring;
}

IntensityRing intensity_ring(const HybridKetd& k, const OamPair& oam, double waist,
                             double radius, int count) {
  const JonesRing jr = sample_ring(k, oam, waist, radius, count);
  IntensityRing ring{radius, jr.azimuth, {}};
  ring.values.reserve(count);
  for (const auto& e : jr.values) ring.values.push_back(e.squaredNorm());
  return ring;
}

double peak_ring_radius(const HybridKetd& k, const OamPair& oam, double waist) {
  // Cross terms between the two charges average out over azimuth, leaving a
  // weighted sum of the two radial envelopes.
  const double wl = std::norm(k(kRl)) + std::norm(k(kLl));
  const double wm = std::norm(k(kRm)) + std::norm(k(kLm));
  auto mean_intensity = [&](double r) {
    const double al = lg_envelope(oam.l(), r, waist);
    const double am = lg_envelope(oam.m(), r, waist);
    return wl * al * al + wm * am * am;
  };

  constexpr int kScan = 1000;
  const double r_max = 6.0 * waist;
  int best = 0;
  double best_value = mean_intensity(0.0);
  for (int s = 1; s <= kScan; ++s) {
    const double v = mean_intensity(r_max * s / kScan);
    if (v > best_value) {
      best_value = v;
      best = s;
    }
  }
  if (best == 0) return 0.0;

  // Golden-section refinement inside the bracketing scan cells.
  double lo = r_max * (best - 1) / kScan;
  double hi = r_max * std::min(best + 1, kScan) / kScan;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
  double fa = mean_intensity(a), fb = mean_intensity(b);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * waist; ++it) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + g * (hi - lo);
      fb = mean_intensity(b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - g * (hi - lo);
      fa = mean_intensity(a);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace ghps
