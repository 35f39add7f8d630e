#include "ghps/polarimetry.hpp"

#include "ghps/field_synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ghps {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Eigen::Vector4d stokes(const Eigen::Vector2cd& e, S3Convention convention) {
  const double ix = std::norm(e(0));
  const double iy = std::norm(e(1));
  const std::complex<double> cross = e(0) * std::conj(e(1));
  const double s3 = 2.0 * cross.imag();
  return {ix + iy, ix - iy, 2.0 * cross.real(),
          convention == S3Convention::kRightPositive ? s3 : -s3};
}

StokesField stokes_field(const JonesField& f, S3Convention convention) {
  const Eigen::ArrayXXcd cross = f.ex * f.ey.conjugate();
  const double sign = convention == S3Convention::kRightPositive ? 1.0 : -1.0;
  return {f.grid, f.ex.abs2() + f.ey.abs2(), f.ex.abs2() - f.ey.abs2(), 2.0 * cross.real(),
          sign * 2.0 * cross.imag()};
}

Ellipse ellipse_of(const Eigen::Vector4d& s) {
  double psi = 0.5 * std::atan2(s(2), s(1));
  if (psi < 0) psi += kPi;
  if (psi >= kPi) psi -= kPi;
  const double ratio = s(0) > 0 ? std::clamp(s(3) / s(0), -1.0, 1.0) : 0.0;
  return {psi, 0.5 * std::asin(ratio)};
}

EllipseMap ellipse_map(const StokesField& s, double rel_threshold) {
  const Eigen::Index rows = s.s0.rows(), cols = s.s0.cols();
  EllipseMap e{Eigen::ArrayXXd(rows, cols), Eigen::ArrayXXd(rows, cols), s.s0 > 0};
  const double threshold = rel_threshold * s.s0.maxCoeff();
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      const Ellipse el = ellipse_of({s.s0(r, c), s.s1(r, c), s.s2(r, c), s.s3(r, c)});
      e.psi(r, c) = el.psi;
      e.chi(r, c) = el.chi;
      e.valid(r, c) = s.s0(r, c) > threshold;
    }
  }
  return e;
}

PolarizationClass classify(double chi, double tol) {
  if (!(tol > 0 && tol < kPi / 8)) throw std::invalid_argument("classification tolerance must lie in (0, pi/8)");
  const double a = std::abs(chi);
  if (a < tol) return PolarizationClass::kLinear;
  if (std::abs(a - kPi / 4) < tol) return PolarizationClass::kCircular;
  return PolarizationClass::kElliptical;
}

LabelMap classify(const EllipseMap& e, double tol) {
  LabelMap out(e.chi.rows(), e.chi.cols());
  for (Eigen::Index c = 0; c < out.cols(); ++c) {
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      const auto label = e.valid(r, c) ? classify(e.chi(r, c), tol) : PolarizationClass::kInvalid;
      out(r, c) = static_cast<std::uint8_t>(label);
    }
  }
  return out;
}

Eigen::ArrayXXd eq8_prediction(const GhpsConfigd& cfg, const GridSpec& grid) {
  const double half = cfg.ghps.theta() / 2;
  const ScalarField plus = ops_scalar(sphere_ket(cfg.orb), cfg.oam, grid);
  const ScalarField minus = ops_scalar(orthogonal_ket(cfg.orb), cfg.oam, grid);
  return std::pow(std::cos(half), 2) * plus.values.abs2() +
         std::pow(std::sin(half), 2) * minus.values.abs2();
}

LocalRatio local_ratio(const JonesRing& ring, const Ket2d& spin_plus, const Ket2d& spin_minus) {
  const Eigen::Vector2cd jp = jones_of_sam(spin_plus);
  const Eigen::Vector2cd jm = jones_of_sam(spin_minus);
  const Eigen::Index count = ring.size();
  LocalRatio out{Eigen::ArrayXd::Zero(count), Eigen::ArrayXd::Zero(count),
                 Eigen::Array<bool, Eigen::Dynamic, 1>::Constant(count, false)};

  double peak = 0;
  for (const auto& e : ring.values) peak = std::max(peak, e.squaredNorm());

  for (Eigen::Index k = 0; k < count; ++k) {
    const Eigen::Vector2cd& e = ring.values[k];
    const std::complex<double> cp = jp.dot(e);
    const std::complex<double> cm = jm.dot(e);
    if (std::abs(cp) < 1e-12 || e.squaredNorm() < 1e-6 * peak) continue;
    out.rho(k) = std::abs(cm) / std::abs(cp);
    out.delta(k) = wrap_two_pi(std::arg(cm) - std::arg(cp));
    out.valid(k) = true;
  }
  return out;
}

RhoDelta analytic_rho_delta(const GhpsConfigd& cfg, double phi, double ring_radius,
                            double waist) {
  const double x = ring_radius * std::cos(phi), y = ring_radius * std::sin(phi);
  const std::complex<double> plus = ops_value(sphere_ket(cfg.orb), cfg.oam, x, y, waist);
  const std::complex<double> minus = ops_value(orthogonal_ket(cfg.orb), cfg.oam, x, y, waist);
  const double half = cfg.ghps.theta() / 2;
  // Same vanishing threshold local_ratio applies to the measured coefficient.
  if (std::cos(half) * std::abs(plus) < 1e-12) {
    throw UndefinedRatioError("psi_s+ coefficient vanishes; local ratio undefined");
  }
  return {std::tan(half) * std::abs(minus) / std::abs(plus),
          wrap_two_pi(cfg.ghps.phi() + std::arg(minus) - std::arg(plus))};
}

int lobe_count(const IntensityRing& ring) {
  const auto& v = ring.values;
  const std::size_t n = v.size();
  if (n < 64) throw std::invalid_argument("lobe counting needs at least 64 azimuthal samples");
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  if (*hi < 1e-12) throw DegenerateProfileError("dark ring: no intensity profile to analyze");
  if (*hi - *lo <= 1e-9 * *hi) return 0;

  int count = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double prev = v[(k + n - 1) % n];
    const double next = v[(k + 1) % n];
    if (v[k] > prev && v[k] >= next && v[k] > 0.1 * *hi) ++count;
  }
  return count;
}

double ring_relative_variation(const IntensityRing& ring) {
  const auto [lo, hi] = std::minmax_element(ring.values.begin(), ring.values.end());
  if (*hi <= 0) throw DegenerateProfileError("dark ring");
  return (*hi - *lo) / *hi;
}

}  // namespace ghps
