// State algebra for the Poincaré sphere (SAM), the orbital Poincaré sphere
// (OAM) and the hybrid spheres built from their tensor products.
//
// Hybrid kets live in the fixed basis
//   { |R>|l>, |R>|m>, |L>|l>, |L>|m> }
// i.e. the Kronecker product (spin ⊗ orbit) of the ordered two-level bases
// (R, L) and (l, m). This order is used for every serialization and test
// vector; never reorder it.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ghps {

template <typename Scalar = double>
using Ket2 = Eigen::Matrix<std::complex<Scalar>, 2, 1>;

template <typename Scalar = double>
using HybridKet = Eigen::Matrix<std::complex<Scalar>, 4, 1>;

template <typename Scalar = double>
using StokesVector = Eigen::Matrix<Scalar, 3, 1>;

enum HybridIndex : Eigen::Index { kRl = 0, kRm = 1, kLl = 2, kLm = 3 };

/// Raised when a ket handed to ghps_stokes has weight outside the pole plane.
class OutOfSubspaceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Reduce an angle into [0, 2π).
template <typename Scalar>
Scalar wrap_two_pi(Scalar angle) {
  constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  Scalar r = std::fmod(angle, two_pi);
  if (r < 0) r += two_pi;
  if (r >= two_pi) r = 0;
  return r;
}

/// Reduce an angle into [-π, π).
template <typename Scalar>
Scalar wrap_pi(Scalar angle) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  return wrap_two_pi(angle + pi) - pi;
}

/// Latitude/longitude on a unit sphere. Latitude is the polar angle measured
/// from the north pole. A latitude outside [0, π] is rejected (wrapping it
/// would silently exchange the poles); values within 1e-12 of the interval
/// are clamped. Longitude is reduced mod 2π.
template <typename Scalar = double>
class SphereCoord {
 public:
  SphereCoord() = default;
  SphereCoord(Scalar theta, Scalar phi) : theta_(checked_theta(theta)), phi_(wrap_two_pi(phi)) {}

  Scalar theta() const { return theta_; }
  Scalar phi() const { return phi_; }

  StokesVector<Scalar> unit_vector() const {
    return {std::sin(theta_) * std::cos(phi_), std::sin(theta_) * std::sin(phi_), std::cos(theta_)};
  }

  bool operator==(const SphereCoord&) const = default;

 private:
  static Scalar checked_theta(Scalar theta) {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    constexpr Scalar slack = Scalar(1e-12);
    if (!(theta >= -slack && theta <= pi + slack)) {
      throw std::invalid_argument("sphere latitude " + std::to_string(double(theta)) +
                                  " outside [0, pi]");
    }
    return std::clamp(theta, Scalar(0), pi);
  }

  Scalar theta_{0};
  Scalar phi_{0};
};

/// Topological charges of the two OPS poles: north |l>, south |m>.
class OamPair {
 public:
  OamPair() = default;
  OamPair(int l, int m) : l_(l), m_(m) {
    if (l == m) throw std::invalid_argument("OAM pair requires l != m");
  }

  int l() const { return l_; }
  int m() const { return m_; }

  bool operator==(const OamPair&) const = default;

 private:
  int l_{1};
  int m_{-1};
};

/// The six hybrid-sphere parameters plus the OAM pair.
template <typename Scalar = double>
struct GhpsConfig {
  SphereCoord<Scalar> sam;
  SphereCoord<Scalar> orb;
  SphereCoord<Scalar> ghps;
  OamPair oam;

  bool operator==(const GhpsConfig&) const = default;
};

template <typename Scalar = double>
struct PolePair {
  HybridKet<Scalar> north;
  HybridKet<Scalar> south;
};

/// cos(θ/2)|N> + e^{iφ} sin(θ/2)|S>
template <typename Scalar>
Ket2<Scalar> sphere_ket(const SphereCoord<Scalar>& c) {
  const Scalar half = c.theta() / 2;
  return {std::complex<Scalar>(std::cos(half), 0), std::polar(std::sin(half), c.phi())};
}

/// sin(θ/2)|N> - e^{iφ} cos(θ/2)|S>, the antipode of sphere_ket(c).
template <typename Scalar>
Ket2<Scalar> orthogonal_ket(const SphereCoord<Scalar>& c) {
  const Scalar half = c.theta() / 2;
  return {std::complex<Scalar>(std::sin(half), 0), -std::polar(std::cos(half), c.phi())};
}

/// spin ⊗ orbit in the (Rl, Rm, Ll, Lm) order.
template <typename Scalar>
HybridKet<Scalar> tensor(const Ket2<Scalar>& spin, const Ket2<Scalar>& orbit) {
  return {spin(0) * orbit(0), spin(0) * orbit(1), spin(1) * orbit(0), spin(1) * orbit(1)};
}

template <typename Scalar>
PolePair<Scalar> ghps_poles(const GhpsConfig<Scalar>& cfg) {
  return {tensor(sphere_ket(cfg.sam), sphere_ket(cfg.orb)),
          tensor(orthogonal_ket(cfg.sam), orthogonal_ket(cfg.orb))};
}

template <typename Scalar>
HybridKet<Scalar> ghps_ket(const GhpsConfig<Scalar>& cfg) {
  const auto poles = ghps_poles(cfg);
  const Ket2<Scalar> w = sphere_ket(cfg.ghps);
  return w(0) * poles.north + w(1) * poles.south;
}

/// Conventional higher-order sphere: poles fixed at |R>|l> and |L>|m>.
template <typename Scalar>
HybridKet<Scalar> hops_ket(Scalar theta_h, Scalar phi_h) {
  const Ket2<Scalar> w = sphere_ket(SphereCoord<Scalar>(theta_h, phi_h));
  HybridKet<Scalar> k = HybridKet<Scalar>::Zero();
  k(kRl) = w(0);
  k(kLm) = w(1);
  return k;
}

/// <x|y>, antilinear in x.
template <typename DerivedX, typename DerivedY>
auto inner(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
  return x.dot(y);
}

/// Two states are the same ray when |<x|y>| = |x||y|, i.e. they differ only
/// by a global phase.
template <typename DerivedX, typename DerivedY>
bool same_ray(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y,
              double tol = 1e-12) {
  const double nx = x.norm(), ny = y.norm();
  if (nx == 0 || ny == 0) return nx == ny;
  return std::abs(1.0 - std::abs(x.dot(y)) / (nx * ny)) <= tol;
}

/// Pauli expectations of a normalized two-level ket. S3 is the pole axis,
/// S1 + iS2 = 2 a* b.
template <typename Scalar>
StokesVector<Scalar> stokes_ps(const Ket2<Scalar>& k) {
  const std::complex<Scalar> cross = Scalar(2) * std::conj(k(0)) * k(1);
  return {cross.real(), cross.imag(), std::norm(k(0)) - std::norm(k(1))};
}

/// Stokes vector of k in the moving frame spanned by the pole pair, with
/// N at +S3. Throws OutOfSubspaceError when k has weight outside span{N, S}.
template <typename Scalar>
StokesVector<Scalar> ghps_stokes(const HybridKet<Scalar>& k, const PolePair<Scalar>& poles,
                                 Scalar tol = Scalar(1e-9)) {
  const Ket2<Scalar> coeff(inner(poles.north, k), inner(poles.south, k));
  const Scalar residual = (k - coeff(0) * poles.north - coeff(1) * poles.south).norm();
  if (residual > tol) {
    throw OutOfSubspaceError("ket has projection residual " + std::to_string(double(residual)) +
                             " outside the pole subspace");
  }
  const Scalar n = coeff.norm();
  if (n == 0) throw OutOfSubspaceError("zero ket has no Stokes direction");
  return stokes_ps(Ket2<Scalar>(coeff / n));
}

using Ket2d = Ket2<double>;
using HybridKetd = HybridKet<double>;
using StokesVectord = StokesVector<double>;
using SphereCoordd = SphereCoord<double>;
using GhpsConfigd = GhpsConfig<double>;
using PolePaird = PolePair<double>;

}  // namespace ghps
