// Stokes fields, polarization ellipses and the intensity / local-polarization
// laws of hybrid-sphere states.

#pragma once

#include "ghps/fields.hpp"
#include "ghps/state_space.hpp"

#include <cstdint>

namespace ghps {

/// Sign convention for S3. The library convention makes |R> = (1, -i)/√2
/// map to S3 = +1; the flipped variant exists so verification can be run
/// against a deliberately wrong convention.
enum class S3Convention { kRightPositive, kRightNegative };

class UndefinedRatioError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegenerateProfileError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct StokesField {
  GridSpec grid;
  Eigen::ArrayXXd s0, s1, s2, s3;
};

/// (S0, S1, S2, S3) of one Jones vector.
Eigen::Vector4d stokes(const Eigen::Vector2cd& e,
                       S3Convention convention = S3Convention::kRightPositive);

StokesField stokes_field(const JonesField& f,
                         S3Convention convention = S3Convention::kRightPositive);

/// Orientation psi in [0, π) and ellipticity chi in [-π/4, π/4].
struct Ellipse {
  double psi = 0;
  double chi = 0;
};

Ellipse ellipse_of(const Eigen::Vector4d& s);

struct EllipseMap {
  Eigen::ArrayXXd psi;
  Eigen::ArrayXXd chi;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> valid;
};

/// Pixels with S0 below rel_threshold * max(S0) are masked out.
EllipseMap ellipse_map(const StokesField& s, double rel_threshold = 1e-6);

enum class PolarizationClass : std::uint8_t { kInvalid = 0, kLinear = 1, kCircular = 2, kElliptical = 3 };

using LabelMap = Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

PolarizationClass classify(double chi, double tol = 0.01);

/// Labels stored as the underlying PolarizationClass values.
LabelMap classify(const EllipseMap& e, double tol = 0.01);

/// cos²(θ_G/2)|ψ_o⁺|² + sin²(θ_G/2)|ψ_o⁻|² on the grid.
Eigen::ArrayXXd eq8_prediction(const GhpsConfigd& cfg, const GridSpec& grid);

struct LocalRatio {
  Eigen::ArrayXd rho;
  Eigen::ArrayXd delta;  // in [0, 2π)
  Eigen::Array<bool, Eigen::Dynamic, 1> valid;
};

/// Projects each ring sample onto the Jones vectors of the spin pair and
/// returns |c⁻|/|c⁺| and arg c⁻ - arg c⁺. An azimuth is invalid when
/// |c⁺| < 1e-12 or its intensity is below 1e-6 of the ring maximum.
LocalRatio local_ratio(const JonesRing& ring, const Ket2d& spin_plus, const Ket2d& spin_minus);

struct RhoDelta {
  double rho = 0;
  double delta = 0;  // in [0, 2π)
};

/// Closed form of the local ratio obtained by expanding the hybrid ket:
/// the ψ_s⁻ coefficient relative to ψ_s⁺ is e^{iφ_G} tan(θ_G/2) ψ_o⁻/ψ_o⁺.
/// Throws UndefinedRatioError when the ψ_s⁺ coefficient cos(θ_G/2)|ψ_o⁺|
/// falls below 1e-12.
RhoDelta analytic_rho_delta(const GhpsConfigd& cfg, double phi, double ring_radius,
                            double waist = 1.0);

/// Number of local maxima of a periodic profile above 10% of its maximum.
/// Flat profiles (relative spread below 1e-9) have no lobes.
int lobe_count(const IntensityRing& ring);

/// (max - min) / max over the ring.
double ring_relative_variation(const IntensityRing& ring);

}  // namespace ghps
