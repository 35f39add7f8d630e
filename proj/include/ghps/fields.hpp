// Sampled transverse-plane containers.
//
// Arrays are indexed (row, col) = (j, i) with x taken from the column and y
// from the row. Pixel centres sit at ((i + 0.5)/n - 0.5) * 2 * half_extent * waist,
// so no sample lands on the optical axis.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace ghps {

struct GridSpec {
  int n = 256;
  double half_extent = 4.0;  // in units of the waist
  double waist = 1.0;

  void validate() const {
    if (n < 16 || n % 2 != 0) throw std::invalid_argument("grid size must be an even integer >= 16");
    if (!(half_extent > 0)) throw std::invalid_argument("grid half_extent must be positive");
    if (!(waist > 0)) throw std::invalid_argument("grid waist must be positive");
  }

  double pitch() const { return 2.0 * half_extent * waist / n; }
  double coord(int index) const { return ((index + 0.5) / n - 0.5) * 2.0 * half_extent * waist; }
  double pixel_area() const { return pitch() * pitch(); }

  bool operator==(const GridSpec&) const = default;
};

struct ScalarField {
  GridSpec grid;
  Eigen::ArrayXXcd values;
};

struct JonesField {
  GridSpec grid;
  Eigen::ArrayXXcd ex;
  Eigen::ArrayXXcd ey;

  Eigen::ArrayXXd intensity() const { return ex.abs2() + ey.abs2(); }
  bool finite() const { return ex.allFinite() && ey.allFinite(); }
};

/// Samples on a circle of fixed radius at azimuths 2πk/count, k = 0..count-1.
template <typename Value>
struct RingSamples {
  double radius = 0;
  Eigen::ArrayXd azimuth;
  std::vector<Value> values;

  Eigen::Index size() const { return azimuth.size(); }
};

using JonesRing = RingSamples<Eigen::Vector2cd>;
using IntensityRing = RingSamples<double>;

}  // namespace ghps
