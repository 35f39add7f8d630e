// Real-space realization of hybrid kets.
//
// OAM components are p = 0 Laguerre-Gaussian modes at the waist plane,
//   u_l(r, φ) = C_l (r√2/w0)^|l| exp(-r²/w0²) exp(ilφ),  C_l = sqrt(2 / (π w0² |l|!)),
// and spin components use |R> = (1, -i)/√2, |L> = (1, +i)/√2 in (x, y).

#pragma once

#include "ghps/fields.hpp"
#include "ghps/state_space.hpp"

namespace ghps {

double lg_norm_constant(int l, double waist);

/// u_l at the transverse point (x, y).
std::complex<double> lg_value(int l, double x, double y, double waist);

ScalarField lg_mode(int l, const GridSpec& grid);

/// Cartesian Jones vector of a spin ket a|R> + b|L>.
Eigen::Vector2cd jones_of_sam(const Ket2d& k);

/// Jones vector of a hybrid ket at one transverse point.
Eigen::Vector2cd jones_at(const HybridKetd& k, const OamPair& oam, double x, double y,
                          double waist);

JonesField synthesize(const HybridKetd& k, const OamPair& oam, const GridSpec& grid);

/// a u_l + b u_m at one point.
std::complex<double> ops_value(const Ket2d& k, const OamPair& oam, double x, double y,
                               double waist);

ScalarField ops_scalar(const Ket2d& k, const OamPair& oam, const GridSpec& grid);

/// Exact point evaluation of the field on a ring (no grid interpolation).
JonesRing sample_ring(const HybridKetd& k, const OamPair& oam, double waist, double radius,
                      int count);

IntensityRing intensity_ring(const HybridKetd& k, const OamPair& oam, double waist,
                             double radius, int count);

/// Radius maximizing the azimuthally averaged intensity of k.
double peak_ring_radius(const HybridKetd& k, const OamPair& oam, double waist);

}  // namespace ghps
