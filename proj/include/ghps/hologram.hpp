// Phase-only encoding of complex fields by double-phase decomposition, and a
// simulated 4f low-pass reconstruction to check it.

#pragma once

#include "ghps/fields.hpp"

namespace ghps {

/// Phases in [0, 2π).
struct PhaseMask {
  GridSpec grid;
  Eigen::ArrayXXd phase;
};

/// The two phase planes before interleaving. With A = |f| / max|f| and
/// θ = arg f, theta1 = θ + acos(A) and theta2 = θ - acos(A), so that
/// (e^{iθ1} + e^{iθ2}) / 2 = A e^{iθ}. Phases are not wrapped.
struct DoublePhase {
  Eigen::ArrayXXd theta1;
  Eigen::ArrayXXd theta2;
};

DoublePhase double_phase_components(const ScalarField& f);

/// theta1 on pixels with (row + col) even, theta2 on the others.
PhaseMask double_phase_encode(const ScalarField& f);

inline constexpr double kDefaultCutoff = 0.25;

/// e^{i·mask} passed through a centred circular aperture in the Fourier
/// plane. cutoff is the aperture radius as a fraction of the Nyquist radius
/// and must lie in (0, 1].
ScalarField reconstruct(const PhaseMask& mask, double cutoff = kDefaultCutoff);

/// |Σ a* b|² / (Σ|a|² Σ|b|²). Throws on a zero-norm input or mismatched grids.
double fidelity(const ScalarField& a, const ScalarField& b);

}  // namespace ghps
