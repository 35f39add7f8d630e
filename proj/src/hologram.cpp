#include "ghps/hologram.hpp"

#include "ghps/state_space.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ghps {

namespace {

// In-place 2D transform, rows then columns. A fresh FFT object per call keeps
// the plan cache local to the caller's thread.
void fft2(Eigen::ArrayXXcd& a, bool inverse) {
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> in, out;

  in.resize(a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) in[c] = a(r, c);
    inverse ? fft.inv(out, in) : fft.fwd(out, in);
    for (Eigen::Index c = 0; c < a.cols(); ++c) a(r, c) = out[c];
  }
  in.resize(a.rows());
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) in[r] = a(r, c);
    inverse ? fft.inv(out, in) : fft.fwd(out, in);
    for (Eigen::Index r = 0; r < a.rows(); ++r) a(r, c) = out[r];
  }
}

}  // namespace

DoublePhase double_phase_components(const ScalarField& f) {
  if (!f.values.allFinite()) throw std::invalid_argument("double-phase encoding needs a finite field");
  const Eigen::ArrayXXd amp = f.values.abs();
  const double peak = amp.maxCoeff();
  const Eigen::ArrayXXd a = peak > 0 ? Eigen::ArrayXXd(amp / peak) : Eigen::ArrayXXd::Zero(amp.rows(), amp.cols());
  const Eigen::ArrayXXd theta = f.values.arg();
  const Eigen::ArrayXXd spread = a.min(1.0).acos();
  return {theta + spread, theta - spread};
}

PhaseMask double_phase_encode(const ScalarField& f) {
  const DoublePhase dp = double_phase_components(f);
  PhaseMask mask{f.grid, Eigen::ArrayXXd(dp.theta1.rows(), dp.theta1.cols())};
  for (Eigen::Index c = 0; c < mask.phase.cols(); ++c) {
    for (Eigen::Index r = 0; r < mask.phase.rows(); ++r) {
      mask.phase(r, c) = wrap_two_pi((r + c) % 2 == 0 ? dp.theta1(r, c) : dp.theta2(r, c));
    }
  }
  return mask;
}

ScalarField reconstruct(const PhaseMask& mask, double cutoff) {
  if (!(cutoff > 0 && cutoff <= 1)) throw std::invalid_argument("aperture cutoff must lie in (0, 1] of Nyquist");
  const Eigen::Index rows = mask.phase.rows(), cols = mask.phase.cols();
  Eigen::ArrayXXcd field(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) field(r, c) = std::polar(1.0, mask.phase(r, c));
  }

  fft2(field, false);
  const double radius = cutoff * 0.5 * double(std::min(rows, cols));
  for (Eigen::Index c = 0; c < cols; ++c) {
    const double kx = double(c < cols / 2 ? c : c - cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double ky = double(r < rows / 2 ? r : r - rows);
      if (kx * kx + ky * ky > radius * radius) field(r, c) = 0;
    }
  }
  fft2(field, true);
  return {mask.grid, field};
}

double fidelity(const ScalarField& a, const ScalarField& b) {
  if (a.values.rows() != b.values.rows() || a.values.cols() != b.values.cols() || !(a.grid == b.grid)) {
    throw std::invalid_argument("fidelity needs fields on the same grid");
  }
  const double na = a.values.abs2().sum();
  const double nb = b.values.abs2().sum();
  if (na == 0 || nb == 0) throw std::invalid_argument("fidelity of a zero-norm field is undefined");
  const std::complex<double> overlap = (a.values.conjugate() * b.values).sum();
  return std::norm(overlap) / (na * nb);
}

}  // namespace ghps
