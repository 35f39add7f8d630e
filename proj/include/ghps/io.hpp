// Serialization: config/ket JSON, the binary field container, CSV and PGM.
//
// Binary container layout (all little-endian):
//   uint64  n
//   float64 half_extent
//   float64 waist
//   float64 data[n * n * components]   row-major, components interleaved per pixel
// Components per pixel: ScalarField (re, im); JonesField (ex re, ex im, ey re,
// ey im); StokesField (S0, S1, S2, S3); PhaseMask (phase).
//
// Raster exports (PGM) put the largest y on the top row.

#pragma once

#include "ghps/fields.hpp"
#include "ghps/hologram.hpp"
#include "ghps/polarimetry.hpp"
#include "ghps/state_space.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ghps {

nlohmann::json config_to_json(const GhpsConfigd& cfg);
GhpsConfigd config_from_json(const nlohmann::json& j);

nlohmann::json grid_to_json(const GridSpec& grid);
/// Missing keys keep the values of `defaults`.
GridSpec grid_from_json(const nlohmann::json& j, const GridSpec& defaults = {});

/// 8 numbers, (re, im) interleaved in basis order.
nlohmann::json ket_to_json(const HybridKetd& k);
HybridKetd ket_from_json(const nlohmann::json& j);

struct Container {
  GridSpec grid;
  int components = 0;
  std::vector<double> data;
};

void write_container(std::ostream& os, const GridSpec& grid, std::span<const double> data);
/// Component count is inferred from the payload length.
Container read_container(std::istream& is);

void write_binary(std::ostream& os, const ScalarField& f);
void write_binary(std::ostream& os, const JonesField& f);
void write_binary(std::ostream& os, const StokesField& f);
void write_binary(std::ostream& os, const PhaseMask& m);

ScalarField scalar_field_from(const Container& c);
JonesField jones_field_from(const Container& c);

void write_csv(std::ostream& os, const ScalarField& f);
void write_csv(std::ostream& os, const JonesField& f);
void write_csv(std::ostream& os, const StokesField& f);

/// 16-bit binary PGM; phase mapped linearly from [0, 2π) onto [0, 65535].
void write_phase_pgm(std::ostream& os, const PhaseMask& m);

/// 8-bit binary PGM with maxval 3 holding PolarizationClass values.
void write_label_pgm(std::ostream& os, const LabelMap& labels);

}  // namespace ghps
