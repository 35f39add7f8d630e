#include "ghps/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <iterator>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace ghps {

namespace {

using json = nlohmann::json;

double number_at(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("config is missing key '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number()) throw std::invalid_argument(std::string("config key '") + key + "' must be a number");
  return v.get<double>();
}

int integer_at(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("config is missing key '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("config key '") + key + "' must be an integer");
  return v.get<int>();
}

void put_u64(std::ostream& os, std::uint64_t v) {
  char bytes[8];
  for (int b = 0; b < 8; ++b) bytes[b] = static_cast<char>((v >> (8 * b)) & 0xff);
  os.write(bytes, 8);
}

std::uint64_t get_u64(std::istream& is) {
  unsigned char bytes[8];
  if (!is.read(reinterpret_cast<char*>(bytes), 8)) throw std::runtime_error("truncated field container");
  std::uint64_t v = 0;
  for (int b = 7; b >= 0; --b) v = (v << 8) | bytes[b];
  return v;
}

void put_f64(std::ostream& os, double v) { put_u64(os, std::bit_cast<std::uint64_t>(v)); }
double get_f64(std::istream& is) { return std::bit_cast<double>(get_u64(is)); }

// Row-major walk over an n x n grid, calling emit(row, col).
template <typename Emit>
void for_each_pixel(int n, Emit&& emit) {
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) emit(r, c);
}

void put_pgm_header(std::ostream& os, Eigen::Index width, Eigen::Index height, int maxval) {
  os << "P5\n" << width << ' ' << height << '\n' << maxval << '\n';
}

}  // namespace

json config_to_json(const GhpsConfigd& cfg) {
  return {{"theta_s", cfg.sam.theta()}, {"phi_s", cfg.sam.phi()},   {"theta_o", cfg.orb.theta()},
          {"phi_o", cfg.orb.phi()},     {"theta_g", cfg.ghps.theta()}, {"phi_g", cfg.ghps.phi()},
          {"l", cfg.oam.l()},           {"m", cfg.oam.m()}};
}

GhpsConfigd config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  return {SphereCoordd(number_at(j, "theta_s"), number_at(j, "phi_s")),
          SphereCoordd(number_at(j, "theta_o"), number_at(j, "phi_o")),
          SphereCoordd(number_at(j, "theta_g"), number_at(j, "phi_g")),
          OamPair(integer_at(j, "l"), integer_at(j, "m"))};
}

json grid_to_json(const GridSpec& grid) {
  return {{"n", grid.n}, {"half_extent", grid.half_extent}, {"waist", grid.waist}};
}

GridSpec grid_from_json(const json& j, const GridSpec& defaults) {
  GridSpec g = defaults;
  if (j.contains("n")) g.n = integer_at(j, "n");
  if (j.contains("half_extent")) g.half_extent = number_at(j, "half_extent");
  if (j.contains("waist")) g.waist = number_at(j, "waist");
  g.validate();
  return g;
}

json ket_to_json(const HybridKetd& k) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < 4; ++i) {
    arr.push_back(k(i).real());
    arr.push_back(k(i).imag());
  }
  return arr;
}

HybridKetd ket_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8) throw std::invalid_argument("hybrid ket must be an array of 8 numbers");
  HybridKetd k;
  for (Eigen::Index i = 0; i < 4; ++i) k(i) = {j.at(2 * i).get<double>(), j.at(2 * i + 1).get<double>()};
  return k;
}

void write_container(std::ostream& os, const GridSpec& grid, std::span<const double> data) {
  put_u64(os, static_cast<std::uint64_t>(grid.n));
  put_f64(os, grid.half_extent);
  put_f64(os, grid.waist);
  for (double v : data) put_f64(os, v);
}

Container read_container(std::istream& is) {
  Container c;
  const std::uint64_t n = get_u64(is);
  if (n == 0 || n > (1u << 16)) throw std::runtime_error("field container has implausible grid size");
  c.grid.n = static_cast<int>(n);
  c.grid.half_extent = get_f64(is);
  c.grid.waist = get_f64(is);
  c.grid.validate();

  const std::vector<char> payload{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
  if (payload.size() % 8 != 0) throw std::runtime_error("field container payload is not a whole number of float64 values");
  std::vector<double> data(payload.size() / 8);
  for (std::size_t k = 0; k < data.size(); ++k) {
    std::uint64_t bits = 0;
    for (int b = 7; b >= 0; --b) bits = (bits << 8) | static_cast<unsigned char>(payload[8 * k + b]);
    data[k] = std::bit_cast<double>(bits);
  }
  const std::size_t pixels = n * n;
  if (data.empty() || data.size() % pixels != 0) throw std::runtime_error("field container payload does not match grid size");
  c.components = static_cast<int>(data.size() / pixels);
  c.data = std::move(data);
  return c;
}

void write_binary(std::ostream& os, const ScalarField& f) {
  std::vector<double> data;
  data.reserve(2 * f.values.size());
  for_each_pixel(f.grid.n, [&](int r, int c) {
    data.push_back(f.values(r, c).real());
    data.push_back(f.values(r, c).imag());
  });
  write_container(os, f.grid, data);
}

void write_binary(std::ostream& os, const JonesField& f) {
  std::vector<double> data;
  data.reserve(4 * f.ex.size());
  for_each_pixel(f.grid.n, [&](int r, int c) {
    data.insert(data.end(), {f.ex(r, c).real(), f.ex(r, c).imag(), f.ey(r, c).real(), f.ey(r, c).imag()});
  });
  write_container(os, f.grid, data);
}

void write_binary(std::ostream& os, const StokesField& f) {
  std::vector<double> data;
  data.reserve(4 * f.s0.size());
  for_each_pixel(f.grid.n, [&](int r, int c) {
    data.insert(data.end(), {f.s0(r, c), f.s1(r, c), f.s2(r, c), f.s3(r, c)});
  });
  write_container(os, f.grid, data);
}

void write_binary(std::ostream& os, const PhaseMask& m) {
  std::vector<double> data;
  data.reserve(m.phase.size());
  for_each_pixel(m.grid.n, [&](int r, int c) { data.push_back(m.phase(r, c)); });
  write_container(os, m.grid, data);
}

ScalarField scalar_field_from(const Container& c) {
  if (c.components != 2) throw std::runtime_error("container does not hold a scalar field");
  ScalarField f{c.grid, Eigen::ArrayXXcd(c.grid.n, c.grid.n)};
  std::size_t k = 0;
  for_each_pixel(c.grid.n, [&](int r, int col) {
    f.values(r, col) = {c.data[k], c.data[k + 1]};
    k += 2;
  });
  return f;
}

JonesField jones_field_from(const Container& c) {
  if (c.components != 4) throw std::runtime_error("container does not hold a Jones field");
  JonesField f{c.grid, Eigen::ArrayXXcd(c.grid.n, c.grid.n), Eigen::ArrayXXcd(c.grid.n, c.grid.n)};
  std::size_t k = 0;
  for_each_pixel(c.grid.n, [&](int r, int col) {
    f.ex(r, col) = {c.data[k], c.data[k + 1]};
    f.ey(r, col) = {c.data[k + 2], c.data[k + 3]};
    k += 4;
  });
  return f;
}

void write_csv(std::ostream& os, const ScalarField& f) {
  os.precision(17);
  os << "x,y,re,im\n";
  for_each_pixel(f.grid.n, [&](int r, int c) {
    os << f.grid.coord(c) << ',' << f.grid.coord(r) << ',' << f.values(r, c).real() << ','
       << f.values(r, c).imag() << '\n';
  });
}

void write_csv(std::ostream& os, const JonesField& f) {
  os.precision(17);
  os << "x,y,ex_re,ex_im,ey_re,ey_im\n";
  for_each_pixel(f.grid.n, [&](int r, int c) {
    os << f.grid.coord(c) << ',' << f.grid.coord(r) << ',' << f.ex(r, c).real() << ','
       << f.ex(r, c).imag() << ',' << f.ey(r, c).real() << ',' << f.ey(r, c).imag() << '\n';
  });
}

void write_csv(std::ostream& os, const StokesField& f) {
  os.precision(17);
  os << "x,y,S0,S1,S2,S3\n";
  for_each_pixel(f.grid.n, [&](int r, int c) {
    os << f.grid.coord(c) << ',' << f.grid.coord(r) << ',' << f.s0(r, c) << ',' << f.s1(r, c)
       << ',' << f.s2(r, c) << ',' << f.s3(r, c) << '\n';
  });
}

void write_phase_pgm(std::ostream& os, const PhaseMask& m) {
  const Eigen::Index rows = m.phase.rows(), cols = m.phase.cols();
  put_pgm_header(os, cols, rows, 65535);
  for (Eigen::Index r = rows - 1; r >= 0; --r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const double t = m.phase(r, c) / (2.0 * std::numbers::pi);
      const auto v = static_cast<std::uint16_t>(std::clamp(std::floor(t * 65536.0), 0.0, 65535.0));
      os.put(static_cast<char>(v >> 8));
      os.put(static_cast<char>(v & 0xff));
    }
  }
}

void write_label_pgm(std::ostream& os, const LabelMap& labels) {
  put_pgm_header(os, labels.cols(), labels.rows(), 3);
  for (Eigen::Index r = labels.rows() - 1; r >= 0; --r) {
    for (Eigen::Index c = 0; c < labels.cols(); ++c) os.put(static_cast<char>(labels(r, c)));
  }
}

}  // namespace ghps
