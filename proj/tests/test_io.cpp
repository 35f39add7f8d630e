#include <doctest.h>

#include "ghps/field_synthesis.hpp"
#include "ghps/io.hpp"

#include <random>
#include <sstream>

using namespace ghps;
using std::numbers::pi;
using nlohmann::json;

namespace {

GhpsConfigd draw_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  auto c = [&] { return SphereCoordd(std::acos(1 - 2 * u(rng)), 2 * pi * u(rng)); };
  return {c(), c(), c(), OamPair(int(u(rng) * 7) - 3, 4)};
}

std::vector<unsigned char> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("property: config JSON round trip is exact") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 200; ++t) {
    const GhpsConfigd cfg = draw_config(rng);
    CHECK(config_from_json(config_to_json(cfg)) == cfg);
    CHECK(config_from_json(json::parse(config_to_json(cfg).dump())) == cfg);
  }
}

TEST_CASE("config JSON validation") {
  const json good = {{"theta_s", 0}, {"phi_s", 0}, {"theta_o", 0}, {"phi_o", 0},
                     {"theta_g", 1}, {"phi_g", 7}, {"l", 1},       {"m", -1}};
  const GhpsConfigd cfg = config_from_json(good);
  CHECK(cfg.ghps.phi() == doctest::Approx(7 - 2 * pi));

  json j = good;
  j.erase("phi_o");
  CHECK_THROWS_AS(config_from_json(j), std::invalid_argument);
  j = good;
  j["l"] = 1.5;
  CHECK_THROWS_AS(config_from_json(j), std::invalid_argument);
  j = good;
  j["m"] = 1;
  CHECK_THROWS_AS(config_from_json(j), std::invalid_argument);
  j = good;
  j["theta_g"] = 4.0;
  CHECK_THROWS_AS(config_from_json(j), std::invalid_argument);
  j = good;
  j["theta_s"] = "0";
  CHECK_THROWS_AS(config_from_json(j), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("grid JSON keeps defaults for missing keys") {
  const GridSpec g = grid_from_json(json{{"n", 64}}, GridSpec{128, 3, 2});
  CHECK(g == GridSpec{64, 3, 2});
  CHECK(grid_from_json(grid_to_json(GridSpec{32, 5, 0.5})) == GridSpec{32, 5, 0.5});
  CHECK_THROWS_AS(grid_from_json(json{{"n", 63}}), std::invalid_argument);
}

TEST_CASE("ket JSON is eight interleaved numbers in basis order") {
  HybridKetd k;
  k << std::complex<double>(1, 2), std::complex<double>(3, 4), std::complex<double>(5, 6),
      std::complex<double>(7, 8);
  CHECK(ket_to_json(k) == json({1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0}));
  CHECK(ket_from_json(ket_to_json(k)) == k);
  CHECK_THROWS_AS(ket_from_json(json({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("binary container layout") {
  const GridSpec g{16, 4, 1};
  std::ostringstream os;
  write_container(os, g, std::vector<double>(16 * 16, 1.0));
  const auto b = bytes_of(os.str());
  REQUIRE(b.size() == 24 + 8 * 256);
  // n = 16 as little-endian uint64.
  CHECK(b[0] == 16);
  for (int i = 1; i < 8; ++i) CHECK(b[i] == 0);
  // 4.0 = 0x4010000000000000.
  CHECK(b[15] == 0x40);
  CHECK(b[14] == 0x10);
  // 1.0 = 0x3FF0000000000000.
  CHECK(b[23] == 0x3f);
  CHECK(b[22] == 0xf0);
  CHECK(b[24 + 7] == 0x3f);
}

TEST_CASE("binary round trips") {
  const GridSpec g{16, 3, 0.5};
  const JonesField f = synthesize(hops_ket(1.0, 2.0), {2, -1}, g);
  std::stringstream ss;
  write_binary(ss, f);
  const Container c = read_container(ss);
  CHECK(c.grid == g);
  CHECK(c.components == 4);
  const JonesField back = jones_field_from(c);
  CHECK((back.ex == f.ex).all());
  CHECK((back.ey == f.ey).all());
  CHECK_THROWS_AS(scalar_field_from(c), std::runtime_error);

  const ScalarField s = lg_mode(-2, g);
  std::stringstream ss2;
  write_binary(ss2, s);
  CHECK((scalar_field_from(read_container(ss2)).values == s.values).all());

  std::stringstream ss3;
  write_binary(ss3, PhaseMask{g, Eigen::ArrayXXd::Constant(16, 16, 0.25)});
  CHECK(read_container(ss3).components == 1);
}

TEST_CASE("malformed containers are rejected") {
  std::stringstream empty;
  CHECK_THROWS_AS(read_container(empty), std::runtime_error);

  std::stringstream partial;
  write_container(partial, GridSpec{16, 4, 1}, std::vector<double>(100, 0.0));
  CHECK_THROWS_AS(read_container(partial), std::runtime_error);

  std::ostringstream os;
  write_container(os, GridSpec{16, 4, 1}, std::vector<double>(256, 0.0));
  std::stringstream ragged(os.str() + "abc");
  CHECK_THROWS_AS(read_container(ragged), std::runtime_error);
}

TEST_CASE("CSV export") {
  const GridSpec g{16, 4, 1};
  std::ostringstream os;
  write_csv(os, stokes_field(synthesize(hops_ket(0.5, 0.0), {}, g)));
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "x,y,S0,S1,S2,S3");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 256);
}

TEST_CASE("phase PGM") {
  const GridSpec g{16, 4, 1};
  PhaseMask m{g, Eigen::ArrayXXd::Zero(16, 16)};
  m.phase(0, 0) = pi;                 // bottom row after the flip
  m.phase(15, 1) = 2 * pi - 1e-12;    // top row
  std::ostringstream os;
  write_phase_pgm(os, m);
  const std::string s = os.str();
  const std::string header = "P5\n16 16\n65535\n";
  REQUIRE(s.substr(0, header.size()) == header);
  const auto px = bytes_of(s.substr(header.size()));
  REQUIRE(px.size() == 2 * 256);
  auto at = [&](int row, int col) { return (px[2 * (row * 16 + col)] << 8) | px[2 * (row * 16 + col) + 1]; };
  CHECK(at(15, 0) == 32768);
  CHECK(at(0, 1) == 65535);
  CHECK(at(0, 0) == 0);
}

TEST_CASE("label PGM") {
  LabelMap labels = LabelMap::Zero(2, 3);
  labels(1, 2) = 3;
  std::ostringstream os;
  write_label_pgm(os, labels);
  const std::string header = "P5\n3 2\n3\n";
  REQUIRE(os.str().substr(0, header.size()) == header);
  const auto px = bytes_of(os.str().substr(header.size()));
  REQUIRE(px.size() == 6);
  CHECK(px[2] == 3);
  CHECK(px[5] == 0);
}
