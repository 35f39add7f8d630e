// Numerical verification suites for the state algebra and the field laws.
// Reports are deterministic for a given seed and grid size.

#pragma once

#include "ghps/polarimetry.hpp"
#include "ghps/state_space.hpp"

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ghps {

enum class Suite { kAlgebra, kEq8, kEq9, kStates, kHologram, kAll };

Suite parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct VerifyOptions {
  std::uint64_t seed = 42;
  int n = 256;
  int random_configs = 100;
  int algebra_samples = 10000;
  S3Convention convention = S3Convention::kRightPositive;
};

/// pass is max_error < tolerance. Discrete checks count mismatches against a
/// tolerance of 0.5.
struct CheckResult {
  std::string name;
  long samples = 0;
  double max_error = 0;
  double tolerance = 0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  int n = 0;
  std::vector<CheckResult> checks;

  bool pass() const;
  nlohmann::json to_json() const;
};

Report run_suite(Suite suite, const VerifyOptions& options = {});

/// Uniform on the three spheres; OAM drawn from a fixed list of pairs.
GhpsConfigd random_config(std::mt19937_64& rng, bool random_oam = true);

SphereCoordd random_coord(std::mt19937_64& rng);

}  // namespace ghps
