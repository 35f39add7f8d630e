#include <doctest.h>

#include "ghps/verify.hpp"

using namespace ghps;

namespace {

const CheckResult* find(const Report& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("algebra suite passes well inside tolerance") {
  VerifyOptions opt;
  opt.algebra_samples = 2000;
  const Report r = run_suite(Suite::kAlgebra, opt);
  CHECK(r.pass());
  for (const auto& c : r.checks) {
    CHECK_MESSAGE(c.max_error < 1e-12, c.name);
    CHECK(c.samples > 0);
  }
}

TEST_CASE("eq8 suite on a small grid") {
  VerifyOptions opt;
  opt.n = 64;
  opt.random_configs = 20;
  const Report r = run_suite(Suite::kEq8, opt);
  CHECK(r.pass());
  CHECK(r.n == 64);
}

TEST_CASE("flipping the S3 sign breaks the state C placement check") {
  VerifyOptions opt;
  opt.n = 64;
  const Report good = run_suite(Suite::kStates, opt);
  CHECK(good.pass());

  opt.convention = S3Convention::kRightNegative;
  const Report bad = run_suite(Suite::kStates, opt);
  CHECK_FALSE(bad.pass());
  const CheckResult* placement = find(bad, "state C equator: circular");
  REQUIRE(placement != nullptr);
  CHECK_FALSE(placement->pass);
  CHECK(find(good, "state C equator: circular")->pass);
}

TEST_CASE("reports are deterministic") {
  VerifyOptions opt;
  opt.n = 32;
  opt.random_configs = 5;
  opt.algebra_samples = 500;
  for (Suite s : {Suite::kAlgebra, Suite::kEq9}) {
    CHECK(run_suite(s, opt).to_json().dump() == run_suite(s, opt).to_json().dump());
  }
  VerifyOptions other = opt;
  other.seed = 7;
  CHECK(run_suite(Suite::kAlgebra, opt).to_json().dump() != run_suite(Suite::kAlgebra, other).to_json().dump());
}

TEST_CASE("report JSON shape") {
  VerifyOptions opt;
  opt.algebra_samples = 100;
  const auto j = run_suite(Suite::kAlgebra, opt).to_json();
  CHECK(j.at("suite") == "algebra");
  CHECK(j.at("seed") == 42);
  CHECK(j.at("pass") == true);
  REQUIRE(j.at("checks").is_array());
  const auto& c = j.at("checks").at(0);
  for (const char* key : {"name", "samples", "max_error", "tolerance", "pass"}) CHECK(c.contains(key));
}

TEST_CASE("suite names") {
  CHECK(parse_suite("eq9") == Suite::kEq9);
  CHECK(suite_name(Suite::kHologram) == "hologram");
  CHECK_THROWS_AS(parse_suite("everything"), std::invalid_argument);
}
