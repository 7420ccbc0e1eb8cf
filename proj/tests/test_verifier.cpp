#include "doctest.h"
#include "helpers.hpp"
#include "supercontact/verifier.hpp"

using namespace testing;

namespace {

nlohmann::json without_timing(nlohmann::json j) {
  for (auto& c : j.at("checks")) c.erase("elapsedMs");
  return j;
}

}  // namespace

TEST_CASE("suite passes for small dimensions") {
  for (auto [l, n, dim] : {std::tuple{0, 1, 5}, std::tuple{1, 1, 14}, std::tuple{1, 2, 19}}) {
    const Report r = run_suite(Dims::make(l, n), {.cases = 30, .matrix_cases = 40});
    CHECK(r.all_passed);
    CHECK(r.dim_spo == dim);
    CHECK(r.dim_quadratic == dim);
    CHECK(r.checks.size() == 29);
    for (const auto& c : r.checks) {
      INFO(c.name << ": " << c.details);
      CHECK(c.passed);
      CHECK(c.details.empty());
    }
  }
}

TEST_CASE("check names are stable and ordered") {
  const Report r = run_suite(Dims::make(0, 1), {.cases = 5, .matrix_cases = 5});
  REQUIRE(r.checks.size() == 29);
  CHECK(r.checks.front().name == "grassmann.supercommutativity");
  CHECK(r.checks.back().name == "embedding.scalar_invariance");
}

TEST_CASE("reports are deterministic and round trip through JSON") {
  const Dims d = Dims::make(1, 2);
  const SuiteOptions serial{.seed = 4, .exec = Execution::Serial, .cases = 20, .matrix_cases = 20};
  SuiteOptions parallel = serial;
  parallel.exec = Execution::Parallel;
  const Report a = run_suite(d, serial);
  const Report b = run_suite(d, parallel);
  CHECK(without_timing(to_json(a)) == without_timing(to_json(b)));

  const nlohmann::json j = to_json(a);
  CHECK(j.at("l") == 1);
  CHECK(j.at("dimSpo") == 19);
  CHECK(j.at("allPassed") == true);
  CHECK(j.at("checks")[0].contains("elapsedMs"));
  const Report back = report_from_json(nlohmann::json::parse(j.dump()));
  CHECK(to_json(back) == j);
  CHECK_THROWS(report_from_json(nlohmann::json{{"l", 1}}));
}

TEST_CASE("other seeds pass too") {
  for (std::uint64_t seed : {1ULL, 99ULL, 123456789ULL}) {
    const Report r = run_suite(Dims::make(1, 2), {.seed = seed, .cases = 15, .matrix_cases = 15});
    CHECK(r.all_passed);
  }
}
