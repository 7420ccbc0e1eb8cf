#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "supercontact/dims.hpp"
#include "supercontact/sweeps.hpp"

namespace supercontact {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string details;  // first counterexample; empty on pass
  std::int64_t elapsed_ms = 0;
};

struct Report {
  int l = 0;
  int n = 0;
  long long dim_spo = 0;
  long long dim_quadratic = 0;
  std::vector<CheckResult> checks;
  bool all_passed = false;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  Execution exec = Execution::Parallel;
  /// Random cases per property check.
  int cases = 100;
  /// Random matrices for the preserves-omega / block-condition agreement.
  int matrix_cases = 200;
};

/// Runs every check for one (l, n) in a fixed order: grassmann properties,
/// vector fields, frame relations, contact fields and Lagrange bracket, spo
/// structure, embedding.
Report run_suite(const Dims& dims, const SuiteOptions& options = {});

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const Report& r);

/// Parses a report back; throws nlohmann::json exceptions on schema violations.
Report report_from_json(const nlohmann::json& j);

}  // namespace supercontact
