#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "starbundle/serialization.hpp"

namespace starbundle {

/// One verified property. `pass` means max_residual <= threshold, except
/// for checks whose name ends in "_at_least" (negative controls and
/// separation bounds), where it means max_residual >= threshold.
struct CheckResult {
  std::string name;
  double max_residual;
  double threshold;
  bool pass;
};

struct VerificationReport {
  std::string suite;
  std::string example;
  int samples;
  std::uint64_t seed;
  std::map<std::string, double> tolerances;  // check name -> threshold used
  std::vector<CheckResult> checks;
  bool overall;
  std::int64_t duration_ms;
};

struct VerifyOptions {
  int samples = 200;
  std::uint64_t seed = 0;
  /// Threshold overrides keyed by check name.
  std::map<std::string, double> tolerance_overrides;
  /// Additionally evaluate the component-formula variant of the inverse
  /// action and report its discrepancy (action-laws suite).
  bool paper_variant = false;
  /// Negative control: scale sigma by 2 before running (prolongation
  /// suite), which must break the homomorphism checks.
  bool corrupt_rep = false;
};

/// Suites in CLI order; "all" runs each in sequence.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") against a catalog example. Deterministic in
/// (example, suite, samples, seed) apart from duration_ms. Throws
/// UsageError for unknown names.
VerificationReport run_suite(const std::string& example,
                             const std::string& suite,
                             const VerifyOptions& options);

Json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace starbundle
