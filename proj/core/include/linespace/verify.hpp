#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linespace/space.hpp"

// The verification suites behind `linespace verify`: every structural
// identity of the library, run over seeded random samples, reporting the
// worst residual against its tolerance.  Reports with the same seed and
// configuration are byte-identical.

namespace linespace {

struct RunConfig {
  std::optional<SpaceKind> space;  // empty = both
  std::uint64_t seed = 42;
  std::string suite;               // empty = all
  int samples = 0;                 // 0 = per-suite default
  std::map<std::string, double> tolerances;  // overrides by suite name
};

struct SuiteResult {
  std::string name;
  std::string space;
  long samples;
  double max_residual;
  double tolerance;
  bool pass;
};

struct VerifyReport {
  std::uint64_t seed;
  std::vector<SuiteResult> suites;
  bool all_pass;

  // Versioned, key-ordered JSON; no timestamps, 17-digit numbers.
  std::string to_json() const;
};

// Names accepted by RunConfig::suite.
std::vector<std::string> verify_suite_names();

VerifyReport run_verify(const RunConfig& config);

}  // namespace linespace
