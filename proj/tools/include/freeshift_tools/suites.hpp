#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freeshift/shiftspace.hpp"

namespace freeshift::tools {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> witnesses;
  double seconds = 0.0;
};

struct SuiteReport {
  std::string suite;
  // Sorted by check name.
  std::vector<CheckResult> checks;

  bool pass() const;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  Limits limits;
};

const std::vector<std::string>& suite_names();

// theorem-1 | theorem-2 | free-extension | zline. Throws InputError for any
// other name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

// One PROPERTY block per check and a closing SUITE line. Timings are left
// out unless requested so that reports are reproducible byte for byte.
std::string format_suite(const SuiteReport& report, bool with_times = false);

}  // namespace freeshift::tools
