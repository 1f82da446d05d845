#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "realpart/quadrature.hpp"

namespace realpart::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  bool ok = true;
  double measured = 0.0;   ///< worst deviation (or the reported value)
  double tolerance = 0.0;
  std::string detail;
  bool informational = false;  ///< reported only, never fails a suite
};

/// Suite names accepted by run_suite, in execution order of "all".
const std::vector<std::string>& suite_names();

/// Runs one named suite ("all" runs every suite). Throws DomainError for an
/// unknown name. `seed` drives the randomized samples.
std::vector<CheckResult> run_suite(std::string_view name, const QuadratureConfig& cfg = {}, std::uint64_t seed = 20240607);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace realpart::verify
