#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dcsd/estimators.hpp"

namespace dcsd {

struct CheckOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::size_t max_size = 12;  // largest random multiset for brute-force suites
  std::size_t max_props = 8;  // largest random pool for the enumeration suite
  // Radius handed to the linear estimator; anything below the default is a
  // deliberately broken build used to see the suites fail.
  std::size_t window_radius = kWindowRadius;
};

struct CheckResult {
  std::string name;
  std::size_t trials = 0;
  bool passed = true;
  std::string counterexample;  // first failing instance, empty on success
};

// Randomized comparisons against brute force. Each suite stops at the first
// failure and reports it.
CheckResult check_segment_identity(const CheckOptions& options);
CheckResult check_median_sequence(const CheckOptions& options);
CheckResult check_top_sequence(const CheckOptions& options);
CheckResult check_window(const CheckOptions& options);
CheckResult check_closed_enumeration(const CheckOptions& options);

std::vector<CheckResult> run_checks(const CheckOptions& options);

}  // namespace dcsd
