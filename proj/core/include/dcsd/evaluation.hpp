#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "dcsd/language.hpp"
#include "dcsd/objectives.hpp"
#include "dcsd/propositions.hpp"

namespace dcsd {

inline constexpr double kDefaultDelta = 0.05;

// sum (y - mean)^2 / (m - 1), two-pass with compensated sums. InvariantError
// for fewer than two values.
double sample_variance(std::span<const double> values);

// Whether the empirical Chebyshev radius exists for m values: m >= 2 and
// m > 1/delta strictly (so the denominator m^2 delta - m is positive).
bool chebyshev_defined(std::size_t m, double delta);

// eps(Q) = sqrt((m^2 - 1) var(Q) / (m^2 delta - m)); nullopt when undefined.
// UsageError unless 0 < delta < 1.
std::optional<double> chebyshev_epsilon(std::span<const double> q, double delta);

// Reference lower bound l(P) = mean(P) - eps(P) of the whole sample.
struct GlobalConfidence {
  double delta = kDefaultDelta;
  double mean = 0.0;
  double variance = 0.0;
  double epsilon = 0.0;
  double lcb = 0.0;

  // DegenerateTargetError when var(P) = 0, DataError when P is too small for
  // its own radius.
  static GlobalConfidence of(std::span<const double> global, double delta = kDefaultDelta);
};

// l(Q) = mean(Q) - eps(Q), falling back to l(P) when eps(Q) is undefined.
double lower_confidence_bound(std::span<const double> q, const GlobalConfidence& global);

// ((l(Q) - l(P)) / sqrt(var(P)))+.
double lcb_score(std::span<const double> q, const GlobalConfidence& global);
double lcb_score(std::span<const double> q, std::span<const double> global,
                 double delta = kDefaultDelta);

struct SubgroupReport {
  std::string selector;
  std::string ids;  // JSON array of proposition ids
  double value = 0.0;
  std::size_t size = 0;
  double coverage = 0.0;
  double median = 0.0;
  double amd = 0.0;
  double mean = 0.0;
  std::optional<double> variance;  // absent for singletons
  std::optional<double> epsilon;
  // Absent when the population itself is too small for a radius.
  std::optional<double> lcb;
  std::optional<double> lcb_score;
};

// Statistics of one selector over `targets` (all rows, in row order).
// InvariantError when the selector's extension is empty.
SubgroupReport make_report(const Conjunction& selector, const PropositionPool& pool,
                           std::span<const double> targets, const Objective& objective,
                           const std::optional<GlobalConfidence>& global,
                           double delta = kDefaultDelta);

}  // namespace dcsd
