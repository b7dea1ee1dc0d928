#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "dcsd/objectives.hpp"
#include "dcsd/order_stats.hpp"

namespace dcsd {

inline constexpr std::size_t kDefaultGeneralCap = 5000;
inline constexpr std::size_t kDefaultBruteForceCap = 20;
// Maximal change of the optimal consecutive-set size between neighbouring
// median indices for dcc-based objectives.
inline constexpr std::size_t kWindowRadius = 3;

// Largest size of a consecutive sub-multiset of m sorted values whose median
// sits at 1-based index z: min(2z, 2(m-z)+1).
constexpr std::size_t max_consecutive_size(std::size_t z, std::size_t m) noexcept {
  return std::min(2 * z, 2 * (m - z) + 1);
}

// Q^k_z = {y_a, ..., y_b} with a = z - floor((k-1)/2), b = z + ceil((k-1)/2):
// the k consecutive values with median index z.
constexpr std::size_t consecutive_first(std::size_t z, std::size_t k) noexcept {
  return z - (k - 1) / 2;
}
constexpr std::size_t consecutive_last(std::size_t z, std::size_t k) noexcept { return z + k / 2; }

/// Tight estimator for level-1 objectives: the best of the m top-sequence sets
/// {y_{m-i+1}, ..., y_m}, in O(m). Throws UsageError for other objectives.
double top_sequence_estimate(const Objective& objective, std::span<const double> sorted);

/// Tight estimator for level-2 objectives by scanning every consecutive set
/// Q^k_z (O(m^2) evaluations; O(1) dispersion for smd/amd, O(k) for mad/rmsd).
/// Throws UsageError for level-1 objectives or when m exceeds `cap`.
double median_sequence_estimate_general(const Objective& objective,
                                        std::span<const double> sorted,
                                        std::size_t cap = kDefaultGeneralCap);

// One element of the median sequence as produced by the linear algorithm.
struct MedianSequenceState {
  std::size_t z = 0;       // median index (1-based)
  std::size_t k_star = 0;  // smallest dcc-maximizing size within the window
  std::size_t k_lo = 0;    // searched size window [k_lo, k_hi]
  std::size_t k_hi = 0;
  double value = 0.0;      // f(Q^{k_star}_z)
};

/// The median sequence for a dcc-form objective, z = m down to 1. For each z
/// only sizes within `window_radius` of the previous optimum are scored, so
/// the whole sequence costs O(m) after the error arrays are built. The
/// maximizer is chosen on the dispersion-corrected coverage itself (before
/// clamping), smallest size first on exact ties.
std::vector<MedianSequenceState> median_sequence_linear(const Objective& objective,
                                                        const SortedTargets& targets,
                                                        std::size_t window_radius = kWindowRadius);

/// Tight estimator for objectives g(dcc(Q), med(Q)) in linear time. Throws
/// UsageError when the objective is not of that form.
double median_sequence_estimate_linear(const Objective& objective, std::span<const double> sorted);
double median_sequence_estimate_linear(const Objective& objective, const SortedTargets& targets,
                                       std::size_t window_radius = kWindowRadius);

/// max{f(R) : R subset of Q} by enumerating all 2^m subsets. Oracle use only;
/// throws UsageError when m exceeds `cap`.
double brute_force_estimate(const Objective& objective, std::span<const double> sorted,
                            std::size_t cap = kDefaultBruteForceCap);

enum class EstimatorKind { top_sequence, median_general, median_linear };

std::string_view to_string(EstimatorKind kind);
// "top" | "general" | "linear"; throws UsageError otherwise.
EstimatorKind parse_estimator(std::string_view name);

// Throws UsageError unless `kind` is valid for `objective`.
void check_admissible(EstimatorKind kind, const Objective& objective);

double estimate(EstimatorKind kind, const Objective& objective, std::span<const double> sorted);

}  // namespace dcsd
