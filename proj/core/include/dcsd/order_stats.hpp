#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dcsd {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// 1-based index of the median of m sorted values: ceil(m/2). The lower middle
// value for even m; values are never averaged.
constexpr std::size_t median_rank(std::size_t m) noexcept { return (m + 1) / 2; }

// Statistics over an ascending slice. All throw InvariantError when empty.
double median(std::span<const double> sorted);
double smd(std::span<const double> sorted);   // sum of |y - med|
double amd(std::span<const double> sorted);   // smd / m
double mad(std::span<const double> sorted);   // median of |y - med|
double rmsd(std::span<const double> sorted);  // sqrt(mean of (y - med)^2)
double mean(std::span<const double> values);

/// Ascending target multiset with cumulative left/right errors
///   e_l(i) = sum_{j<i} (y_i - y_j),  e_r(i) = sum_{j>i} (y_j - y_i),
/// so that deviation sums of any contiguous segment around a centre are O(1).
/// Public indices are 1-based. Tie order among equal values is irrelevant:
/// only values enter the statistics.
class SortedTargets {
 public:
  /// Sorts `targets` (O(m log m)), then builds the error arrays in O(m).
  static SortedTargets build(std::span<const double> targets);
  /// `sorted` must already be ascending; O(m).
  static SortedTargets from_sorted(std::span<const double> sorted);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double value(std::size_t i) const { return values_[i - 1]; }
  double left_error(std::size_t i) const { return left_[i - 1]; }
  double right_error(std::size_t i) const { return right_[i - 1]; }

  double median() const { return value(median_rank(size())); }

  /// sum_{i=a}^{b} |y_z - y_i| for 1 <= a <= z <= b <= m, in O(1):
  ///   e_l(z) - e_l(a) - (a-1)(y_z - y_a) + e_r(z) - e_r(b) - (m-b)(y_b - y_z).
  /// Throws InvariantError for indices out of order or range.
  double segment_smd(std::size_t a, std::size_t z, std::size_t b) const;

 private:
  explicit SortedTargets(std::vector<double> sorted);

  std::vector<double> values_;
  std::vector<double> left_;
  std::vector<double> right_;
};

}  // namespace dcsd
