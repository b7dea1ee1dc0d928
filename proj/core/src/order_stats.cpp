#include "dcsd/order_stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dcsd/error.hpp"

namespace dcsd {

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

namespace {

void require_nonempty(std::span<const double> values, const char* what) {
  if (values.empty()) throw InvariantError(std::string(what) + " of an empty multiset");
}

}  // namespace

double median(std::span<const double> sorted) {
  require_nonempty(sorted, "median");
  return sorted[median_rank(sorted.size()) - 1];
}

double smd(std::span<const double> sorted) {
  require_nonempty(sorted, "smd");
  const double med = median(sorted);
  CompensatedSum sum;
  for (double y : sorted) sum.add(std::abs(y - med));
  return sum.value();
}

double amd(std::span<const double> sorted) {
  return smd(sorted) / static_cast<double>(sorted.size());
}

double mad(std::span<const double> sorted) {
  require_nonempty(sorted, "mad");
  const double med = median(sorted);
  std::vector<double> deviations;
  deviations.reserve(sorted.size());
  for (double y : sorted) deviations.push_back(std::abs(y - med));
  const auto mid = deviations.begin() + static_cast<std::ptrdiff_t>(median_rank(deviations.size()) - 1);
  std::nth_element(deviations.begin(), mid, deviations.end());
  return *mid;
}

double rmsd(std::span<const double> sorted) {
  require_nonempty(sorted, "rmsd");
  const double med = median(sorted);
  CompensatedSum sum;
  for (double y : sorted) sum.add((y - med) * (y - med));
  return std::sqrt(sum.value() / static_cast<double>(sorted.size()));
}

double mean(std::span<const double> values) {
  require_nonempty(values, "mean");
  CompensatedSum sum;
  for (double y : values) sum.add(y);
  return sum.value() / static_cast<double>(values.size());
}

SortedTargets::SortedTargets(std::vector<double> sorted)
    : values_(std::move(sorted)), left_(values_.size()), right_(values_.size()) {
  const std::size_t m = values_.size();
  if (m == 0) throw InvariantError("sorted targets of an empty multiset");

  // e_l(i) = e_l(i-1) + (i-1)(y_i - y_{i-1}), compensated.
  CompensatedSum left;
  left_[0] = 0.0;
  for (std::size_t i = 1; i < m; ++i) {
    left.add(static_cast<double>(i) * (values_[i] - values_[i - 1]));
    left_[i] = left.value();
  }
  // e_r(i) = e_r(i+1) + (m-i)(y_{i+1} - y_i), compensated.
  CompensatedSum right;
  right_[m - 1] = 0.0;
  for (std::size_t i = m - 1; i-- > 0;) {
    right.add(static_cast<double>(m - 1 - i) * (values_[i + 1] - values_[i]));
    right_[i] = right.value();
  }
}

SortedTargets SortedTargets::build(std::span<const double> targets) {
  std::vector<double> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  return SortedTargets(std::move(sorted));
}

SortedTargets SortedTargets::from_sorted(std::span<const double> sorted) {
  return SortedTargets(std::vector<double>(sorted.begin(), sorted.end()));
}

double SortedTargets::segment_smd(std::size_t a, std::size_t z, std::size_t b) const {
  const std::size_t m = size();
  if (a < 1 || a > z || z > b || b > m) {
    throw InvariantError("segment (" + std::to_string(a) + "," + std::to_string(z) + "," +
                         std::to_string(b) + ") invalid for m=" + std::to_string(m));
  }
  const double yz = value(z);
  const double lower = left_error(z) - left_error(a) - static_cast<double>(a - 1) * (yz - value(a));
  const double upper =
      right_error(z) - right_error(b) - static_cast<double>(m - b) * (value(b) - yz);
  // Each half is a sum of non-negative terms; clamp cancellation noise.
  return std::max(lower, 0.0) + std::max(upper, 0.0);
}

}  // namespace dcsd
