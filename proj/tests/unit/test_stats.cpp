#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dcsd/error.hpp"
#include "dcsd/order_stats.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dcsd;

namespace {

std::vector<double> left_errors(const SortedTargets& t) {
  std::vector<double> out;
  for (std::size_t i = 1; i <= t.size(); ++i) out.push_back(t.left_error(i));
  return out;
}

std::vector<double> right_errors(const SortedTargets& t) {
  std::vector<double> out;
  for (std::size_t i = 1; i <= t.size(); ++i) out.push_back(t.right_error(i));
  return out;
}

double direct_segment(const std::vector<double>& y, std::size_t a, std::size_t z, std::size_t b) {
  oracle::quad s = 0;
  for (std::size_t i = a; i <= b; ++i) s += std::abs(oracle::quad(y[z - 1]) - y[i - 1]);
  return oracle::to_double(s);
}

}  // namespace

TEST(SortedTargets, ErrorArraysExamples) {
  const auto t = SortedTargets::build(std::vector<double>{4, 1, 2});
  EXPECT_EQ(std::vector<double>(t.values().begin(), t.values().end()), (std::vector<double>{1, 2, 4}));
  EXPECT_EQ(left_errors(t), (std::vector<double>{0, 1, 5}));
  EXPECT_EQ(right_errors(t), (std::vector<double>{4, 2, 0}));

  const auto c = SortedTargets::build(std::vector<double>{3, 3, 3});
  EXPECT_EQ(left_errors(c), (std::vector<double>{0, 0, 0}));
  EXPECT_EQ(right_errors(c), (std::vector<double>{0, 0, 0}));

  const auto one = SortedTargets::build(std::vector<double>{7});
  EXPECT_EQ(left_errors(one), (std::vector<double>{0}));
  EXPECT_EQ(right_errors(one), (std::vector<double>{0}));
  EXPECT_THROW(SortedTargets::build(std::vector<double>{}), InvariantError);
}

TEST(SortedTargets, ErrorArraysMatchDirectSums) {
  gen::Gen g(1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto y = g.integer_multiset(g.size(1, 60));
    const auto t = SortedTargets::from_sorted(y);
    double prev_l = -1, prev_r = -1;
    for (std::size_t i = 1; i <= y.size(); ++i) {
      double l = 0, r = 0;
      for (std::size_t j = 1; j < i; ++j) l += y[i - 1] - y[j - 1];
      for (std::size_t j = i + 1; j <= y.size(); ++j) r += y[j - 1] - y[i - 1];
      EXPECT_EQ(t.left_error(i), l);
      EXPECT_EQ(t.right_error(i), r);
      EXPECT_GE(t.left_error(i), prev_l);
      prev_l = t.left_error(i);
    }
    for (std::size_t i = y.size(); i >= 1; --i) {
      EXPECT_GE(t.right_error(i), prev_r);
      prev_r = t.right_error(i);
    }
  }
}

TEST(Median, LowerMedianRule) {
  EXPECT_EQ(median(std::vector<double>{1, 2, 3, 4}), 2);
  EXPECT_EQ(median(std::vector<double>{7}), 7);
  EXPECT_EQ(median(std::vector<double>{1, 1, 9}), 1);
  EXPECT_EQ(median_rank(4), 2u);
  EXPECT_EQ(median_rank(5), 3u);
  EXPECT_THROW(median(std::vector<double>{}), InvariantError);
  EXPECT_EQ(SortedTargets::build(std::vector<double>{4, 3, 2, 1}).median(), 2);
}

TEST(Dispersion, Examples) {
  const std::vector<double> q{1, 2, 4};
  EXPECT_EQ(smd(q), 3);
  EXPECT_EQ(amd(q), 1.0);
  EXPECT_EQ(mad(q), 1);
  EXPECT_DOUBLE_EQ(rmsd(q), std::sqrt(5.0 / 3.0));
  EXPECT_EQ(smd(std::vector<double>{5, 5}), 0);
  EXPECT_EQ(smd(std::vector<double>{0, 10}), 10);
  const std::vector<double> c{2, 2, 2, 2};
  EXPECT_EQ(amd(c), 0);
  EXPECT_EQ(mad(c), 0);
  EXPECT_EQ(rmsd(c), 0);
  EXPECT_THROW(smd(std::vector<double>{}), InvariantError);
  EXPECT_THROW(mean(std::vector<double>{}), InvariantError);
}

TEST(Dispersion, AmdTimesSizeIsSmd) {
  gen::Gen g(2);
  for (int trial = 0; trial < 500; ++trial) {
    const auto q = g.integer_multiset(g.size(1, 100));
    EXPECT_DOUBLE_EQ(amd(q) * static_cast<double>(q.size()), smd(q));
  }
}

TEST(Dispersion, CompensatedSumsMatchQuadOracle) {
  gen::Gen g(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto q = g.real_multiset(g.size(1000, 20000));
    // large offset stresses cancellation
    for (double& y : q) y += 1e6;
    const double expected = oracle::to_double(oracle::smd(q));
    EXPECT_NEAR(smd(q), expected, 1e-9 * std::max(1.0, std::abs(expected)));
    const double mu = oracle::to_double(oracle::mean(q));
    EXPECT_NEAR(mean(q), mu, 1e-12 * std::abs(mu));
  }
}

TEST(Dispersion, MonotoneInDeviations) {
  // Y and Z share the median; every deviation of Y is at most the
  // corresponding deviation of Z.
  gen::Gen g(4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = g.size(1, 30);
    const double med = g.real(-10, 10);
    std::vector<double> y, z;
    const std::size_t mid = (m + 1) / 2;
    for (std::size_t i = 1; i <= m; ++i) {
      const double d = g.real(0, 5);
      const double extra = g.real(0, 5);
      const double sign = i < mid ? -1.0 : 1.0;
      y.push_back(i == mid ? med : med + sign * d);
      z.push_back(i == mid ? med : med + sign * (d + extra));
    }
    y = oracle::sorted(y);
    z = oracle::sorted(z);
    ASSERT_EQ(median(y), med);
    ASSERT_EQ(median(z), med);
    EXPECT_LE(amd(y), amd(z) + 1e-12);
    EXPECT_LE(mad(y), mad(z) + 1e-12);
    EXPECT_LE(rmsd(y), rmsd(z) + 1e-12);
  }
}

TEST(SegmentSmd, Examples) {
  const auto t = SortedTargets::from_sorted(std::vector<double>{1, 2, 4, 7, 9});
  EXPECT_EQ(t.segment_smd(2, 3, 4), 5);
  EXPECT_EQ(t.segment_smd(3, 3, 3), 0);
  EXPECT_EQ(t.segment_smd(1, 3, 5), smd(t.values()));
  EXPECT_THROW(t.segment_smd(3, 2, 4), InvariantError);
  EXPECT_THROW(t.segment_smd(0, 1, 2), InvariantError);
  EXPECT_THROW(t.segment_smd(1, 2, 6), InvariantError);
}

TEST(SegmentSmd, ExactOnIntegers) {
  gen::Gen g(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto y = g.integer_multiset(g.size(1, 200));
    const auto t = SortedTargets::from_sorted(y);
    for (int probe = 0; probe < 200; ++probe) {
      const std::size_t z = g.size(1, y.size());
      const std::size_t a = g.size(1, z);
      const std::size_t b = g.size(z, y.size());
      ASSERT_EQ(t.segment_smd(a, z, b), direct_segment(y, a, z, b)) << a << ' ' << z << ' ' << b;
    }
  }
}

TEST(SegmentSmd, CloseOnReals) {
  gen::Gen g(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto y = g.real_multiset(g.size(1, 200));
    const auto t = SortedTargets::from_sorted(y);
    const double range = y.back() - y.front();
    for (int probe = 0; probe < 200; ++probe) {
      const std::size_t z = g.size(1, y.size());
      const std::size_t a = g.size(1, z);
      const std::size_t b = g.size(z, y.size());
      const double expected = direct_segment(y, a, z, b);
      // Cancellation in the prefix differences is bounded by the whole
      // array's error mass, hence the range-scaled floor.
      const double tol = 1e-9 * std::max(std::abs(expected), range * static_cast<double>(y.size()) * 1e-3);
      ASSERT_NEAR(t.segment_smd(a, z, b), expected, tol);
    }
  }
}
