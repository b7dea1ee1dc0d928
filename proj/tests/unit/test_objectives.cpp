#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dcsd/error.hpp"
#include "dcsd/objectives.hpp"
#include "dcsd/order_stats.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dcsd;

namespace {

GlobalStats stats(std::vector<double> p) { return GlobalStats::of(p); }

const std::vector<double> kOneToFive{1, 2, 3, 4, 5};

}  // namespace

TEST(GlobalStats, Consistent) {
  const auto g = stats({3, 1, 2, 5, 4});
  EXPECT_EQ(g.n, 5u);
  EXPECT_EQ(g.max_y, 5);
  EXPECT_EQ(g.med_y, 3);
  EXPECT_EQ(g.mean_y, 3);
  EXPECT_EQ(g.smd_y, 6);
  EXPECT_EQ(g.amd_y * 5, g.smd_y);
  EXPECT_THROW(GlobalStats::of(std::vector<double>{}), DataError);
}

TEST(Cov, Examples) {
  GlobalStats g;
  g.n = 4177;
  EXPECT_EQ(cov(4177, g), 1.0);
  EXPECT_EQ(cov(0, g), 0.0);
  EXPECT_NEAR(cov(2271, g), 0.544, 5e-4);
}

TEST(Ipa, Examples) {
  const auto g = stats({0, 0, 10});
  const std::vector<double> all{0, 0, 10};
  EXPECT_EQ(ipa(all, g), 0.0);
  EXPECT_DOUBLE_EQ(ipa(std::vector<double>{10}, g), 1.0 / 3.0);
  EXPECT_EQ(ipa(std::vector<double>{}, g), 0.0);
  const auto flat = stats({2, 2});
  EXPECT_EQ(ipa(std::vector<double>{2}, flat), 0.0);
}

TEST(MdsPlus, Examples) {
  const auto g = stats({1, 2, 3, 4, 5});
  EXPECT_EQ(mds_plus(3, g), 0.0);
  EXPECT_EQ(mds_plus(5, g), 1.0);
  EXPECT_EQ(mds_plus(4, g), 0.5);
  EXPECT_EQ(mds_plus(1, g), 0.0);
}

TEST(Dcc, Examples) {
  const auto g = stats(kOneToFive);
  EXPECT_EQ(dcc(5, 6, g), 0.0);
  EXPECT_EQ(dcc(1, 0, g), 1.0 / 5.0);
  // |Q|/|P| - smd(Q)/smd(P) = 2/5 - 1/6
  EXPECT_DOUBLE_EQ(dcc(2, smd(std::vector<double>{4, 5}), g), 7.0 / 30.0);
  EXPECT_THROW(dcc(1, 0, stats({4, 4})), DegenerateTargetError);
}

TEST(Evaluate, Examples) {
  const Objective f1(ObjectiveSpec::f1(), stats(kOneToFive));
  const Objective f0(ObjectiveSpec::f0(), stats(kOneToFive));
  EXPECT_EQ(f1.evaluate(kOneToFive), 0.0);
  EXPECT_DOUBLE_EQ(f1.evaluate(std::vector<double>{5}), 0.2);
  EXPECT_DOUBLE_EQ(f0.evaluate(std::vector<double>{5}), 0.2);
  EXPECT_EQ(f1.evaluate(std::vector<double>{}), 0.0);
  EXPECT_EQ(f0.evaluate(std::vector<double>{}), 0.0);

  const Objective dcb(ObjectiveSpec::dcb(), stats(kOneToFive));
  // sqrt(7/30) * (4 - 3)
  EXPECT_DOUBLE_EQ(dcb.evaluate(std::vector<double>{4, 5}), std::sqrt(7.0 / 30.0));
  // below the global median the signed form would be negative; clamped here
  EXPECT_EQ(dcb.evaluate(std::vector<double>{1}), 0.0);
}

TEST(Objective, DegenerateGlobals) {
  EXPECT_THROW(Objective(ObjectiveSpec::f1(), stats({2, 2, 2})), DegenerateTargetError);
  EXPECT_THROW(Objective(ObjectiveSpec::dcb(), stats({2, 2, 2})), DegenerateTargetError);

  // max(P) = med(P): f0 and impact still usable, with a warning
  const Objective f0(ObjectiveSpec::f0(), stats({1, 5, 5}));
  ASSERT_EQ(f0.warnings().size(), 1u);
  EXPECT_EQ(f0.evaluate(std::vector<double>{5}), 0.0);
  const Objective impact(ObjectiveSpec::impact(), stats({3, 3}));
  EXPECT_EQ(impact.warnings().size(), 1u);
  EXPECT_EQ(impact.evaluate(std::vector<double>{3}), 0.0);
  const Objective fine(ObjectiveSpec::f0(), stats(kOneToFive));
  EXPECT_TRUE(fine.warnings().empty());
}

TEST(Objective, ParseAndLevels) {
  EXPECT_EQ(parse_objective("f0").level(), 1);
  EXPECT_EQ(parse_objective("impact").level(), 1);
  EXPECT_EQ(parse_objective("f1").level(), 2);
  EXPECT_TRUE(parse_objective("f1").is_dcc_form());
  EXPECT_TRUE(parse_objective("dcb").is_dcc_form());
  EXPECT_FALSE(parse_objective("f0").is_dcc_form());
  EXPECT_THROW(parse_objective("tsc"), UsageError);
}

TEST(Objective, DominatingLevel1) {
  EXPECT_EQ(dominating_level1(ObjectiveSpec::f1())->name, "f0");
  EXPECT_EQ(dominating_level1(ObjectiveSpec::f0())->name, "f0");
  const auto level2 = ObjectiveSpec::custom_level2(
      "neg-amd", [](std::size_t, double, double d, const GlobalStats&) { return -d; },
      DispersionMeasure::amd);
  EXPECT_FALSE(dominating_level1(level2));

  gen::Gen g(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = g.integer_multiset(g.size(2, 40));
    if (smd(p) == 0) continue;
    const auto gs = GlobalStats::of(p);
    const Objective dcb(ObjectiveSpec::dcb(), gs);
    const Objective bound(*dominating_level1(ObjectiveSpec::dcb()), gs);
    std::vector<double> q;
    for (double y : p) {
      if (g.coin()) q.push_back(y);
    }
    EXPECT_LE(dcb.evaluate(q), bound.evaluate(q));
  }
}

TEST(Objective, F1BoundedByF0AndNonNegative) {
  gen::Gen g(32);
  for (int trial = 0; trial < 2000; ++trial) {
    const bool ints = g.coin();
    const auto p = ints ? g.integer_multiset(g.size(2, 50)) : g.real_multiset(g.size(2, 50));
    if (smd(p) == 0) continue;
    const auto gs = GlobalStats::of(p);
    std::vector<double> q;
    for (double y : p) {
      if (g.coin(g.real(0.05, 0.9))) q.push_back(y);
    }
    const Objective f0(ObjectiveSpec::f0(), gs), f1(ObjectiveSpec::f1(), gs),
        dcb(ObjectiveSpec::dcb(), gs), impact(ObjectiveSpec::impact(), gs);
    // equal up to rounding when smd(Q) = 0
    EXPECT_LE(f1.evaluate(q), f0.evaluate(q) * (1 + 1e-15));
    for (const Objective* f : {&f0, &f1, &dcb, &impact}) EXPECT_GE(f->evaluate(q), 0.0);
  }
}

TEST(Objective, AddingTheMedianValueNeverHurtsF1) {
  // Q = {6, 7, 8} in P = 1..9: adding another 7 keeps med and smd fixed and
  // grows the size.
  std::vector<double> p{1, 2, 3, 4, 5, 6, 7, 8, 9};
  const Objective f1(ObjectiveSpec::f1(), GlobalStats::of(p));
  const std::vector<double> q{6, 7, 8};
  const std::vector<double> grown{6, 7, 7, 8};
  EXPECT_GT(f1.evaluate(grown), f1.evaluate(q));

  gen::Gen g(33);
  for (int trial = 0; trial < 500; ++trial) {
    auto base = g.integer_multiset(g.size(3, 30));
    if (smd(base) == 0) continue;
    const Objective f(ObjectiveSpec::f1(), GlobalStats::of(base));
    std::vector<double> q(base.begin() + static_cast<long>(base.size() / 3), base.end());
    const double med = median(q);
    auto more = q;
    more.push_back(med);
    std::sort(more.begin(), more.end());
    ASSERT_EQ(median(more), med);
    EXPECT_GE(f.evaluate(more), f.evaluate(q) - 1e-15);
  }
}

TEST(Objective, AgreesWithQuadOracle) {
  gen::Gen g(34);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = g.coin() ? g.integer_multiset(g.size(2, 12)) : g.real_multiset(g.size(2, 12));
    if (oracle::smd(p) == 0) continue;
    const oracle::Population op(p);
    const auto gs = GlobalStats::of(p);
    const Objective f0(ObjectiveSpec::f0(), gs), f1(ObjectiveSpec::f1(), gs),
        dcb(ObjectiveSpec::dcb(), gs), impact(ObjectiveSpec::impact(), gs);
    // every singleton, then a random subset
    std::vector<std::vector<double>> subsets;
    for (double y : p) subsets.push_back({y});
    std::vector<double> r;
    for (double y : p) {
      if (g.coin()) r.push_back(y);
    }
    subsets.push_back(r);
    for (const auto& q : subsets) {
      const auto check = [&](const Objective& f, oracle::quad expected) {
        const double e = oracle::to_double(expected);
        EXPECT_NEAR(f.evaluate(q), e, 1e-12 * std::max(1.0, std::abs(e))) << f.name();
      };
      check(f0, oracle::f0(q, op));
      check(f1, oracle::f1(q, op));
      check(dcb, oracle::dcb(q, op));
      check(impact, oracle::impact(q, op));
    }
  }
}

TEST(Objective, CustomFunctions) {
  const auto gs = stats(kOneToFive);
  const Objective size_only(
      ObjectiveSpec::custom_level1(
          "size", [](std::size_t k, double, const GlobalStats&) { return static_cast<double>(k); },
          CentralTendency::median),
      gs);
  EXPECT_EQ(size_only.evaluate(std::vector<double>{1, 2, 3}), 3.0);

  const Objective tight(
      ObjectiveSpec::custom_level2(
          "size-minus-mad",
          [](std::size_t k, double, double d, const GlobalStats&) { return static_cast<double>(k) - d; },
          DispersionMeasure::mad),
      gs);
  EXPECT_EQ(tight.evaluate(std::vector<double>{1, 2, 4}), 2.0);

  const Objective plain_dcc(
      ObjectiveSpec::custom_dcc("dcc", [](double d, double, const GlobalStats&) { return d; }), gs);
  EXPECT_DOUBLE_EQ(plain_dcc.evaluate(std::vector<double>{4, 5}), 7.0 / 30.0);
  EXPECT_THROW(Objective(ObjectiveSpec::custom_dcc("none", nullptr), gs), UsageError);
}
