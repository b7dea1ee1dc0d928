#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "dcsd/error.hpp"
#include "dcsd/language.hpp"
#include "dcsd/propositions.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dcsd;

namespace {

RowSet rows(std::size_t n, std::initializer_list<std::size_t> members) {
  RowSet s(n);
  for (std::size_t r : members) s.insert(r);
  return s;
}

PropositionPool random_pool(gen::Gen& g, std::size_t rows, std::size_t k,
                            std::vector<std::vector<bool>>* bits = nullptr) {
  std::vector<RowSet> exts;
  if (bits) bits->assign(k, std::vector<bool>(rows, false));
  for (std::size_t i = 0; i < k; ++i) {
    const double density = g.real(0.2, 0.95);
    RowSet e(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      if (g.coin(density)) {
        e.insert(r);
        if (bits) (*bits)[i][r] = true;
      }
    }
    exts.push_back(std::move(e));
  }
  return PropositionPool::from_extensions(rows, std::move(exts));
}

// All selectors reachable from the root, with multiplicity.
std::vector<std::vector<int>> enumerate_ccj(const PropositionPool& pool) {
  std::vector<std::vector<int>> out;
  std::vector<Conjunction> stack{closure(Conjunction::bottom(pool), pool)};
  while (!stack.empty()) {
    Conjunction s = std::move(stack.back());
    stack.pop_back();
    out.push_back(s.props());
    for (auto& c : refine_ccj(s, pool)) stack.push_back(std::move(c));
  }
  return out;
}

}  // namespace

TEST(Extension, BottomSingletonPair) {
  const auto pool = PropositionPool::from_extensions(5, {rows(5, {0, 1, 2}), rows(5, {1, 2, 3})});
  EXPECT_TRUE(extension_of({}, pool).is_full());
  EXPECT_EQ(extension_of(std::vector<int>{1}, pool), pool.extension(1));
  EXPECT_EQ(extension_of(std::vector<int>{1, 2}, pool), rows(5, {1, 2}));
  EXPECT_THROW(extension_of(std::vector<int>{3}, pool), InvariantError);
}

TEST(Conjunction, OfSortsAndDeduplicates) {
  const auto pool = PropositionPool::from_extensions(3, {rows(3, {0, 1}), rows(3, {1, 2}), rows(3, {1})});
  const auto c = Conjunction::of({3, 1, 3}, pool);
  EXPECT_EQ(c.props(), (std::vector<int>{1, 3}));
  EXPECT_EQ(c.extension(), rows(3, {1}));
  EXPECT_EQ(c.describe(pool), "p1 & p3");
  EXPECT_EQ(Conjunction::bottom(pool).describe(pool), "true");
  EXPECT_EQ(ids_json(c), "[1,3]");
  EXPECT_EQ(ids_json(Conjunction::bottom(pool)), "[]");
}

TEST(Closure, Examples) {
  // p1 = {1,2}, p2 = {1,2,3}, p3 = {3}
  const auto pool = PropositionPool::from_extensions(3, {rows(3, {0, 1}), rows(3, {0, 1, 2}), rows(3, {2})});
  const auto c = closure(Conjunction::of({1}, pool), pool);
  EXPECT_EQ(c.props(), (std::vector<int>{1, 2}));
  EXPECT_EQ(closure(c, pool), c);
  EXPECT_TRUE(is_closed(c, pool));
  EXPECT_FALSE(is_closed(Conjunction::of({1}, pool), pool));

  const auto empty = Conjunction::of({1, 3}, pool);
  ASSERT_TRUE(empty.extension().empty());
  EXPECT_EQ(closure(empty, pool).props(), (std::vector<int>{1, 2, 3}));
}

TEST(Closure, Laws) {
  gen::Gen g(21);
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = g.size(1, 10);
    const auto pool = random_pool(g, g.size(1, 40), k);
    std::vector<int> ids;
    for (int i = 1; i <= static_cast<int>(k); ++i) {
      if (g.coin(0.3)) ids.push_back(i);
    }
    const auto s = Conjunction::of(ids, pool);
    const auto c = closure(s, pool);
    EXPECT_EQ(c.extension(), s.extension());
    EXPECT_EQ(closure(c, pool), c);
    for (int id : s.props()) EXPECT_TRUE(c.contains(id));
  }
}

TEST(CoreIndex, Examples) {
  // ext(p2) already equals ext({p2, p5})
  const auto pool = PropositionPool::from_extensions(
      4, {rows(4, {0, 1, 2}), rows(4, {0, 1}), rows(4, {0, 2}), rows(4, {1, 2, 3}), rows(4, {0, 1, 3})});
  EXPECT_EQ(Conjunction::bottom(pool).core_index(), 0);
  EXPECT_EQ(Conjunction::of({2, 5}, pool).core_index(), 2);
  // p1 then p3 shrink strictly
  EXPECT_EQ(Conjunction::of({1, 3}, pool).core_index(), 3);
  // a conjunction selecting every row has core index 0
  const auto full = PropositionPool::from_extensions(2, {RowSet::full(2)});
  EXPECT_EQ(Conjunction::of({1}, full).core_index(), 0);
}

TEST(CoreIndex, MatchesPrefixScan) {
  gen::Gen g(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = g.size(1, 10);
    const auto pool = random_pool(g, g.size(1, 30), k);
    std::vector<int> ids;
    for (int i = 1; i <= static_cast<int>(k); ++i) {
      if (g.coin(0.4)) ids.push_back(i);
    }
    const auto s = Conjunction::of(ids, pool);
    int expected = 0;
    if (!s.extension().is_full()) {
      for (std::size_t len = 1; len <= ids.size(); ++len) {
        const std::vector<int> prefix(ids.begin(), ids.begin() + static_cast<long>(len));
        if (extension_of(prefix, pool) == s.extension()) {
          expected = ids[len - 1];
          break;
        }
      }
    }
    EXPECT_EQ(s.core_index(), expected);
  }
}

TEST(RefineCnj, Examples) {
  const auto pool = PropositionPool::from_extensions(
      3, {rows(3, {0, 1}), rows(3, {1, 2}), rows(3, {0, 2})});
  const auto root = refine_cnj(Conjunction::bottom(pool), pool);
  ASSERT_EQ(root.size(), 3u);
  EXPECT_EQ(root[0].props(), (std::vector<int>{1}));
  EXPECT_EQ(root[2].props(), (std::vector<int>{3}));
  const auto two = refine_cnj(Conjunction::of({2}, pool), pool);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].props(), (std::vector<int>{2, 3}));
  EXPECT_TRUE(refine_cnj(Conjunction::of({3}, pool), pool).empty());
}

TEST(RefineCnj, EnumeratesEveryConjunctionOnce) {
  gen::Gen g(8);
  for (std::size_t k = 0; k <= 12; ++k) {
    // Full extensions keep every node expandable.
    std::vector<RowSet> exts(k, RowSet::full(4));
    const auto pool = PropositionPool::from_extensions(4, exts);
    std::set<std::vector<int>> seen;
    std::size_t visits = 0;
    std::vector<Conjunction> stack{Conjunction::bottom(pool)};
    while (!stack.empty()) {
      Conjunction s = std::move(stack.back());
      stack.pop_back();
      ++visits;
      seen.insert(s.props());
      for (auto& c : refine_cnj(s, pool)) stack.push_back(std::move(c));
    }
    EXPECT_EQ(visits, std::size_t{1} << k);
    EXPECT_EQ(seen.size(), std::size_t{1} << k);
  }
}

TEST(RefineCcj, RequiresClosedInput) {
  const auto pool = PropositionPool::from_extensions(3, {rows(3, {0, 1}), rows(3, {0, 1, 2})});
  EXPECT_THROW(refine_ccj(Conjunction::of({1}, pool), pool), InvariantError);
}

TEST(RefineCcj, RootOfThreePropositionPool) {
  // p1 = {1,2}, p2 = {2,3}, p3 = {1,2,3}; row 4 satisfies nothing
  const auto pool = PropositionPool::from_extensions(
      4, {rows(4, {0, 1}), rows(4, {1, 2}), rows(4, {0, 1, 2})});
  const auto root = closure(Conjunction::bottom(pool), pool);
  EXPECT_TRUE(root.is_bottom());
  const auto children = refine_ccj(root, pool);
  // closure({p1}) = {p1,p3}, closure({p2}) = {p2,p3}, closure({p3}) = {p3}
  std::vector<std::vector<int>> got;
  for (const auto& c : children) got.push_back(c.props());
  EXPECT_EQ(got, (std::vector<std::vector<int>>{{1, 3}, {2, 3}, {3}}));
}

TEST(RefineCcj, PrefixViolationGivesNothing) {
  // sigma = {p2} (closed, core index 2). Its only candidate p3 narrows the
  // extension to {1,2}, which p1 covers: p1 would enter below 3.
  const auto pool = PropositionPool::from_extensions(
      4, {rows(4, {0, 1}), rows(4, {0, 1, 2}), rows(4, {0, 1, 3})});
  const auto s = closure(Conjunction::of({2}, pool), pool);
  ASSERT_EQ(s.props(), (std::vector<int>{2}));
  EXPECT_EQ(s.core_index(), 2);
  EXPECT_TRUE(refine_ccj(s, pool).empty());
}

TEST(RefineCcj, FourRowFourPropositionTreeVisitsEachExtensionOnce) {
  const auto pool = PropositionPool::from_extensions(
      4, {rows(4, {0, 1, 2}), rows(4, {1, 2, 3}), rows(4, {0, 3}), rows(4, {2})});
  const auto visited = enumerate_ccj(pool);
  std::set<std::vector<int>> distinct(visited.begin(), visited.end());
  EXPECT_EQ(distinct.size(), visited.size());
  std::set<std::vector<std::size_t>> extensions;
  for (const auto& ids : visited) extensions.insert(extension_of(ids, pool).indices());
  EXPECT_EQ(extensions.size(), visited.size());

  std::vector<std::vector<bool>> bits(4, std::vector<bool>(4, false));
  for (int i = 1; i <= 4; ++i) pool.extension(i).for_each([&](std::size_t r) { bits[i - 1][r] = true; });
  EXPECT_EQ(distinct, oracle::closed_sets(bits, 4));
}

TEST(RefineCcj, MonotoneAndClosed) {
  gen::Gen g(12);
  for (int t = 0; t < 100; ++t) {
    const auto pool = random_pool(g, g.size(1, 30), g.size(1, 9));
    std::vector<Conjunction> stack{closure(Conjunction::bottom(pool), pool)};
    while (!stack.empty()) {
      Conjunction s = std::move(stack.back());
      stack.pop_back();
      for (auto& c : refine_ccj(s, pool)) {
        EXPECT_TRUE(c.extension().is_subset_of(s.extension()));
        EXPECT_TRUE(is_closed(c, pool));
        EXPECT_EQ(c.extension(), extension_of(c.props(), pool));
        stack.push_back(std::move(c));
      }
    }
  }
}

TEST(RefineCcj, NonRedundantAndComplete) {
  gen::Gen g(99);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = g.size(1, 30);
    const std::size_t k = g.size(0, 12);
    std::vector<std::vector<bool>> bits;
    const auto pool = random_pool(g, n, k, &bits);
    const auto visited = enumerate_ccj(pool);
    const std::set<std::vector<int>> distinct(visited.begin(), visited.end());
    EXPECT_EQ(distinct.size(), visited.size()) << "a closed set was reached twice";
    EXPECT_EQ(distinct, oracle::closed_sets(bits, n));
  }
}
