#include "dcsd/rowset.hpp"

#include <string>

#include "dcsd/error.hpp"

namespace dcsd {

namespace {

constexpr std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

RowSet::RowSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

RowSet RowSet::full(std::size_t universe) {
  RowSet set(universe);
  for (auto& w : set.words_) w = ~std::uint64_t{0};
  if (const std::size_t tail = universe % 64; tail != 0) {
    set.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  set.count_ = universe;
  return set;
}

RowSet RowSet::from_indices(std::size_t universe, std::span<const std::size_t> rows) {
  RowSet set(universe);
  for (std::size_t r : rows) set.insert(r);
  return set;
}

bool RowSet::contains(std::size_t row) const {
  if (row >= universe_) return false;
  return (words_[row / 64] >> (row % 64)) & 1U;
}

void RowSet::insert(std::size_t row) {
  if (row >= universe_) {
    throw InvariantError("row " + std::to_string(row) + " outside universe of " +
                         std::to_string(universe_));
  }
  std::uint64_t& w = words_[row / 64];
  const std::uint64_t bit = std::uint64_t{1} << (row % 64);
  if ((w & bit) == 0) {
    w |= bit;
    ++count_;
  }
}

void RowSet::check_universe(const RowSet& other) const {
  if (other.universe_ != universe_) {
    throw InvariantError("row sets over different universes");
  }
}

RowSet& RowSet::operator&=(const RowSet& other) {
  check_universe(other);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= other.words_[i];
    total += static_cast<std::size_t>(std::popcount(words_[i]));
  }
  count_ = total;
  return *this;
}

std::size_t RowSet::intersection_count(const RowSet& other) const {
  check_universe(other);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

bool RowSet::is_subset_of(const RowSet& other) const {
  check_universe(other);
  if (count_ > other.count_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> RowSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count_);
  for_each([&](std::size_t r) { out.push_back(r); });
  return out;
}

std::size_t RowSet::hash() const noexcept {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ universe_);
}

}  // namespace dcsd
