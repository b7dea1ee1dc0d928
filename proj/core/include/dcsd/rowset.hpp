#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dcsd {

/// Dense bitset over the row indices [0, universe) with a cached cardinality.
class RowSet {
 public:
  RowSet() = default;
  explicit RowSet(std::size_t universe);

  static RowSet full(std::size_t universe);
  static RowSet from_indices(std::size_t universe, std::span<const std::size_t> rows);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool is_full() const noexcept { return count_ == universe_; }

  bool contains(std::size_t row) const;
  void insert(std::size_t row);

  RowSet& operator&=(const RowSet& other);
  friend RowSet operator&(RowSet lhs, const RowSet& rhs) {
    lhs &= rhs;
    return lhs;
  }

  std::size_t intersection_count(const RowSet& other) const;
  bool is_subset_of(const RowSet& other) const;

  // Calls fn(row) for every member in ascending order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int offset = std::countr_zero(bits);
        fn(w * 64 + static_cast<std::size_t>(offset));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const RowSet&, const RowSet&) = default;

 private:
  void check_universe(const RowSet& other) const;

  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dcsd
