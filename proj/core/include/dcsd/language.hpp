#pragma once

#include <span>
#include <string>
#include <vector>

#include "dcsd/propositions.hpp"
#include "dcsd/rowset.hpp"

namespace dcsd {

/// A conjunction of base propositions, identified with its ascending list of
/// proposition ids. The extension and the core index are cached on
/// construction; the empty conjunction (bottom) selects every row.
class Conjunction {
 public:
  /// The empty conjunction over `pool`.
  static Conjunction bottom(const PropositionPool& pool);

  /// Conjunction of the given ids (any order, duplicates allowed).
  static Conjunction of(std::vector<int> ids, const PropositionPool& pool);

  const std::vector<int>& props() const noexcept { return props_; }
  const RowSet& extension() const noexcept { return extension_; }
  /// Smallest i such that the propositions with id <= i already produce the
  /// full extension; 0 when the extension is the whole row set.
  int core_index() const noexcept { return core_index_; }

  std::size_t length() const noexcept { return props_.size(); }
  bool is_bottom() const noexcept { return props_.empty(); }
  bool contains(int id) const;
  int max_id() const noexcept { return props_.empty() ? 0 : props_.back(); }

  /// "a <= 2 & b = x"; bottom renders as "true".
  std::string describe(const PropositionPool& pool) const;

  friend bool operator==(const Conjunction& a, const Conjunction& b) { return a.props_ == b.props_; }

 private:
  Conjunction(std::vector<int> props, RowSet extension, int core_index)
      : props_(std::move(props)), extension_(std::move(extension)), core_index_(core_index) {}

  friend Conjunction closure(const Conjunction&, const PropositionPool&);
  friend std::vector<Conjunction> refine_cnj(const Conjunction&, const PropositionPool&);
  friend std::vector<Conjunction> refine_ccj(const Conjunction&, const PropositionPool&);

  std::vector<int> props_;
  RowSet extension_;
  int core_index_ = 0;
};

/// Intersection of the members' extensions; the full row set for no ids.
RowSet extension_of(std::span<const int> ids, const PropositionPool& pool);

/// Minimal prefix length preserving `extension` for ascending `ids`.
int core_index(std::span<const int> ids, const RowSet& extension, const PropositionPool& pool);

/// Conjunction of every proposition whose extension contains ext(sigma).
Conjunction closure(const Conjunction& sigma, const PropositionPool& pool);

bool is_closed(const Conjunction& sigma, const PropositionPool& pool);

/// sigma & p_i for every id i above the largest id in sigma. Empty when
/// ext(sigma) is empty.
std::vector<Conjunction> refine_cnj(const Conjunction& sigma, const PropositionPool& pool);

/// Prefix-preserving closure extensions of a closed conjunction: for every id
/// j > core_index(sigma) not in sigma, phi = closure(sigma & p_j) is kept when
/// phi and sigma agree on all ids below j. Starting from closure(bottom) this
/// reaches every closed conjunction exactly once. Throws InvariantError when
/// sigma is not closed. Empty when ext(sigma) is empty.
std::vector<Conjunction> refine_ccj(const Conjunction& sigma, const PropositionPool& pool);

/// Serialization of the ids as a JSON array, e.g. "[1,4,7]".
std::string ids_json(const Conjunction& sigma);

}  // namespace dcsd
