#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dcsd/dataset.hpp"
#include "dcsd/rowset.hpp"

namespace dcsd {

enum class Relation { less_equal, greater_equal, equal, less, greater };

std::string_view to_string(Relation r);

// A Boolean base proposition over one attribute. Propositions built by hand
// for abstract pools carry no attribute and describe themselves as "p<id>".
struct Proposition {
  static constexpr std::size_t kNoAttribute = static_cast<std::size_t>(-1);

  int id = 0;  // 1-based position in the pool
  std::size_t attribute = kNoAttribute;
  Relation relation = Relation::equal;
  std::variant<double, std::string> threshold;
  RowSet extension;
  std::string label;

  // Re-evaluates the predicate on one row; missing values never satisfy it.
  bool holds(const DataTable& table, std::size_t row) const;
};

enum class Binning { equal_frequency, equal_width };

std::string_view to_string(Binning b);

// Ordered propositions with precomputed extensions. Ids are contiguous from 1
// and the order defines lexicographic prefixes for closed enumeration.
class PropositionPool {
 public:
  PropositionPool(std::size_t rows, std::vector<Proposition> propositions);

  // Abstract pool: proposition i+1 has extension `extensions[i]`.
  static PropositionPool from_extensions(std::size_t rows, std::vector<RowSet> extensions);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return props_.size(); }
  bool empty() const noexcept { return props_.empty(); }

  const Proposition& at(int id) const;
  const RowSet& extension(int id) const { return at(id).extension; }
  std::span<const Proposition> propositions() const noexcept { return props_; }

 private:
  std::size_t rows_ = 0;
  std::vector<Proposition> props_;
};

// Materializes the base propositions of a table:
//  numeric:     x <= t and x >= t' per cutpoint t, t' the next observed value
//               above t;
//  categorical: x = c per distinct value;
//  ordinal:     x < l and x > l per level.
// Propositions with an empty or full extension are dropped. Order is by
// attribute index, then relation, then threshold.
PropositionPool build_propositions(const DataTable& table, int cuts,
                                   Binning strategy = Binning::equal_frequency);

// Cutpoints (observed values) for one numeric column, ascending and distinct.
//  equal-frequency: the order statistic at 1-based rank ceil(j*n/(cuts+1)),
//                   j = 1..cuts, over the n present values;
//  equal-width:     the largest observed value <= min + j*(max-min)/(cuts+1).
std::vector<double> numeric_cutpoints(std::span<const double> present_values, int cuts,
                                      Binning strategy);

}  // namespace dcsd
