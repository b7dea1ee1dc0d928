#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dcsd/dataset.hpp"
#include "dcsd/estimators.hpp"
#include "dcsd/language.hpp"
#include "dcsd/objectives.hpp"
#include "dcsd/propositions.hpp"

namespace dcsd {

enum class Language { cnj, ccj };

std::string_view to_string(Language l);
Language parse_language(std::string_view name);

// Progress of a running search: incumbent value and the bound of the next
// node to expand (0 once the queue is exhausted).
struct ProgressRecord {
  std::size_t nodes_expanded = 0;
  double incumbent_value = 0.0;
  double queue_top_bound = 0.0;
  std::size_t depth = 0;  // depth of the node expanded last
};

struct SearchConfig {
  double approximation = 1.0;  // a in (0, 1]
  std::optional<std::size_t> depth_limit;
  std::size_t top_k = 1;
  Language language = Language::ccj;
  EstimatorKind estimator = EstimatorKind::median_linear;
  // Objective whose tight estimator bounds the search. It must dominate the
  // searched objective pointwise; defaults to the searched objective itself.
  std::optional<ObjectiveSpec> bound_objective;
  std::optional<std::size_t> node_budget;
  std::optional<std::chrono::milliseconds> time_budget;
  // Invoked after every expansion.
  std::function<void(const ProgressRecord&)> on_expand;

  void validate() const;
};

struct SearchNode {
  Conjunction selector;
  double bound = 0.0;
  double value = 0.0;
  std::size_t depth = 0;
};

struct ResultRecord {
  Conjunction selector;
  double value = 0.0;
  double bound = 0.0;
  std::size_t depth = 0;
};

struct Trace {
  std::size_t nodes_expanded = 0;
  std::size_t nodes_enqueued = 0;
  std::size_t nodes_evaluated = 0;
  // (nodes_expanded, incumbent value), appended whenever the incumbent improves.
  std::vector<std::pair<std::size_t, double>> best_value_over_time;
  std::chrono::duration<double> wall_time{0};
};

struct SearchOutcome {
  std::vector<ResultRecord> results;  // best first, distinct extensions
  Trace trace;
  bool incomplete = false;  // a node or time budget stopped the search
};

/// Best-first branch-and-bound over conjunctions (or closed conjunctions).
///
/// The queue is ordered by optimistic bound, then extension size (larger
/// first), then selector ids lexicographically. A child is enqueued when
/// a * bound >= value of the k-th best result, and the search ends when the
/// queue is empty or a * bound(top) <= that value. Both tests are
/// multiplicative so a zero incumbent is safe. The returned best value is at
/// least a times the optimum of the (depth-limited) language.
class BranchAndBound {
 public:
  BranchAndBound(std::span<const double> targets, const PropositionPool& pool,
                 ObjectiveSpec objective, SearchConfig config);

  /// Expands one node. Returns false once the search is finished.
  bool step();
  SearchOutcome run();

  ProgressRecord snapshot() const;
  bool finished() const noexcept { return finished_; }
  const std::vector<ResultRecord>& results() const noexcept { return results_; }
  const Trace& trace() const noexcept { return trace_; }
  const Objective& objective() const noexcept { return objective_; }
  const Objective& bound_objective() const noexcept { return bound_objective_; }

 private:
  struct QueueOrder {
    bool operator()(const SearchNode& a, const SearchNode& b) const;
  };

  std::vector<double> sorted_targets_of(const RowSet& rows) const;
  SearchNode score(Conjunction selector, std::size_t depth);
  void offer(const SearchNode& node);
  double threshold() const;
  double incumbent() const noexcept { return results_.empty() ? 0.0 : results_.front().value; }
  bool should_stop() const;

  std::span<const double> targets_;
  const PropositionPool& pool_;
  Objective objective_;
  Objective bound_objective_;
  SearchConfig config_;

  std::priority_queue<SearchNode, std::vector<SearchNode>, QueueOrder> queue_;
  std::vector<ResultRecord> results_;
  Trace trace_;
  std::size_t last_depth_ = 0;
  bool finished_ = false;
  bool incomplete_ = false;
  std::chrono::steady_clock::time_point started_;
};

SearchOutcome run_search(std::span<const double> targets, const PropositionPool& pool,
                         const ObjectiveSpec& objective, const SearchConfig& config);
SearchOutcome run_search(const DataTable& table, const PropositionPool& pool,
                         const ObjectiveSpec& objective, const SearchConfig& config);

}  // namespace dcsd
