#include "dcsd/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dcsd/error.hpp"

namespace dcsd {

std::string_view to_string(Language l) { return l == Language::cnj ? "cnj" : "ccj"; }

Language parse_language(std::string_view name) {
  if (name == "cnj") return Language::cnj;
  if (name == "ccj") return Language::ccj;
  throw UsageError("unknown language '" + std::string(name) + "' (expected cnj|ccj)");
}

void SearchConfig::validate() const {
  if (!(approximation > 0.0 && approximation <= 1.0)) {
    throw UsageError("approximation factor must lie in (0, 1]");
  }
  if (top_k < 1) throw UsageError("top-k must be at least 1");
}

bool BranchAndBound::QueueOrder::operator()(const SearchNode& a, const SearchNode& b) const {
  if (a.bound != b.bound) return a.bound < b.bound;
  const std::size_t sa = a.selector.extension().count();
  const std::size_t sb = b.selector.extension().count();
  if (sa != sb) return sa < sb;
  return a.selector.props() > b.selector.props();
}

namespace {

Objective make_objective(const ObjectiveSpec& spec, std::span<const double> targets) {
  return Objective(spec, GlobalStats::of(targets));
}

bool result_precedes(const ResultRecord& a, const ResultRecord& b) {
  if (a.value != b.value) return a.value > b.value;
  const std::size_t sa = a.selector.extension().count();
  const std::size_t sb = b.selector.extension().count();
  if (sa != sb) return sa > sb;
  return a.selector.props() < b.selector.props();
}

}  // namespace

BranchAndBound::BranchAndBound(std::span<const double> targets, const PropositionPool& pool,
                               ObjectiveSpec objective, SearchConfig config)
    : targets_(targets),
      pool_(pool),
      objective_(make_objective(objective, targets)),
      bound_objective_(make_objective(config.bound_objective.value_or(objective), targets)),
      config_(std::move(config)),
      started_(std::chrono::steady_clock::now()) {
  config_.validate();
  if (targets_.size() != pool_.rows()) {
    throw InvariantError("pool built for " + std::to_string(pool_.rows()) + " rows, got " +
                         std::to_string(targets_.size()) + " targets");
  }
  check_admissible(config_.estimator, bound_objective_);

  Conjunction root = Conjunction::bottom(pool_);
  if (config_.language == Language::ccj) root = closure(root, pool_);
  SearchNode node = score(std::move(root), 0);
  offer(node);
  trace_.best_value_over_time.emplace_back(0, incumbent());
  const bool expandable = !config_.depth_limit || *config_.depth_limit > 0;
  if (!node.selector.extension().empty() && expandable) {
    queue_.push(std::move(node));
    ++trace_.nodes_enqueued;
  }
}

std::vector<double> BranchAndBound::sorted_targets_of(const RowSet& rows) const {
  std::vector<double> values;
  values.reserve(rows.count());
  rows.for_each([&](std::size_t r) { values.push_back(targets_[r]); });
  std::sort(values.begin(), values.end());
  return values;
}

SearchNode BranchAndBound::score(Conjunction selector, std::size_t depth) {
  const auto values = sorted_targets_of(selector.extension());
  SearchNode node{std::move(selector), 0.0, 0.0, depth};
  node.value = objective_.evaluate(values);
  node.bound = values.empty() ? 0.0 : estimate(config_.estimator, bound_objective_, values);
  // A sound bound dominates the node's own value; absorb rounding differences
  // between the estimator's and the evaluator's dispersion sums.
  node.bound = std::max(node.bound, node.value);
  ++trace_.nodes_evaluated;
  return node;
}

void BranchAndBound::offer(const SearchNode& node) {
  const RowSet& ext = node.selector.extension();
  if (ext.empty()) return;
  const auto same = std::find_if(results_.begin(), results_.end(), [&](const ResultRecord& r) {
    return r.selector.extension() == ext;
  });
  ResultRecord record{node.selector, node.value, node.bound, node.depth};
  if (same != results_.end()) {
    if (!result_precedes(record, *same)) return;
    *same = std::move(record);
  } else {
    results_.push_back(std::move(record));
  }
  std::sort(results_.begin(), results_.end(), result_precedes);
  if (results_.size() > config_.top_k) results_.erase(results_.begin() + static_cast<std::ptrdiff_t>(config_.top_k), results_.end());
}

double BranchAndBound::threshold() const {
  if (results_.size() < config_.top_k) return -std::numeric_limits<double>::infinity();
  return results_[config_.top_k - 1].value;
}

bool BranchAndBound::should_stop() const {
  if (queue_.empty()) return true;
  return config_.approximation * queue_.top().bound <= threshold();
}

bool BranchAndBound::step() {
  if (finished_) return false;
  if (should_stop()) {
    finished_ = true;
    trace_.wall_time = std::chrono::steady_clock::now() - started_;
    return false;
  }
  const bool out_of_nodes = config_.node_budget && trace_.nodes_expanded >= *config_.node_budget;
  const bool out_of_time =
      config_.time_budget && std::chrono::steady_clock::now() - started_ >= *config_.time_budget;
  if (out_of_nodes || out_of_time) {
    finished_ = true;
    incomplete_ = true;
    trace_.wall_time = std::chrono::steady_clock::now() - started_;
    return false;
  }

  SearchNode top = queue_.top();
  queue_.pop();
  const double incumbent_before = incumbent();

  auto refinements = config_.language == Language::ccj ? refine_ccj(top.selector, pool_)
                                                       : refine_cnj(top.selector, pool_);
  const std::size_t depth = top.depth + 1;
  std::vector<SearchNode> children;
  children.reserve(refinements.size());
  for (auto& phi : refinements) {
    children.push_back(score(std::move(phi), depth));
    offer(children.back());
  }

  const double cut = threshold();
  const bool expandable = !config_.depth_limit || depth < *config_.depth_limit;
  for (auto& child : children) {
    if (child.selector.extension().empty() || !expandable) continue;
    if (config_.approximation * child.bound >= cut) {
      queue_.push(std::move(child));
      ++trace_.nodes_enqueued;
    }
  }

  ++trace_.nodes_expanded;
  last_depth_ = top.depth;
  if (incumbent() > incumbent_before) {
    trace_.best_value_over_time.emplace_back(trace_.nodes_expanded, incumbent());
  }
  trace_.wall_time = std::chrono::steady_clock::now() - started_;
  if (config_.on_expand) config_.on_expand(snapshot());
  return true;
}

ProgressRecord BranchAndBound::snapshot() const {
  ProgressRecord p;
  p.nodes_expanded = trace_.nodes_expanded;
  p.incumbent_value = incumbent();
  p.queue_top_bound = queue_.empty() ? 0.0 : queue_.top().bound;
  p.depth = last_depth_;
  return p;
}

SearchOutcome BranchAndBound::run() {
  while (step()) {
  }
  return SearchOutcome{results_, trace_, incomplete_};
}

SearchOutcome run_search(std::span<const double> targets, const PropositionPool& pool,
                         const ObjectiveSpec& objective, const SearchConfig& config) {
  BranchAndBound search(targets, pool, objective, config);
  return search.run();
}

SearchOutcome run_search(const DataTable& table, const PropositionPool& pool,
                         const ObjectiveSpec& objective, const SearchConfig& config) {
  return run_search(table.target(), pool, objective, config);
}

}  // namespace dcsd
