#include "dcsd/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "dcsd/error.hpp"
#include "dcsd/order_stats.hpp"

namespace dcsd {

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw UsageError("delta must lie in (0, 1), got " + std::to_string(delta));
  }
}

}  // namespace

double sample_variance(std::span<const double> values) {
  const std::size_t m = values.size();
  if (m < 2) throw InvariantError("sample variance needs at least two values");
  const double mu = mean(values);
  CompensatedSum squares;
  for (double y : values) squares.add((y - mu) * (y - mu));
  return squares.value() / static_cast<double>(m - 1);
}

bool chebyshev_defined(std::size_t m, double delta) {
  check_delta(delta);
  if (m < 2) return false;
  const double md = static_cast<double>(m);
  return md > 1.0 / delta && md * md * delta - md > 0.0;
}

std::optional<double> chebyshev_epsilon(std::span<const double> q, double delta) {
  if (!chebyshev_defined(q.size(), delta)) return std::nullopt;
  const double m = static_cast<double>(q.size());
  return std::sqrt((m * m - 1.0) * sample_variance(q) / (m * m * delta - m));
}

GlobalConfidence GlobalConfidence::of(std::span<const double> global, double delta) {
  const auto eps = chebyshev_epsilon(global, delta);
  if (!eps) {
    std::ostringstream msg;
    msg << "population of " << global.size()
        << " rows is too small for a confidence radius (needs more than 1/delta = " << 1.0 / delta << ")";
    throw DataError(msg.str());
  }
  GlobalConfidence g;
  g.delta = delta;
  g.mean = dcsd::mean(global);
  g.variance = sample_variance(global);
  if (g.variance == 0.0) throw DegenerateTargetError("target variance is zero");
  g.epsilon = *eps;
  g.lcb = g.mean - g.epsilon;
  return g;
}

double lower_confidence_bound(std::span<const double> q, const GlobalConfidence& global) {
  const auto eps = chebyshev_epsilon(q, global.delta);
  if (!eps) return global.lcb;
  return mean(q) - *eps;
}

double lcb_score(std::span<const double> q, const GlobalConfidence& global) {
  const double l = lower_confidence_bound(q, global);
  return std::max(0.0, (l - global.lcb) / std::sqrt(global.variance));
}

double lcb_score(std::span<const double> q, std::span<const double> global, double delta) {
  return lcb_score(q, GlobalConfidence::of(global, delta));
}

SubgroupReport make_report(const Conjunction& selector, const PropositionPool& pool,
                           std::span<const double> targets, const Objective& objective,
                           const std::optional<GlobalConfidence>& global, double delta) {
  const RowSet& ext = selector.extension();
  if (ext.empty()) throw InvariantError("cannot report an empty subgroup");
  std::vector<double> values;
  values.reserve(ext.count());
  ext.for_each([&](std::size_t r) { values.push_back(targets[r]); });
  std::sort(values.begin(), values.end());

  SubgroupReport r;
  r.selector = selector.describe(pool);
  r.ids = ids_json(selector);
  r.value = objective.evaluate(values);
  r.size = values.size();
  r.coverage = static_cast<double>(r.size) / static_cast<double>(targets.size());
  r.median = median(values);
  r.amd = amd(values);
  r.mean = mean(values);
  if (r.size >= 2) r.variance = sample_variance(values);
  r.epsilon = chebyshev_epsilon(values, global ? global->delta : delta);
  if (global) {
    r.lcb = lower_confidence_bound(values, *global);
    r.lcb_score = lcb_score(values, *global);
  }
  return r;
}

}  // namespace dcsd
