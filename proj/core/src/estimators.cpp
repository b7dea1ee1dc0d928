#include "dcsd/estimators.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dcsd/error.hpp"

namespace dcsd {

std::string_view to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::top_sequence:
      return "top";
    case EstimatorKind::median_general:
      return "general";
    case EstimatorKind::median_linear:
      return "linear";
  }
  return "unknown";
}

EstimatorKind parse_estimator(std::string_view name) {
  if (name == "top") return EstimatorKind::top_sequence;
  if (name == "general") return EstimatorKind::median_general;
  if (name == "linear") return EstimatorKind::median_linear;
  throw UsageError("unknown estimator '" + std::string(name) + "' (expected top|general|linear)");
}

void check_admissible(EstimatorKind kind, const Objective& objective) {
  switch (kind) {
    case EstimatorKind::top_sequence:
      if (objective.level() != 1) {
        throw UsageError("top-sequence estimator needs a level-1 objective, got '" +
                         objective.name() + "'");
      }
      break;
    case EstimatorKind::median_general:
      if (objective.level() != 2) {
        throw UsageError("median-sequence estimator needs a level-2 objective, got '" +
                         objective.name() + "'");
      }
      break;
    case EstimatorKind::median_linear:
      if (!objective.is_dcc_form()) {
        throw UsageError("linear estimator needs an objective of the form g(dcc, med), got '" +
                         objective.name() + "'");
      }
      break;
  }
}

double top_sequence_estimate(const Objective& objective, std::span<const double> sorted) {
  check_admissible(EstimatorKind::top_sequence, objective);
  const std::size_t m = sorted.size();
  const bool use_mean = objective.spec().central == CentralTendency::mean;
  double best = 0.0;
  CompensatedSum sum;
  for (std::size_t i = 1; i <= m; ++i) {
    double central = 0.0;
    if (use_mean) {
      sum.add(sorted[m - i]);
      central = sum.value() / static_cast<double>(i);
    } else {
      // lower median of {y_{m-i+1}, ..., y_m} is y_{m - floor(i/2)}
      central = sorted[m - i / 2 - 1];
    }
    best = std::max(best, objective.from_central(i, central));
  }
  return best;
}

double median_sequence_estimate_general(const Objective& objective,
                                        std::span<const double> sorted, std::size_t cap) {
  check_admissible(EstimatorKind::median_general, objective);
  const std::size_t m = sorted.size();
  if (m == 0) return 0.0;
  if (m > cap) {
    throw UsageError("general median-sequence estimator limited to " + std::to_string(cap) +
                     " values, got " + std::to_string(m));
  }
  const auto targets = SortedTargets::from_sorted(sorted);
  const DispersionMeasure measure =
      objective.is_dcc_form() ? DispersionMeasure::smd : objective.spec().dispersion;

  double best = 0.0;
  for (std::size_t z = 1; z <= m; ++z) {
    const double med = targets.value(z);
    const std::size_t mz = max_consecutive_size(z, m);
    for (std::size_t k = 1; k <= mz; ++k) {
      const std::size_t a = consecutive_first(z, k);
      const std::size_t b = consecutive_last(z, k);
      double d = 0.0;
      switch (measure) {
        case DispersionMeasure::smd:
          d = targets.segment_smd(a, z, b);
          break;
        case DispersionMeasure::amd:
          d = targets.segment_smd(a, z, b) / static_cast<double>(k);
          break;
        case DispersionMeasure::mad:
          d = mad(sorted.subspan(a - 1, k));
          break;
        case DispersionMeasure::rmsd:
          d = rmsd(sorted.subspan(a - 1, k));
          break;
      }
      best = std::max(best, objective.from_dispersion(k, med, d));
    }
  }
  return best;
}

namespace {

// Walks the median sequence from z = m down to 1, handing each state to
// `visit`. Callers that only need the maximum avoid storing m states.
template <class Visit>
void walk_median_sequence(const Objective& objective, const SortedTargets& targets,
                          std::size_t window_radius, Visit&& visit) {
  check_admissible(EstimatorKind::median_linear, objective);
  const std::size_t m = targets.size();
  if (m == 0) return;
  const double n = static_cast<double>(objective.global().n);
  const double global_smd = objective.global().smd_y;

  // Q_m is the singleton {y_m}.
  visit(MedianSequenceState{m, 1, 1, 1, objective.from_smd(1, targets.value(m), 0.0)});
  std::size_t previous = 1;

  for (std::size_t z = m - 1; z >= 1; --z) {
    const std::size_t mz = max_consecutive_size(z, m);
    const std::size_t hi = std::min(mz, previous + window_radius);
    const std::size_t lo = std::min(hi, previous > window_radius ? previous - window_radius : 1);

    // dcc(Q^k_z) before clamping is (k*smd(P) - smd(Q^k_z)*n) / (n*smd(P));
    // the positive denominator is dropped for the comparison.
    std::size_t best_k = lo;
    double best_smd = 0.0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t k = lo; k <= hi; ++k) {
      const double s = targets.segment_smd(consecutive_first(z, k), z, consecutive_last(z, k));
      const double score = static_cast<double>(k) * global_smd - s * n;
      if (score > best_score) {
        best_score = score;
        best_k = k;
        best_smd = s;
      }
    }
    visit(MedianSequenceState{z, best_k, lo, hi, objective.from_smd(best_k, targets.value(z), best_smd)});
    previous = best_k;
  }
}

}  // namespace

std::vector<MedianSequenceState> median_sequence_linear(const Objective& objective,
                                                        const SortedTargets& targets,
                                                        std::size_t window_radius) {
  std::vector<MedianSequenceState> sequence;
  sequence.reserve(targets.size());
  walk_median_sequence(objective, targets, window_radius,
                       [&](const MedianSequenceState& s) { sequence.push_back(s); });
  return sequence;
}

double median_sequence_estimate_linear(const Objective& objective, const SortedTargets& targets,
                                       std::size_t window_radius) {
  double best = 0.0;
  walk_median_sequence(objective, targets, window_radius,
                       [&](const MedianSequenceState& s) { best = std::max(best, s.value); });
  return best;
}

double median_sequence_estimate_linear(const Objective& objective, std::span<const double> sorted) {
  check_admissible(EstimatorKind::median_linear, objective);
  if (sorted.empty()) return 0.0;
  return median_sequence_estimate_linear(objective, SortedTargets::from_sorted(sorted));
}

double brute_force_estimate(const Objective& objective, std::span<const double> sorted,
                            std::size_t cap) {
  const std::size_t m = sorted.size();
  if (m > cap) {
    throw UsageError("brute-force estimator limited to " + std::to_string(cap) + " values, got " +
                     std::to_string(m));
  }
  double best = 0.0;
  std::vector<double> subset;
  subset.reserve(m);
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) subset.push_back(sorted[i]);
    }
    best = std::max(best, objective.evaluate(subset));
  }
  return best;
}

double estimate(EstimatorKind kind, const Objective& objective, std::span<const double> sorted) {
  switch (kind) {
    case EstimatorKind::top_sequence:
      return top_sequence_estimate(objective, sorted);
    case EstimatorKind::median_general:
      return median_sequence_estimate_general(objective, sorted);
    case EstimatorKind::median_linear:
      return median_sequence_estimate_linear(objective, sorted);
  }
  return 0.0;
}

}  // namespace dcsd
