#include "dcsd/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "dcsd/fixtures.hpp"
#include "dcsd/language.hpp"
#include "dcsd/objectives.hpp"
#include "dcsd/order_stats.hpp"

namespace dcsd {

namespace {

std::string list(const std::vector<double>& values) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << ']';
  return out.str();
}

std::size_t random_size(Random& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.integer(static_cast<std::int64_t>(lo),
                                              static_cast<std::int64_t>(hi)));
}

// Sorted integer-valued multiset; small ranges produce many ties.
std::vector<double> random_multiset(Random& rng, std::size_t m) {
  static const std::int64_t kRanges[] = {2, 5, 20, 1000};
  const std::int64_t range = kRanges[rng.integer(0, 3)];
  std::vector<double> q(m);
  for (double& y : q) y = static_cast<double>(rng.integer(0, range));
  std::sort(q.begin(), q.end());
  return q;
}

// A population containing q plus up to |q| extra values, with smd(P) > 0.
std::vector<double> random_population(Random& rng, const std::vector<double>& q) {
  for (;;) {
    std::vector<double> p = q;
    const std::size_t extra = random_size(rng, 0, q.size());
    const auto more = random_multiset(rng, extra + 1);
    p.insert(p.end(), more.begin(), more.end());
    std::sort(p.begin(), p.end());
    if (smd(p) > 0.0) return p;
  }
}

CheckResult start(const char* name, const CheckOptions& options) {
  CheckResult r;
  r.name = name;
  r.trials = options.trials;
  return r;
}

}  // namespace

CheckResult check_segment_identity(const CheckOptions& options) {
  CheckResult result = start("segment-identity", options);
  Random rng(options.seed);
  for (std::size_t t = 0; t < options.trials; ++t) {
    const auto q = random_multiset(rng, random_size(rng, 1, std::max<std::size_t>(options.max_size, 1)));
    const auto targets = SortedTargets::from_sorted(q);
    const std::size_t m = q.size();
    for (std::size_t z = 1; z <= m; ++z) {
      for (std::size_t a = 1; a <= z; ++a) {
        for (std::size_t b = z; b <= m; ++b) {
          double direct = 0.0;
          for (std::size_t i = a; i <= b; ++i) direct += std::abs(q[z - 1] - q[i - 1]);
          const double fast = targets.segment_smd(a, z, b);
          if (fast != direct) {
            std::ostringstream out;
            out << "q=" << list(q) << " a=" << a << " z=" << z << " b=" << b
                << " identity=" << fast << " direct=" << direct;
            result.passed = false;
            result.counterexample = out.str();
            return result;
          }
        }
      }
    }
  }
  return result;
}

CheckResult check_median_sequence(const CheckOptions& options) {
  CheckResult result = start("median-sequence", options);
  Random rng(options.seed + 1);
  const std::size_t cap = std::min(options.max_size, kDefaultBruteForceCap);
  for (std::size_t t = 0; t < options.trials; ++t) {
    const auto q = random_multiset(rng, random_size(rng, 1, std::max<std::size_t>(cap, 1)));
    const auto p = random_population(rng, q);
    const ObjectiveSpec spec = t % 2 == 0 ? ObjectiveSpec::f1() : ObjectiveSpec::dcb();
    const Objective f(spec, GlobalStats::of(p));
    const double linear =
        median_sequence_estimate_linear(f, SortedTargets::from_sorted(q), options.window_radius);
    const double general = median_sequence_estimate_general(f, q);
    const double brute = brute_force_estimate(f, q);
    if (linear != brute || general != brute) {
      std::ostringstream out;
      out << spec.name << " q=" << list(q) << " P=" << list(p) << " linear=" << linear
          << " general=" << general << " brute=" << brute;
      result.passed = false;
      result.counterexample = out.str();
      return result;
    }
  }
  return result;
}

CheckResult check_top_sequence(const CheckOptions& options) {
  CheckResult result = start("top-sequence", options);
  Random rng(options.seed + 2);
  const std::size_t cap = std::min(options.max_size, kDefaultBruteForceCap);
  for (std::size_t t = 0; t < options.trials; ++t) {
    const auto q = random_multiset(rng, random_size(rng, 1, std::max<std::size_t>(cap, 1)));
    const auto p = random_population(rng, q);
    const ObjectiveSpec spec = t % 2 == 0 ? ObjectiveSpec::f0() : ObjectiveSpec::impact();
    const Objective f(spec, GlobalStats::of(p));
    const double top = top_sequence_estimate(f, q);
    const double brute = brute_force_estimate(f, q);
    if (top != brute) {
      std::ostringstream out;
      out << spec.name << " q=" << list(q) << " P=" << list(p) << " top=" << top
          << " brute=" << brute;
      result.passed = false;
      result.counterexample = out.str();
      return result;
    }
  }
  return result;
}

CheckResult check_window(const CheckOptions& options) {
  CheckResult result = start("window", options);
  Random rng(options.seed + 3);
  for (std::size_t t = 0; t < options.trials; ++t) {
    const auto q = random_multiset(rng, random_size(rng, 2, std::max<std::size_t>(4 * options.max_size, 2)));
    const auto p = random_population(rng, q);
    const auto targets = SortedTargets::from_sorted(q);
    const double n = static_cast<double>(p.size());
    const double s = smd(p);
    const std::size_t m = q.size();
    std::size_t previous = 0;
    for (std::size_t z = m; z >= 1; --z) {
      std::size_t best_k = 0;
      double best = 0.0;
      for (std::size_t k = 1; k <= max_consecutive_size(z, m); ++k) {
        const double seg = targets.segment_smd(consecutive_first(z, k), z, consecutive_last(z, k));
        const double score = static_cast<double>(k) * s - seg * n;
        if (best_k == 0 || score > best) {
          best = score;
          best_k = k;
        }
      }
      if (z < m) {
        const std::size_t gap = best_k > previous ? best_k - previous : previous - best_k;
        if (gap > options.window_radius) {
          std::ostringstream out;
          out << "q=" << list(q) << " P=" << list(p) << " z=" << z << " k*=" << best_k
              << " k*(z+1)=" << previous;
          result.passed = false;
          result.counterexample = out.str();
          return result;
        }
      }
      previous = best_k;
    }
  }
  return result;
}

CheckResult check_closed_enumeration(const CheckOptions& options) {
  CheckResult result = start("closed-enumeration", options);
  Random rng(options.seed + 4);
  const std::size_t max_props = std::min<std::size_t>(std::max<std::size_t>(options.max_props, 1), 16);
  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::size_t rows = random_size(rng, 1, 30);
    const std::size_t k = random_size(rng, 0, max_props);
    std::vector<RowSet> extensions;
    for (std::size_t i = 0; i < k; ++i) {
      const double density = 0.3 + 0.6 * rng.uniform();
      RowSet ext(rows);
      for (std::size_t r = 0; r < rows; ++r) {
        if (rng.bernoulli(density)) ext.insert(r);
      }
      extensions.push_back(std::move(ext));
    }
    const auto pool = PropositionPool::from_extensions(rows, std::move(extensions));

    std::set<std::vector<int>> expected;
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
      std::vector<int> ids;
      for (std::size_t i = 0; i < k; ++i) {
        if ((mask >> i) & 1U) ids.push_back(static_cast<int>(i) + 1);
      }
      expected.insert(closure(Conjunction::of(ids, pool), pool).props());
    }

    std::set<std::vector<int>> seen;
    std::string failure;
    std::vector<Conjunction> stack{closure(Conjunction::bottom(pool), pool)};
    while (!stack.empty() && failure.empty()) {
      Conjunction sigma = std::move(stack.back());
      stack.pop_back();
      if (!seen.insert(sigma.props()).second) failure = "visited twice: " + ids_json(sigma);
      for (auto& child : refine_ccj(sigma, pool)) stack.push_back(std::move(child));
    }
    if (failure.empty() && seen != expected) {
      failure = "visited " + std::to_string(seen.size()) + " closed conjunctions, expected " +
                std::to_string(expected.size());
    }
    if (!failure.empty()) {
      std::ostringstream out;
      out << "rows=" << rows << " props=" << k << ' ' << failure;
      result.passed = false;
      result.counterexample = out.str();
      return result;
    }
  }
  return result;
}

std::vector<CheckResult> run_checks(const CheckOptions& options) {
  return {check_segment_identity(options), check_median_sequence(options),
          check_top_sequence(options), check_window(options), check_closed_enumeration(options)};
}

}  // namespace dcsd
