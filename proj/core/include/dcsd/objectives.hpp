#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dcsd {

// Population constants shared by every objective.
struct GlobalStats {
  std::size_t n = 0;
  double max_y = 0.0;
  double mean_y = 0.0;
  double med_y = 0.0;
  double amd_y = 0.0;
  double smd_y = 0.0;

  static GlobalStats of(std::span<const double> targets);
};

enum class ObjectiveKind {
  impact,         // cov * relative mean shift (level 1, mean)
  cov_mds,        // f0 = cov * mds+ (level 1, median)
  dcc_mds,        // f1 = dcc * mds+ (level 2, dcc form)
  dcb,            // sqrt(dcc) * (med(Q) - med(P))+ (level 2, dcc form)
  custom_level1,  // g(|Q|, c(Q))
  custom_level2,  // g(|Q|, med(Q), d(Q))
  custom_dcc,     // g(dcc(Q), med(Q))
};

enum class CentralTendency { mean, median };
enum class DispersionMeasure { smd, amd, mad, rmsd };

// g must be non-decreasing in both size and the central tendency value.
using Level1Function = std::function<double(std::size_t size, double central, const GlobalStats&)>;
// g must be non-decreasing in size and non-increasing in the dispersion.
using Level2Function =
    std::function<double(std::size_t size, double median, double dispersion, const GlobalStats&)>;
// g must be non-decreasing in dcc.
using DccFunction = std::function<double(double dcc, double median, const GlobalStats&)>;

struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::dcc_mds;
  std::string name;
  CentralTendency central = CentralTendency::median;
  DispersionMeasure dispersion = DispersionMeasure::smd;
  Level1Function level1;
  Level2Function level2;
  DccFunction dcc_form;

  static ObjectiveSpec impact();
  static ObjectiveSpec f0();
  static ObjectiveSpec f1();
  static ObjectiveSpec dcb();
  static ObjectiveSpec custom_level1(std::string name, Level1Function g, CentralTendency c);
  static ObjectiveSpec custom_level2(std::string name, Level2Function g, DispersionMeasure d);
  static ObjectiveSpec custom_dcc(std::string name, DccFunction g);

  int level() const noexcept;
  // g(dcc(Q), med(Q)) with g non-decreasing in dcc: admits the linear estimator.
  bool is_dcc_form() const noexcept;
};

// "impact" | "f0" | "f1" | "dcb"; throws UsageError otherwise.
ObjectiveSpec parse_objective(std::string_view name);

// A level-1 objective that dominates `spec` pointwise (f <= f_dom on every
// subset), usable as a looser bound: f1 -> f0, dcb -> sqrt(cov)*(med shift)+.
// Level-1 objectives dominate themselves; nullopt when none is known.
std::optional<ObjectiveSpec> dominating_level1(const ObjectiveSpec& spec);

// Primitive measures.
double cov(std::size_t q_size, const GlobalStats& global);
// ((med(Q) - med(P)) / (max(P) - med(P)))+; 0 when max(P) = med(P).
double mds_plus(double q_median, const GlobalStats& global);
// (|Q|/|P| - smd(Q)/smd(P))+, evaluated as (|Q| smd(P) - smd(Q) |P|)+ / (|P| smd(P))
// so equal rationals give bit-identical results. DegenerateTargetError when smd(P) = 0.
double dcc(std::size_t q_size, double q_smd, const GlobalStats& global);
// cov(Q) * ((mean(Q) - mean(P)) / (max(P) - mean(P)))+; 0 for empty Q or max(P) = mean(P).
double ipa(std::span<const double> q, const GlobalStats& global);

/// An objective bound to its population. Construction validates the
/// population: dcc-based objectives raise DegenerateTargetError when
/// smd(P) = 0; median/mean shift objectives with max(P) equal to the
/// reference value evaluate to 0 and record a warning.
///
/// Every value is produced from a summary of the subgroup (size with central
/// tendency for level 1; size, median and dispersion for level 2), so the
/// evaluator and all estimators share one code path.
class Objective {
 public:
  Objective(ObjectiveSpec spec, GlobalStats global);

  const ObjectiveSpec& spec() const noexcept { return spec_; }
  const GlobalStats& global() const noexcept { return global_; }
  int level() const noexcept { return spec_.level(); }
  bool is_dcc_form() const noexcept { return spec_.is_dcc_form(); }
  const std::string& name() const noexcept { return spec_.name; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// f(Q) for an ascending slice; 0 for the empty set.
  double evaluate(std::span<const double> sorted) const;

  /// Level 1: g(|Q|, c(Q)).
  double from_central(std::size_t size, double central) const;
  /// Level 2: g(|Q|, med(Q), d(Q)) with d the spec's dispersion measure.
  double from_dispersion(std::size_t size, double median, double dispersion) const;
  /// dcc form: g(dcc, med(Q)) from the raw triple.
  double from_smd(std::size_t size, double median, double smd) const;
  double from_dcc(double dcc_value, double median) const;

 private:
  ObjectiveSpec spec_;
  GlobalStats global_;
  std::vector<std::string> warnings_;
};

}  // namespace dcsd
