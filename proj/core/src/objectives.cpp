#include "dcsd/objectives.hpp"

#include <algorithm>
#include <cmath>

#include "dcsd/error.hpp"
#include "dcsd/order_stats.hpp"

namespace dcsd {

GlobalStats GlobalStats::of(std::span<const double> targets) {
  if (targets.empty()) throw DataError("global population is empty");
  std::vector<double> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  GlobalStats g;
  g.n = sorted.size();
  g.max_y = sorted.back();
  g.mean_y = mean(sorted);
  g.med_y = median(sorted);
  g.smd_y = smd(sorted);
  g.amd_y = g.smd_y / static_cast<double>(g.n);
  return g;
}

ObjectiveSpec ObjectiveSpec::impact() {
  ObjectiveSpec s;
  s.kind = ObjectiveKind::impact;
  s.name = "impact";
  s.central = CentralTendency::mean;
  return s;
}

ObjectiveSpec ObjectiveSpec::f0() {
  ObjectiveSpec s;
  s.kind = ObjectiveKind::cov_mds;
  s.name = "f0";
  s.central = CentralTendency::median;
  return s;
}

ObjectiveSpec ObjectiveSpec::f1() {
  ObjectiveSpec s;
  s.kind = ObjectiveKind::dcc_mds;
  s.name = "f1";
  return s;
}

ObjectiveSpec ObjectiveSpec::dcb() {
  ObjectiveSpec s;
  s.kind = ObjectiveKind::dcb;
  s.name = "dcb";
  return s;
}

ObjectiveSpec ObjectiveSpec::custom_level1(std::string name, Level1Function g, CentralTendency c) {
  ObjectiveSpec s;
  s.kind = ObjectiveKind::custom_level1;
  s.name = std::move(name);
  s.central = c;
  s.level1 = std::move(g);
  return s;
}

ObjectiveSpec ObjectiveSpec::custom_level2(std::string name, Level2Function g, DispersionMeasure d) {
  ObjectiveSpec s;
  s.kind = ObjectiveKind::custom_level2;
  s.name = std::move(name);
  s.dispersion = d;
  s.level2 = std::move(g);
  return s;
}

ObjectiveSpec ObjectiveSpec::custom_dcc(std::string name, DccFunction g) {
  ObjectiveSpec s;
  s.kind = ObjectiveKind::custom_dcc;
  s.name = std::move(name);
  s.dcc_form = std::move(g);
  return s;
}

int ObjectiveSpec::level() const noexcept {
  switch (kind) {
    case ObjectiveKind::impact:
    case ObjectiveKind::cov_mds:
    case ObjectiveKind::custom_level1:
      return 1;
    default:
      return 2;
  }
}

bool ObjectiveSpec::is_dcc_form() const noexcept {
  return kind == ObjectiveKind::dcc_mds || kind == ObjectiveKind::dcb ||
         kind == ObjectiveKind::custom_dcc;
}

ObjectiveSpec parse_objective(std::string_view name) {
  if (name == "impact") return ObjectiveSpec::impact();
  if (name == "f0") return ObjectiveSpec::f0();
  if (name == "f1") return ObjectiveSpec::f1();
  if (name == "dcb") return ObjectiveSpec::dcb();
  throw UsageError("unknown objective '" + std::string(name) + "' (expected impact|f0|f1|dcb)");
}

std::optional<ObjectiveSpec> dominating_level1(const ObjectiveSpec& spec) {
  switch (spec.kind) {
    case ObjectiveKind::impact:
    case ObjectiveKind::cov_mds:
    case ObjectiveKind::custom_level1:
      return spec;
    case ObjectiveKind::dcc_mds:
      return ObjectiveSpec::f0();
    case ObjectiveKind::dcb:
      return ObjectiveSpec::custom_level1(
          "sqrt-cov-shift",
          [](std::size_t size, double med, const GlobalStats& g) {
            return std::sqrt(cov(size, g)) * std::max(med - g.med_y, 0.0);
          },
          CentralTendency::median);
    default:
      return std::nullopt;
  }
}

double cov(std::size_t q_size, const GlobalStats& global) {
  return static_cast<double>(q_size) / static_cast<double>(global.n);
}

double mds_plus(double q_median, const GlobalStats& global) {
  const double range = global.max_y - global.med_y;
  if (!(range > 0.0)) return 0.0;
  return std::max((q_median - global.med_y) / range, 0.0);
}

double dcc(std::size_t q_size, double q_smd, const GlobalStats& global) {
  if (!(global.smd_y > 0.0)) {
    throw DegenerateTargetError("dispersion-corrected coverage needs smd(P) > 0");
  }
  const double n = static_cast<double>(global.n);
  const double numerator = static_cast<double>(q_size) * global.smd_y - q_smd * n;
  return std::max(numerator, 0.0) / (n * global.smd_y);
}

double ipa(std::span<const double> q, const GlobalStats& global) {
  if (q.empty()) return 0.0;
  const double range = global.max_y - global.mean_y;
  if (!(range > 0.0)) return 0.0;
  return cov(q.size(), global) * std::max((mean(q) - global.mean_y) / range, 0.0);
}

Objective::Objective(ObjectiveSpec spec, GlobalStats global)
    : spec_(std::move(spec)), global_(global) {
  if (global_.n == 0) throw DataError("objective over an empty population");
  switch (spec_.kind) {
    case ObjectiveKind::impact:
      if (!(global_.max_y > global_.mean_y)) {
        warnings_.push_back("max(P) = mean(P): impact is identically 0");
      }
      break;
    case ObjectiveKind::cov_mds:
      if (!(global_.max_y > global_.med_y)) {
        warnings_.push_back("max(P) = med(P): median shift is identically 0");
      }
      break;
    case ObjectiveKind::dcc_mds:
    case ObjectiveKind::dcb:
    case ObjectiveKind::custom_dcc:
      if (!(global_.smd_y > 0.0)) {
        throw DegenerateTargetError("degenerate target: objective '" + spec_.name +
                                    "' needs amd(P) > 0 but the target is constant");
      }
      if (spec_.kind == ObjectiveKind::dcc_mds && !(global_.max_y > global_.med_y)) {
        warnings_.push_back("max(P) = med(P): median shift is identically 0");
      }
      if (spec_.kind == ObjectiveKind::custom_dcc && !spec_.dcc_form) {
        throw UsageError("custom dcc objective without a function");
      }
      break;
    case ObjectiveKind::custom_level1:
      if (!spec_.level1) throw UsageError("custom level-1 objective without a function");
      break;
    case ObjectiveKind::custom_level2:
      if (!spec_.level2) throw UsageError("custom level-2 objective without a function");
      break;
  }
}

double Objective::from_central(std::size_t size, double central) const {
  if (size == 0) return 0.0;
  switch (spec_.kind) {
    case ObjectiveKind::impact: {
      const double range = global_.max_y - global_.mean_y;
      if (!(range > 0.0)) return 0.0;
      return cov(size, global_) * std::max((central - global_.mean_y) / range, 0.0);
    }
    case ObjectiveKind::cov_mds:
      return cov(size, global_) * mds_plus(central, global_);
    case ObjectiveKind::custom_level1:
      return spec_.level1(size, central, global_);
    default:
      throw InvariantError("objective '" + spec_.name + "' is not level 1");
  }
}

double Objective::from_dcc(double dcc_value, double median) const {
  switch (spec_.kind) {
    case ObjectiveKind::dcc_mds:
      return dcc_value * mds_plus(median, global_);
    case ObjectiveKind::dcb:
      return std::sqrt(dcc_value) * std::max(median - global_.med_y, 0.0);
    case ObjectiveKind::custom_dcc:
      return spec_.dcc_form(dcc_value, median, global_);
    default:
      throw InvariantError("objective '" + spec_.name + "' is not of dcc form");
  }
}

double Objective::from_smd(std::size_t size, double median, double smd_value) const {
  if (size == 0) return 0.0;
  return from_dcc(dcc(size, smd_value, global_), median);
}

double Objective::from_dispersion(std::size_t size, double median, double dispersion) const {
  if (size == 0) return 0.0;
  if (spec_.is_dcc_form()) return from_smd(size, median, dispersion);
  if (spec_.kind == ObjectiveKind::custom_level2) {
    return spec_.level2(size, median, dispersion, global_);
  }
  throw InvariantError("objective '" + spec_.name + "' is not level 2");
}

double Objective::evaluate(std::span<const double> sorted) const {
  if (sorted.empty()) return 0.0;
  const std::size_t m = sorted.size();
  if (level() == 1) {
    const double central = spec_.central == CentralTendency::mean ? mean(sorted) : median(sorted);
    return from_central(m, central);
  }
  const double med = median(sorted);
  if (spec_.is_dcc_form()) return from_smd(m, med, smd(sorted));
  double d = 0.0;
  switch (spec_.dispersion) {
    case DispersionMeasure::smd:
      d = smd(sorted);
      break;
    case DispersionMeasure::amd:
      d = amd(sorted);
      break;
    case DispersionMeasure::mad:
      d = mad(sorted);
      break;
    case DispersionMeasure::rmsd:
      d = rmsd(sorted);
      break;
  }
  return from_dispersion(m, med, d);
}

}  // namespace dcsd
