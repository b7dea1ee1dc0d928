#include "dcsd/propositions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "dcsd/error.hpp"

namespace dcsd {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::less_equal:
      return "<=";
    case Relation::greater_equal:
      return ">=";
    case Relation::equal:
      return "=";
    case Relation::less:
      return "<";
    case Relation::greater:
      return ">";
  }
  return "?";
}

std::string_view to_string(Binning b) {
  return b == Binning::equal_frequency ? "equal-frequency" : "equal-width";
}

namespace {

std::string format_number(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::to_string(x);
}

}  // namespace

bool Proposition::holds(const DataTable& table, std::size_t row) const {
  if (attribute == kNoAttribute) return extension.contains(row);
  const AttributeColumn& column = table.attribute(attribute);
  switch (relation) {
    case Relation::less_equal:
    case Relation::greater_equal: {
      const auto& x = column.numbers[row];
      if (!x) return false;
      const double t = std::get<double>(threshold);
      return relation == Relation::less_equal ? *x <= t : *x >= t;
    }
    case Relation::equal: {
      const auto& x = column.labels[row];
      return x && *x == std::get<std::string>(threshold);
    }
    case Relation::less:
    case Relation::greater: {
      const auto rank = column.level_rank(row);
      if (!rank) return false;
      const auto& levels = column.levels;
      const auto pos = static_cast<std::size_t>(
          std::find(levels.begin(), levels.end(), std::get<std::string>(threshold)) -
          levels.begin());
      return relation == Relation::less ? *rank < pos : *rank > pos;
    }
  }
  return false;
}

PropositionPool::PropositionPool(std::size_t rows, std::vector<Proposition> propositions)
    : rows_(rows), props_(std::move(propositions)) {
  for (std::size_t i = 0; i < props_.size(); ++i) {
    if (props_[i].id != static_cast<int>(i + 1)) {
      throw InvariantError("proposition ids must be contiguous from 1");
    }
    if (props_[i].extension.universe() != rows_) {
      throw InvariantError("proposition extension over wrong row universe");
    }
  }
}

PropositionPool PropositionPool::from_extensions(std::size_t rows, std::vector<RowSet> extensions) {
  std::vector<Proposition> props;
  props.reserve(extensions.size());
  for (std::size_t i = 0; i < extensions.size(); ++i) {
    Proposition p;
    p.id = static_cast<int>(i + 1);
    p.extension = std::move(extensions[i]);
    p.label = "p" + std::to_string(i + 1);
    props.push_back(std::move(p));
  }
  return PropositionPool(rows, std::move(props));
}

const Proposition& PropositionPool::at(int id) const {
  if (id < 1 || static_cast<std::size_t>(id) > props_.size()) {
    throw InvariantError("unknown proposition id " + std::to_string(id));
  }
  return props_[static_cast<std::size_t>(id - 1)];
}

std::vector<double> numeric_cutpoints(std::span<const double> present_values, int cuts,
                                      Binning strategy) {
  if (cuts < 1) throw UsageError("number of cuts must be at least 1");
  std::vector<double> sorted(present_values.begin(), present_values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> out;
  if (sorted.empty()) return out;

  const std::size_t n = sorted.size();
  const auto c = static_cast<std::size_t>(cuts);
  for (std::size_t j = 1; j <= c; ++j) {
    double t = 0.0;
    if (strategy == Binning::equal_frequency) {
      const std::size_t rank = (j * n + c) / (c + 1);  // ceil(j*n/(c+1))
      t = sorted[std::max<std::size_t>(rank, 1) - 1];
    } else {
      const double lo = sorted.front();
      const double hi = sorted.back();
      const double bound = lo + static_cast<double>(j) * (hi - lo) / static_cast<double>(c + 1);
      const auto it = std::upper_bound(sorted.begin(), sorted.end(), bound);
      t = *std::prev(it);  // it != begin since bound >= lo
    }
    out.push_back(t);
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PropositionPool build_propositions(const DataTable& table, int cuts, Binning strategy) {
  if (cuts < 1) throw UsageError("number of cuts must be at least 1");
  const std::size_t rows = table.rows();
  std::vector<Proposition> props;

  const auto emit = [&](std::size_t attr, Relation rel, std::variant<double, std::string> threshold,
                        std::string label) {
    Proposition p;
    p.attribute = attr;
    p.relation = rel;
    p.threshold = std::move(threshold);
    p.label = std::move(label);
    p.extension = RowSet(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      if (p.holds(table, r)) p.extension.insert(r);
    }
    if (p.extension.empty() || p.extension.is_full()) return;
    p.id = static_cast<int>(props.size() + 1);
    props.push_back(std::move(p));
  };

  for (std::size_t a = 0; a < table.attributes().size(); ++a) {
    const AttributeColumn& column = table.attribute(a);
    switch (column.kind) {
      case AttributeKind::numeric: {
        std::vector<double> present;
        for (const auto& x : column.numbers) {
          if (x) present.push_back(*x);
        }
        std::sort(present.begin(), present.end());
        const auto thresholds = numeric_cutpoints(present, cuts, strategy);
        for (double t : thresholds) {
          emit(a, Relation::less_equal, t, column.name + " <= " + format_number(t));
        }
        for (double t : thresholds) {
          const auto next = std::upper_bound(present.begin(), present.end(), t);
          if (next == present.end()) continue;
          emit(a, Relation::greater_equal, *next, column.name + " >= " + format_number(*next));
        }
        break;
      }
      case AttributeKind::categorical: {
        std::set<std::string> values;
        for (const auto& x : column.labels) {
          if (x) values.insert(*x);
        }
        for (const auto& v : values) emit(a, Relation::equal, v, column.name + " = " + v);
        break;
      }
      case AttributeKind::ordinal: {
        for (const auto& level : column.levels) {
          emit(a, Relation::less, level, column.name + " < " + level);
        }
        for (const auto& level : column.levels) {
          emit(a, Relation::greater, level, column.name + " > " + level);
        }
        break;
      }
    }
  }
  return PropositionPool(rows, std::move(props));
}

}  // namespace dcsd
