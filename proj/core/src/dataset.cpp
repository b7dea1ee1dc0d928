#include "dcsd/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "dcsd/csv.hpp"
#include "dcsd/error.hpp"

namespace dcsd {

std::string_view to_string(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::numeric:
      return "numeric";
    case AttributeKind::categorical:
      return "categorical";
    case AttributeKind::ordinal:
      return "ordinal";
  }
  return "unknown";
}

std::optional<AttributeKind> parse_attribute_kind(std::string_view name) {
  if (name == "numeric") return AttributeKind::numeric;
  if (name == "categorical") return AttributeKind::categorical;
  if (name == "ordinal") return AttributeKind::ordinal;
  return std::nullopt;
}

std::optional<std::size_t> AttributeColumn::level_rank(std::size_t row) const {
  const auto& label = labels[row];
  if (!label) return std::nullopt;
  const auto it = std::find(levels.begin(), levels.end(), *label);
  if (it == levels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - levels.begin());
}

DataTable::DataTable(std::string target_name, std::vector<double> target,
                     std::vector<AttributeColumn> attributes, std::size_t dropped_rows)
    : target_name_(std::move(target_name)),
      target_(std::move(target)),
      attributes_(std::move(attributes)),
      dropped_rows_(dropped_rows) {
  for (double y : target_) {
    if (!std::isfinite(y)) throw DataError("target '" + target_name_ + "' has a non-finite value");
  }
  for (const auto& column : attributes_) {
    if (column.size() != target_.size()) {
      throw DataError("attribute '" + column.name + "' has " + std::to_string(column.size()) +
                      " values for " + std::to_string(target_.size()) + " rows");
    }
    if (column.kind == AttributeKind::ordinal) {
      for (std::size_t r = 0; r < column.labels.size(); ++r) {
        if (column.labels[r] && !column.level_rank(r)) {
          throw DataError("ordinal attribute '" + column.name + "' has unlisted level '" +
                          *column.labels[r] + "'");
        }
      }
    }
  }
}

namespace {

// Levels sorted numerically when all parse as numbers, lexicographically otherwise.
std::vector<std::string> ordered_levels(const std::vector<std::optional<std::string>>& labels) {
  std::set<std::string> distinct;
  for (const auto& l : labels) {
    if (l) distinct.insert(*l);
  }
  std::vector<std::string> levels(distinct.begin(), distinct.end());
  const bool numeric = std::all_of(levels.begin(), levels.end(),
                                   [](const std::string& s) { return parse_number(s).has_value(); });
  if (numeric) {
    std::stable_sort(levels.begin(), levels.end(), [](const std::string& a, const std::string& b) {
      return *parse_number(a) < *parse_number(b);
    });
  }
  return levels;
}

}  // namespace

DataTable read_table(std::istream& in, std::string_view target_column, const LoadOptions& options) {
  const auto records = read_csv_records(in);
  if (records.empty()) throw DataError("CSV input has no header row");
  const CsvRecord& header = records.front();

  std::size_t target_index = header.size();
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (trim(header[c]) == target_column) {
      target_index = c;
      break;
    }
  }
  if (target_index == header.size()) {
    throw DataError("target column '" + std::string(target_column) + "' not found in header");
  }
  for (const auto& [name, kind] : options.type_hints) {
    if (std::none_of(header.begin(), header.end(),
                     [&](const std::string& h) { return trim(h) == name; })) {
      throw DataError("type hint for unknown column '" + name + "'");
    }
  }

  std::vector<double> target;
  std::vector<std::size_t> kept;
  std::size_t dropped = 0;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& rec = records[r];
    if (rec.size() != header.size()) {
      throw DataError("CSV record " + std::to_string(r + 1) + " has " +
                      std::to_string(rec.size()) + " fields, header has " +
                      std::to_string(header.size()));
    }
    const auto y = parse_number(rec[target_index]);
    if (!y) {
      ++dropped;
      continue;
    }
    target.push_back(*y);
    kept.push_back(r);
  }
  if (target.empty()) throw DataError("no rows with a numeric target value");

  std::vector<AttributeColumn> attributes;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c == target_index) continue;
    AttributeColumn column;
    column.name = std::string(trim(header[c]));

    std::vector<std::optional<std::string>> raw;
    raw.reserve(kept.size());
    for (std::size_t r : kept) {
      const std::string& cell = records[r][c];
      if (is_missing_token(cell)) {
        raw.emplace_back();
      } else {
        raw.emplace_back(std::string(trim(cell)));
      }
    }

    if (const auto hint = options.type_hints.find(column.name); hint != options.type_hints.end()) {
      column.kind = hint->second;
    } else {
      const bool all_numeric = std::all_of(raw.begin(), raw.end(), [](const auto& v) {
        return !v || parse_number(*v).has_value();
      });
      column.kind = all_numeric ? AttributeKind::numeric : AttributeKind::categorical;
    }

    if (column.kind == AttributeKind::numeric) {
      column.numbers.reserve(raw.size());
      for (const auto& v : raw) {
        if (!v) {
          column.numbers.emplace_back();
          continue;
        }
        const auto x = parse_number(*v);
        if (!x) {
          throw DataError("column '" + column.name + "' hinted numeric but has value '" + *v + "'");
        }
        column.numbers.emplace_back(*x);
      }
    } else {
      column.labels = std::move(raw);
      if (column.kind == AttributeKind::ordinal) column.levels = ordered_levels(column.labels);
    }
    attributes.push_back(std::move(column));
  }

  return DataTable(std::string(trim(header[target_index])), std::move(target),
                   std::move(attributes), dropped);
}

DataTable load_csv(const std::filesystem::path& path, std::string_view target_column,
                   const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return read_table(in, target_column, options);
}

}  // namespace dcsd
