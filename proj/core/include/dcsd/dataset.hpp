#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dcsd {

enum class AttributeKind { numeric, categorical, ordinal };

std::string_view to_string(AttributeKind kind);
std::optional<AttributeKind> parse_attribute_kind(std::string_view name);

// One descriptive column. Numeric columns fill `numbers`; categorical and
// ordinal columns fill `labels`. Absent values are std::nullopt.
struct AttributeColumn {
  std::string name;
  AttributeKind kind = AttributeKind::numeric;
  std::vector<std::optional<double>> numbers;
  std::vector<std::optional<std::string>> labels;
  // Ordinal level order, lowest first. Empty for other kinds.
  std::vector<std::string> levels;

  std::size_t size() const noexcept {
    return kind == AttributeKind::numeric ? numbers.size() : labels.size();
  }
  bool missing(std::size_t row) const {
    return kind == AttributeKind::numeric ? !numbers[row].has_value() : !labels[row].has_value();
  }
  // Position of the row's label in `levels`; nullopt when missing.
  std::optional<std::size_t> level_rank(std::size_t row) const;
};

// Immutable column-oriented dataset: one finite numeric target plus
// descriptive attribute columns of equal length.
class DataTable {
 public:
  DataTable(std::string target_name, std::vector<double> target,
            std::vector<AttributeColumn> attributes, std::size_t dropped_rows = 0);

  std::size_t rows() const noexcept { return target_.size(); }
  std::span<const double> target() const noexcept { return target_; }
  const std::string& target_name() const noexcept { return target_name_; }
  const std::vector<AttributeColumn>& attributes() const noexcept { return attributes_; }
  const AttributeColumn& attribute(std::size_t i) const { return attributes_.at(i); }
  // Rows discarded at load because their target was missing or unparseable.
  std::size_t dropped_rows() const noexcept { return dropped_rows_; }

 private:
  std::string target_name_;
  std::vector<double> target_;
  std::vector<AttributeColumn> attributes_;
  std::size_t dropped_rows_ = 0;
};

struct LoadOptions {
  // Per-column kind overrides; unhinted columns are numeric when every
  // present value parses as a number, categorical otherwise.
  std::map<std::string, AttributeKind, std::less<>> type_hints;
};

DataTable load_csv(const std::filesystem::path& path, std::string_view target_column,
                   const LoadOptions& options = {});
DataTable read_table(std::istream& in, std::string_view target_column,
                     const LoadOptions& options = {});

}  // namespace dcsd
