#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcsd {

using CsvRecord = std::vector<std::string>;

// RFC-4180 reader: comma separated, double-quote escaping, CRLF or LF line
// ends, quoted fields may span lines. A leading UTF-8 byte-order mark is
// skipped. Blank lines are ignored.
std::vector<CsvRecord> read_csv_records(std::istream& in);

// Quotes a field when it contains a comma, quote, or line break.
std::string csv_escape(std::string_view field);

// Parses a finite number occupying the whole (trimmed) field.
std::optional<double> parse_number(std::string_view field);

// True for the spellings treated as an absent value: "", "?", "NA", "N/A",
// "null", "nan" (case-insensitive, surrounding whitespace ignored).
bool is_missing_token(std::string_view field);

std::string_view trim(std::string_view s);

}  // namespace dcsd
