#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "msquant/simulate.hpp"

namespace msq::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One observation per line; blank lines and `#` comments are skipped.
/// Numbers use the C locale regardless of the process locale.
std::vector<double> parse_observations(std::string_view text);
std::vector<double> read_observations(const std::filesystem::path& path);

/// Locale-independent shortest round-trip decimal representation.
std::string format_number(double value);

/// Parses a full-string decimal number; throws ParseError otherwise.
double parse_number(std::string_view text);

/// Writes via a temporary sibling file and a rename, so readers never see a
/// partial file. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// `#` metadata lines, then `alpha,quantile` rows.
std::string quantile_csv(const QuantileTable& table);

struct QuantileRow {
  double alpha;
  double quantile;
  friend bool operator==(const QuantileRow&, const QuantileRow&) = default;
};

std::vector<QuantileRow> parse_quantile_csv(std::string_view text);

/// Splits "a,b,c" into trimmed fields.
std::vector<std::string> split_list(std::string_view text);

}  // namespace msq::io
