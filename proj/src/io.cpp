#include "msquant/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include <fmt/format.h>

namespace msq::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

double parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(fmt::format("not a number: '{}'", text));
  }
  return value;
}

std::vector<double> parse_observations(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      values.push_back(parse_number(line));
    } catch (const ParseError& e) {
      throw ParseError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  if (values.empty()) throw ParseError("no observations found");
  return values;
}

std::vector<double> read_observations(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_observations(buf.str());
}

std::string format_number(double value) { return fmt::format("{}", value); }

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError(fmt::format("write failed for '{}'", path.string()));
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError(fmt::format("cannot move output into '{}': {}", path.string(), ec.message()));
  }
}

std::string quantile_csv(const QuantileTable& table) {
  std::string out;
  out += fmt::format("# model={}\n", table.model);
  out += fmt::format("# n={}\n", table.n);
  out += fmt::format("# reps={}\n", table.reps);
  out += fmt::format("# seed={}\n", table.seed);
  out += "alpha,quantile\n";
  for (const auto& [alpha, q] : table.quantiles) {
    out += format_number(alpha) + "," + format_number(q) + "\n";
  }
  return out;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  while (true) {
    const auto comma = text.find(',');
    out.emplace_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

std::vector<QuantileRow> parse_quantile_csv(std::string_view text) {
  std::vector<QuantileRow> rows;
  bool header = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      if (line != "alpha,quantile") throw ParseError("quantile csv: missing header");
      header = true;
      continue;
    }
    const auto fields = split_list(line);
    if (fields.size() != 2) throw ParseError("quantile csv: expected two fields");
    rows.push_back({parse_number(fields[0]), parse_number(fields[1])});
  }
  if (!header) throw ParseError("quantile csv: missing header");
  return rows;
}

}  // namespace msq::io
