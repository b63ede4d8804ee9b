#include "kaonbell/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "kaonbell/errors.hpp"

namespace kaonbell {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

double parse_cell(const std::string& cell, std::size_t line_no) {
  if (cell.empty()) return std::numeric_limits<double>::quiet_NaN();
  double x = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, x);
  if (ec != std::errc{} || ptr != end) {
    throw DomainError(fmt::format("csv line {}: cannot parse '{}'", line_no, cell));
  }
  return x;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return {};
  return fmt::format("{:.6g}", x);
}

void write_csv(std::ostream& out, const ScanTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

std::string to_csv(const ScanTable& table) {
  std::ostringstream out;
  write_csv(out, table);
  return out.str();
}

ScanTable read_csv(std::istream& in) {
  ScanTable table;
  std::string line;
  if (!std::getline(in, line) || line.empty()) throw DomainError("csv: missing header row");
  table.columns = split(line);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto cells = split(line);
    if (cells.size() != table.columns.size()) {
      throw DomainError(fmt::format("csv line {}: expected {} cells, got {}", line_no,
                                    table.columns.size(), cells.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(parse_cell(c, line_no));
    table.rows.push_back(std::move(row));
  }
  return table;
}

ScanTable parse_csv(const std::string& text) {
  std::istringstream in(text);
  return read_csv(in);
}

}  // namespace kaonbell
