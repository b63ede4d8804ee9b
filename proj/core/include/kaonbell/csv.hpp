#pragma once

#include <iosfwd>
#include <string>

#include "kaonbell/scan.hpp"

namespace kaonbell {

/// Formats a number with 6 significant digits (printf %.6g); NaN becomes "".
std::string format_number(double x);

/// Comma separated, header row, LF line endings, '.' decimal separator.
void write_csv(std::ostream& out, const ScanTable& table);
std::string to_csv(const ScanTable& table);

/// Inverse of write_csv. Empty cells read back as NaN. Throws DomainError on
/// ragged rows or unparsable numbers.
ScanTable read_csv(std::istream& in);
ScanTable parse_csv(const std::string& text);

}  // namespace kaonbell
