#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace multivend {

using CsvValue = std::variant<std::string, std::int64_t, double>;

// Shortest decimal string that round-trips to the same value, e.g. "15"
// for 15.0 and "0.1" for 0.1.
std::string format_number(double value);

// RFC-4180-style CSV: header row first, LF line endings, fields quoted
// when they carry a comma, quote, CR or LF, quotes doubled. Requires at
// least one data row and rectangular rows (InvalidParameters otherwise).
std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<CsvValue>>& rows);

// render_csv straight to a file; throws IoError when the file cannot be
// written.
void emit_csv(const std::vector<std::string>& header,
              const std::vector<std::vector<CsvValue>>& rows,
              const std::string& path);

}  // namespace multivend
