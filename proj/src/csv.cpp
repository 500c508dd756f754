#include "multivend/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>

#include "multivend/errors.hpp"

namespace multivend {

std::string format_number(double value) {
    std::array<char, 32> buffer{};
    const auto [end, ec] =
        std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), end);
}

namespace {

std::string escape_field(const std::string& field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string render_value(const CsvValue& value) {
    if (const auto* text = std::get_if<std::string>(&value)) {
        return escape_field(*text);
    }
    if (const auto* integer = std::get_if<std::int64_t>(&value)) {
        return std::to_string(*integer);
    }
    return format_number(std::get<double>(value));
}

}  // namespace

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<CsvValue>>& rows) {
    if (header.empty()) {
        throw InvalidParameters("csv output requires a header");
    }
    if (rows.empty()) {
        throw InvalidParameters("csv output requires at least one row");
    }
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += escape_field(header[i]);
    }
    out += '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size()) {
            throw InvalidParameters("csv rows must match the header width");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += render_value(row[i]);
        }
        out += '\n';
    }
    return out;
}

void emit_csv(const std::vector<std::string>& header,
              const std::vector<std::vector<CsvValue>>& rows,
              const std::string& path) {
    const std::string text = render_csv(header, rows);
    std::ofstream stream(path, std::ios::binary);
    if (!stream) {
        throw IoError("cannot open \"" + path + "\" for writing");
    }
    stream.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!stream) {
        throw IoError("failed writing \"" + path + "\"");
    }
}

}  // namespace multivend
