#include "csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ordpat {

namespace detail {

std::vector<std::vector<std::string>> parse_csv(const std::string& content,
                                                std::vector<std::size_t>& lines) {
    std::vector<std::vector<std::string>> records;
    lines.clear();

    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool field_started = false;   // a quoted field was opened in this cell
    bool record_started = false;  // current record has any content yet
    std::size_t line = 1;
    std::size_t record_line = 1;

    const auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    const auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
        lines.push_back(record_line);
        record_started = false;
    };

    for (std::size_t i = 0; i < content.size(); ++i) {
        const char c = content[i];
        if (!record_started) {
            record_started = true;
            record_line = line;
        }
        if (quoted) {
            if (c == '"') {
                if (i + 1 < content.size() && content[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field.empty() || field_started) {
                    raise(errc::parse, "line " + std::to_string(line) +
                                           ": quote inside an unquoted field");
                }
                quoted = true;
                field_started = true;
                break;
            case ',':
                end_field();
                break;
            case '\r':
                if (i + 1 < content.size() && content[i + 1] == '\n') {
                    end_record();
                    ++line;
                    ++i;
                } else {
                    raise(errc::parse, "line " + std::to_string(line) +
                                           ": bare carriage return outside quotes");
                }
                break;
            case '\n':
                end_record();
                ++line;
                break;
            default:
                if (field_started) {
                    raise(errc::parse, "line " + std::to_string(line) +
                                           ": content after a closing quote");
                }
                field.push_back(c);
                break;
        }
    }
    if (quoted) {
        raise(errc::parse, "line " + std::to_string(record_line) + ": unterminated quoted field");
    }
    if (record_started || !field.empty() || !record.empty()) {
        end_record();  // final record without trailing newline
    }
    return records;
}

}  // namespace detail

namespace {

bool digits_only(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

double parse_cell(const std::string& cell, std::size_t line, const std::string& column) {
    // Tolerate surrounding blanks, nothing else.
    std::size_t begin = 0;
    std::size_t end = cell.size();
    while (begin < end && (cell[begin] == ' ' || cell[begin] == '\t')) ++begin;
    while (end > begin && (cell[end - 1] == ' ' || cell[end - 1] == '\t')) --end;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data() + begin, cell.data() + end, value);
    if (ec != std::errc{} || ptr != cell.data() + end || begin == end) {
        raise(errc::parse, "line " + std::to_string(line) + ", column " + column +
                               ": cell '" + cell + "' is not a decimal number");
    }
    if (!std::isfinite(value)) {
        raise(errc::parse, "line " + std::to_string(line) + ", column " + column +
                               ": cell '" + cell + "' is not finite");
    }
    return value;
}

}  // namespace

std::vector<double> read_series_content(const std::string& content, const std::string& column,
                                        bool header) {
    std::vector<std::size_t> lines;
    const auto records = detail::parse_csv(content, lines);

    std::size_t first_data = 0;
    std::size_t col = 0;
    if (digits_only(column)) {
        if (column.size() > 9) {
            raise(errc::parse, "column index '" + column + "' is out of range");
        }
        col = static_cast<std::size_t>(std::stoull(column));
        if (header) first_data = 1;
    } else {
        if (!header) {
            raise(errc::parse, "column '" + column + "' was requested by name but the file "
                                   "was declared header-less");
        }
        if (records.empty()) raise(errc::empty_column, "file has no header row");
        const auto& head = records.front();
        bool found = false;
        for (std::size_t i = 0; i < head.size(); ++i) {
            if (head[i] == column) {
                col = i;
                found = true;
                break;
            }
        }
        if (!found) {
            raise(errc::parse, "line 1: no column named '" + column + "' in header");
        }
        first_data = 1;
    }

    std::vector<double> values;
    values.reserve(records.size());
    for (std::size_t r = first_data; r < records.size(); ++r) {
        const auto& record = records[r];
        if (col >= record.size()) {
            raise(errc::parse, "line " + std::to_string(lines[r]) + ": record has " +
                                   std::to_string(record.size()) + " fields, column " +
                                   std::to_string(col) + " requested");
        }
        values.push_back(parse_cell(record[col], lines[r], column));
    }
    if (values.empty()) {
        raise(errc::empty_column, "column '" + column + "' has no data rows");
    }
    return values;
}

std::vector<double> read_series(const SeriesFile& file) {
    std::ifstream stream(file.path, std::ios::binary);
    if (!stream) {
        raise(errc::io, "cannot open '" + file.path + "' for reading");
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    if (stream.bad()) {
        raise(errc::io, "read failure on '" + file.path + "'");
    }
    return read_series_content(buffer.str(), file.column, file.header);
}

}  // namespace ordpat
