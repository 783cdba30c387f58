#pragma once

#include <string>
#include <vector>

#include "error.hpp"

namespace ordpat {

/// Where a series comes from: an RFC-4180 CSV file and one column of it,
/// selected by name (requires a header row) or zero-based index.
struct SeriesFile {
    std::string path;
    std::string column = "0";  // digits-only specs are treated as indices
    bool header = true;
};

/// All values of the selected column, in file order. Unparseable or
/// non-finite cells are hard errors carrying the 1-based line number
/// (errc::parse); a column without data rows is errc::empty_column.
std::vector<double> read_series(const SeriesFile& file);

/// Same, over in-memory CSV content (the file-path variant delegates here).
std::vector<double> read_series_content(const std::string& content, const std::string& column,
                                        bool header);

namespace detail {

/// RFC-4180 record splitter; `lines` receives the 1-based physical line on
/// which each record starts. Quoted fields may contain separators, quotes
/// ("" escapes) and line breaks. errc::parse on malformed quoting.
std::vector<std::vector<std::string>> parse_csv(const std::string& content,
                                                std::vector<std::size_t>& lines);

}  // namespace detail

}  // namespace ordpat
