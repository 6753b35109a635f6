#pragma once

#include <istream>
#include <string>
#include <vector>

#include "ineqlab/population.hpp"

namespace ineqlab::cli {

/// Parsed CSV: header plus rows, each with its 1-based source line number.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> lines;
};

/// RFC 4180 reader (quoted fields, doubled quotes, CRLF). Blank lines are
/// skipped. Throws InputError with the offending line number.
CsvTable read_csv(std::istream& in);

/// Builds a Dataset from a table: `value_col` is the indicator, every other
/// column an attribute. An empty `value_col` selects the last column.
Dataset to_dataset(const CsvTable& table, const std::string& value_col);

/// Reads `path`; throws InputError on I/O or parse failures.
Dataset ingest(const std::string& path, const std::string& value_col);

} // namespace ineqlab::cli
