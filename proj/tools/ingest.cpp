#include "ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "ineqlab/error.hpp"

namespace ineqlab::cli {

namespace {

std::string at_line(std::size_t line, const std::string& msg) { return "line " + std::to_string(line) + ": " + msg; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

CsvTable read_csv(std::istream& in) {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t pos = 0;
    if (text.compare(0, 3, "\xEF\xBB\xBF") == 0) pos = 3;

    CsvTable table;
    std::size_t line = 1;
    bool have_header = false;
    while (pos < text.size()) {
        const std::size_t record_line = line;
        std::vector<std::string> fields;
        std::string field;
        bool quoted = false;
        bool was_quoted = false;
        bool done = false;
        while (!done) {
            if (pos >= text.size()) {
                if (quoted) throw InputError(at_line(record_line, "unterminated quoted field"));
                fields.push_back(std::move(field));
                break;
            }
            const char ch = text[pos++];
            if (quoted) {
                if (ch == '"') {
                    if (pos < text.size() && text[pos] == '"') {
                        field += '"';
                        ++pos;
                    } else {
                        quoted = false;
                    }
                } else {
                    if (ch == '\n') ++line;
                    field += ch;
                }
                continue;
            }
            switch (ch) {
            case '"':
                if (!field.empty() || was_quoted)
                    throw InputError(at_line(record_line, "unexpected quote inside field"));
                quoted = was_quoted = true;
                break;
            case ',':
                fields.push_back(std::move(field));
                field.clear();
                was_quoted = false;
                break;
            case '\r':
                if (pos < text.size() && text[pos] == '\n') ++pos;
                [[fallthrough]];
            case '\n':
                ++line;
                fields.push_back(std::move(field));
                done = true;
                break;
            default:
                if (was_quoted) throw InputError(at_line(record_line, "text after closing quote"));
                field += ch;
            }
        }
        if (fields.size() == 1 && fields.front().empty() && !was_quoted) continue;
        if (!have_header) {
            table.header = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != table.header.size())
            throw InputError(at_line(record_line, "expected " + std::to_string(table.header.size()) + " fields, got " +
                                                      std::to_string(fields.size())));
        table.rows.push_back(std::move(fields));
        table.lines.push_back(record_line);
    }
    if (!have_header || table.rows.empty()) throw EmptyPopulation();
    return table;
}

Dataset to_dataset(const CsvTable& table, const std::string& value_col) {
    std::size_t vi = table.header.size() - 1;
    if (!value_col.empty()) {
        auto it = std::find(table.header.begin(), table.header.end(), value_col);
        if (it == table.header.end()) throw InputError("value column '" + value_col + "' not found in header");
        vi = static_cast<std::size_t>(it - table.header.begin());
    }
    std::vector<std::string> attrs;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c != vi) attrs.push_back(table.header[c]);
    }
    std::vector<Record> records;
    records.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::size_t line = table.lines[r];
        const std::string_view raw = trim(row[vi]);
        double v = 0.0;
        std::string_view digits = raw;
        if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || !std::isfinite(v))
            throw InputError(at_line(line, "value '" + std::string(raw) + "' is not a finite number"));
        if (v < 0.0) throw InputError(at_line(line, "value " + std::string(raw) + " is negative"));
        Record rec{v, {}};
        rec.categories.reserve(attrs.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c == vi) continue;
            if (row[c].empty())
                throw InputError(at_line(line, "missing category for attribute '" + table.header[c] + "'"));
            rec.categories.push_back(row[c]);
        }
        records.push_back(std::move(rec));
    }
    return Dataset(std::move(attrs), std::move(records));
}

Dataset ingest(const std::string& path, const std::string& value_col) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return to_dataset(read_csv(in), value_col);
}

} // namespace ineqlab::cli
