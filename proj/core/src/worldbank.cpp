#include "co2cast/worldbank.hpp"

#include "co2cast/errors.hpp"
#include "co2cast/format.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace co2cast {

namespace {

struct CsvRecord {
    std::vector<std::string> cells;
    std::string raw;         // record text without the terminating newline
    std::size_t line_no = 0; // 1-based line of the record's first character
};

// RFC-4180-style tokenizer: quoted fields may contain commas, newlines and
// doubled quotes. Works on the whole stream so quoted newlines cannot split
// a record.
std::vector<CsvRecord> tokenize_csv(std::string_view text) {
    std::vector<CsvRecord> records;
    CsvRecord rec;
    rec.line_no = 1;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    std::size_t line = 1;
    std::size_t record_start = 0;
    std::size_t i = 0;

    auto end_field = [&]() {
        rec.cells.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
    };
    auto end_record = [&](std::size_t raw_end) {
        end_field();
        rec.raw = std::string(text.substr(record_start, raw_end - record_start));
        records.push_back(std::move(rec));
        rec = CsvRecord{};
        rec.line_no = line;
    };

    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            in_quotes = true;
            field_was_quoted = true;
            break;
        case ',':
            end_field();
            break;
        case '\r':
            if (i + 1 < text.size() && text[i + 1] == '\n') break; // handled by \n
            ++line;
            end_record(i);
            record_start = i + 1;
            rec.line_no = line;
            break;
        case '\n':
            ++line;
            end_record(i > 0 && text[i - 1] == '\r' ? i - 1 : i);
            record_start = i + 1;
            rec.line_no = line;
            break;
        default:
            field.push_back(c);
        }
    }
    if (!field.empty() || field_was_quoted || !rec.cells.empty()) {
        end_record(text.size());
    }
    return records;
}

bool is_blank_record(const CsvRecord& rec) {
    return rec.cells.size() == 1 && rec.cells[0].empty();
}

bool parse_year(const std::string& cell, int& year) {
    if (cell.size() != 4) return false;
    int v = 0;
    for (char c : cell) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    year = v;
    return true;
}

} // namespace

RawIndicatorFile parse_worldbank_csv(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3); // UTF-8 BOM
    const std::vector<CsvRecord> records = tokenize_csv(text);

    std::size_t header_at = records.size();
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!records[i].cells.empty() && records[i].cells[0] == "Country Name") {
            header_at = i;
            break;
        }
    }
    if (header_at == records.size()) throw MissingHeader();

    RawIndicatorFile file;
    for (std::size_t i = 0; i < header_at; ++i) {
        file.metadata_lines.push_back(records[i].raw);
    }

    const CsvRecord& header = records[header_at];
    constexpr std::size_t kIdentityColumns = 4;
    if (header.cells.size() < kIdentityColumns + 1) throw MissingHeader();

    // Year columns follow the four identity columns, strictly increasing.
    // Real downloads terminate every line with a comma; tolerate the empty
    // trailing column(s) that produces.
    std::size_t col = kIdentityColumns;
    int prev_year = 0;
    for (; col < header.cells.size(); ++col) {
        int year = 0;
        if (!parse_year(header.cells[col], year)) break;
        if (!file.years.empty() && year <= prev_year) throw MissingHeader();
        file.years.push_back(year);
        prev_year = year;
    }
    if (file.years.empty()) throw MissingHeader();
    for (std::size_t j = col; j < header.cells.size(); ++j) {
        if (!header.cells[j].empty()) throw MissingHeader();
    }

    const std::size_t width = header.cells.size();
    const std::size_t year_count = file.years.size();

    for (std::size_t i = header_at + 1; i < records.size(); ++i) {
        const CsvRecord& rec = records[i];
        if (is_blank_record(rec)) continue; // trailing blank line
        if (rec.cells.size() != width) throw RaggedRow(rec.line_no, rec.cells.size(), width);
        CountryRow row;
        row.country_name = rec.cells[0];
        row.country_code = rec.cells[1];
        row.indicator_name = rec.cells[2];
        row.indicator_code = rec.cells[3];
        row.cells.assign(rec.cells.begin() + kIdentityColumns,
                         rec.cells.begin() + kIdentityColumns + static_cast<long>(year_count));
        file.rows.push_back(std::move(row));
    }
    return file;
}

EmissionSeries extract_series(const RawIndicatorFile& file, std::string_view country_code,
                              int year_lo, int year_hi) {
    if (year_lo > year_hi) throw Error("bad year range: lo > hi");
    if (file.years.empty() || year_lo < file.years.front() || year_hi > file.years.back()) {
        throw Error("year range " + std::to_string(year_lo) + ":" + std::to_string(year_hi) +
                    " outside the file's columns " + std::to_string(file.years.front()) + ":" +
                    std::to_string(file.years.back()));
    }

    const CountryRow* match = nullptr;
    for (const CountryRow& row : file.rows) {
        if (row.country_code == country_code) {
            if (match) {
                throw Error("country code '" + std::string(country_code) +
                            "' appears more than once");
            }
            match = &row;
        }
    }
    if (!match) throw UnknownCountry(std::string(country_code));

    EmissionSeries series;
    series.country_name = match->country_name;
    series.country_code = match->country_code;
    series.indicator_code = match->indicator_code;

    for (std::size_t i = 0; i < file.years.size(); ++i) {
        const int year = file.years[i];
        if (year < year_lo || year > year_hi) continue;
        double value = 0.0;
        if (parse_double(match->cells[i], value) && std::isfinite(value)) {
            if (value < 0.0) throw NegativeValue(year, value);
            series.points.push_back({year, value});
        } else {
            series.dropped_years.push_back(year);
        }
    }
    if (series.points.empty()) throw EmptySeries(match->country_code);
    return series;
}

std::string write_series_csv(const EmissionSeries& series) {
    std::string out = "year,value\n";
    for (const SeriesPoint& p : series.points) {
        out += std::to_string(p.year);
        out += ',';
        out += format_double(p.value);
        out += '\n';
    }
    return out;
}

EmissionSeries read_series_csv(std::string_view text) {
    EmissionSeries series;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = end + 1;
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != "year,value") throw Error("series file: expected 'year,value' header");
            continue;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos) {
            throw Error("series file: malformed line " + std::to_string(line_no));
        }
        double year = 0.0, value = 0.0;
        if (!parse_double(line.substr(0, comma), year) ||
            !parse_double(line.substr(comma + 1), value) || !std::isfinite(value)) {
            throw Error("series file: malformed line " + std::to_string(line_no));
        }
        if (value < 0.0) throw NegativeValue(static_cast<int>(year), value);
        const int y = static_cast<int>(year);
        if (!series.points.empty() && y <= series.points.back().year) {
            throw Error("series file: years not strictly ascending at line " +
                        std::to_string(line_no));
        }
        series.points.push_back({y, value});
    }
    if (series.points.empty()) throw EmptySeries("series file");
    return series;
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void spit_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("short write to '" + path + "'");
}

} // namespace co2cast
