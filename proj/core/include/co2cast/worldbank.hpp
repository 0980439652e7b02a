#ifndef CO2CAST_WORLDBANK_HPP
#define CO2CAST_WORLDBANK_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace co2cast {

/// One data row of the wide-format indicator file. `cells` holds the raw
/// year-column fields aligned with RawIndicatorFile::years.
struct CountryRow {
    std::string country_name;
    std::string country_code;
    std::string indicator_name;
    std::string indicator_code;
    std::vector<std::string> cells;
};

/// Parsed World Bank indicator download: metadata envelope, the year columns
/// declared by the header, and one record per country or aggregate.
struct RawIndicatorFile {
    std::vector<std::string> metadata_lines; // verbatim lines before the header
    std::vector<int> years;                  // strictly increasing 4-digit years
    std::vector<CountryRow> rows;
};

struct SeriesPoint {
    int year = 0;
    double value = 0.0;
    friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

/// Cleaned single-country emission series in metric tons CO2 per capita.
/// points are strictly ascending by year; dropped_years lists the years in
/// the requested window whose cells were empty or non-numeric.
struct EmissionSeries {
    std::string country_name;
    std::string country_code;
    std::string indicator_code;
    std::vector<SeriesPoint> points;
    std::vector<int> dropped_years;

    bool empty() const { return points.empty(); }
    int first_year() const { return points.front().year; }
    int last_year() const { return points.back().year; }
};

/// Parse the wide CSV (quoted-field semantics, CRLF or LF). Lines before the
/// row whose first cell is "Country Name" are kept verbatim as metadata.
/// Throws MissingHeader or RaggedRow.
RawIndicatorFile parse_worldbank_csv(std::string_view text);

/// Extract one country's series over [year_lo, year_hi]. Empty/non-numeric
/// cells are dropped, never interpolated; negative values are a parse error
/// for this indicator. Throws UnknownCountry, EmptySeries, NegativeValue.
EmissionSeries extract_series(const RawIndicatorFile& file, std::string_view country_code,
                              int year_lo, int year_hi);

/// Internal series format: plain CSV with header "year,value", ascending
/// years, values in shortest round-trip decimal form.
std::string write_series_csv(const EmissionSeries& series);
EmissionSeries read_series_csv(std::string_view text);

// File-path conveniences used by the CLI.
std::string slurp_file(const std::string& path);
void spit_file(const std::string& path, std::string_view bytes);

} // namespace co2cast

#endif
