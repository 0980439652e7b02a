#ifndef CO2CAST_CHART_HPP
#define CO2CAST_CHART_HPP

#include "co2cast/pipeline.hpp"
#include "co2cast/worldbank.hpp"

#include <string>

namespace co2cast {

struct ChartOptions {
    int width = 960;
    int height = 540;
    std::string title; // defaults to a caption built from the series
};

/// Standalone SVG 1.1 line chart: the historical series as one polyline plus
/// one polyline per forecast column with a legend. Pass table == nullptr for
/// a history-only chart. Output is byte-deterministic for identical inputs.
std::string emit_chart_svg(const EmissionSeries& series, const ForecastTable* table,
                           const ChartOptions& options = {});

} // namespace co2cast

#endif
