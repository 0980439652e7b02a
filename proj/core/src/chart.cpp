#include "co2cast/chart.hpp"

#include "co2cast/errors.hpp"
#include "co2cast/format.hpp"

#include <algorithm>
#include <cmath>

namespace co2cast {

namespace {

constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 48.0;

const char* kHistoryColor = "#333333";

const char* series_color(const std::string& name) {
    if (name == "LinearRegression") return "#d62728";
    if (name == "DecisionTree") return "#2ca02c";
    if (name == "RandomForest") return "#ff7f0e";
    if (name == "SVM") return "#9467bd";
    return "#17becf";
}

struct Scale {
    double x_min, x_max, y_min, y_max;
    double plot_w, plot_h;

    double x(double v) const {
        return kMarginLeft + (v - x_min) / (x_max - x_min) * plot_w;
    }
    double y(double v) const {
        return kMarginTop + (y_max - v) / (y_max - y_min) * plot_h;
    }
};

std::string coord(double v) { return format_fixed(v, 2); }

void append_polyline(std::string& svg, const std::vector<double>& xs,
                     const std::vector<double>& ys, const Scale& scale, const char* color,
                     const char* dash) {
    svg += "  <polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\"";
    if (dash) {
        svg += " stroke-dasharray=\"";
        svg += dash;
        svg += "\"";
    }
    svg += " points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) svg += ' ';
        svg += coord(scale.x(xs[i]));
        svg += ',';
        svg += coord(scale.y(ys[i]));
    }
    svg += "\"/>\n";
}

void append_text(std::string& svg, double x, double y, const std::string& text,
                 const char* anchor, int size, const char* extra = "") {
    svg += "  <text x=\"" + coord(x) + "\" y=\"" + coord(y) + "\" font-family=\"sans-serif\"";
    svg += " font-size=\"" + std::to_string(size) + "\" text-anchor=\"";
    svg += anchor;
    svg += "\"";
    svg += extra;
    svg += ">";
    svg += text;
    svg += "</text>\n";
}

// largest of 1/2/5 * 10^k giving at most `target` steps
double nice_step(double range, int target) {
    const double raw = range / target;
    double step = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {2.0, 5.0, 10.0}) {
        if (step * m >= raw) return step * m;
    }
    return step * 10.0;
}

} // namespace

std::string emit_chart_svg(const EmissionSeries& series, const ForecastTable* table,
                           const ChartOptions& options) {
    if (series.empty()) throw EmptyInput();

    Scale scale{};
    scale.x_min = series.first_year();
    scale.x_max = series.last_year();
    scale.y_min = series.points.front().value;
    scale.y_max = scale.y_min;
    for (const SeriesPoint& p : series.points) {
        scale.y_min = std::min(scale.y_min, p.value);
        scale.y_max = std::max(scale.y_max, p.value);
    }
    if (table && !table->years.empty()) {
        scale.x_max = std::max(scale.x_max, static_cast<double>(table->years.back()));
        for (const auto& [_, column] : table->columns) {
            for (double v : column) {
                scale.y_min = std::min(scale.y_min, v);
                scale.y_max = std::max(scale.y_max, v);
            }
        }
    }
    const double y_pad = (scale.y_max - scale.y_min) * 0.05 + 1e-9;
    scale.y_min -= y_pad;
    scale.y_max += y_pad;
    if (scale.x_max == scale.x_min) scale.x_max = scale.x_min + 1.0;
    scale.plot_w = options.width - kMarginLeft - kMarginRight;
    scale.plot_h = options.height - kMarginTop - kMarginBottom;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(options.width) + "\" height=\"" + std::to_string(options.height) +
           "\" viewBox=\"0 0 " + std::to_string(options.width) + " " +
           std::to_string(options.height) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const std::string title =
        !options.title.empty()
            ? options.title
            : (series.country_name.empty() ? std::string("CO2 emissions (metric tons per capita)")
                                           : "CO2 emissions in " + series.country_name +
                                                 " (metric tons per capita)");
    append_text(svg, options.width / 2.0, 24.0, title, "middle", 14,
                " font-weight=\"bold\"");

    // axes
    const double x0 = kMarginLeft, x1 = options.width - kMarginRight;
    const double y0 = options.height - kMarginBottom, y1 = kMarginTop;
    svg += "  <line x1=\"" + coord(x0) + "\" y1=\"" + coord(y0) + "\" x2=\"" + coord(x1) +
           "\" y2=\"" + coord(y0) + "\" stroke=\"#888888\"/>\n";
    svg += "  <line x1=\"" + coord(x0) + "\" y1=\"" + coord(y0) + "\" x2=\"" + coord(x0) +
           "\" y2=\"" + coord(y1) + "\" stroke=\"#888888\"/>\n";

    // x ticks every 10 years
    const int tick_start = static_cast<int>(std::ceil(scale.x_min / 10.0)) * 10;
    for (int year = tick_start; year <= static_cast<int>(scale.x_max); year += 10) {
        const double tx = scale.x(year);
        svg += "  <line x1=\"" + coord(tx) + "\" y1=\"" + coord(y0) + "\" x2=\"" + coord(tx) +
               "\" y2=\"" + coord(y0 + 5.0) + "\" stroke=\"#888888\"/>\n";
        append_text(svg, tx, y0 + 18.0, std::to_string(year), "middle", 11);
    }

    // y ticks
    const double step = nice_step(scale.y_max - scale.y_min, 6);
    for (double v = std::ceil(scale.y_min / step) * step; v <= scale.y_max; v += step) {
        const double ty = scale.y(v);
        svg += "  <line x1=\"" + coord(x0 - 5.0) + "\" y1=\"" + coord(ty) + "\" x2=\"" +
               coord(x0) + "\" y2=\"" + coord(ty) + "\" stroke=\"#888888\"/>\n";
        append_text(svg, x0 - 8.0, ty + 4.0, format_fixed(v, step < 1.0 ? 1 : 0), "end", 11);
    }

    // history polyline
    std::vector<double> hx, hy;
    hx.reserve(series.points.size());
    hy.reserve(series.points.size());
    for (const SeriesPoint& p : series.points) {
        hx.push_back(p.year);
        hy.push_back(p.value);
    }
    append_polyline(svg, hx, hy, scale, kHistoryColor, nullptr);

    // forecast polylines + legend
    double legend_y = kMarginTop + 10.0;
    const double legend_x = x1 - 150.0;
    append_text(svg, legend_x + 22.0, legend_y + 4.0, "history", "start", 11);
    svg += "  <line x1=\"" + coord(legend_x) + "\" y1=\"" + coord(legend_y) + "\" x2=\"" +
           coord(legend_x + 18.0) + "\" y2=\"" + coord(legend_y) + "\" stroke=\"" +
           kHistoryColor + "\" stroke-width=\"1.5\"/>\n";
    legend_y += 16.0;

    if (table && !table->years.empty()) {
        std::vector<double> fx;
        fx.reserve(table->years.size());
        for (int year : table->years) fx.push_back(year);
        for (const auto& [name, column] : table->columns) {
            const char* color = series_color(name);
            append_polyline(svg, fx, column, scale, color, "4 3");
            svg += "  <line x1=\"" + coord(legend_x) + "\" y1=\"" + coord(legend_y) +
                   "\" x2=\"" + coord(legend_x + 18.0) + "\" y2=\"" + coord(legend_y) +
                   "\" stroke=\"" + color + "\" stroke-width=\"1.5\" stroke-dasharray=\"4 3\"/>\n";
            append_text(svg, legend_x + 22.0, legend_y + 4.0, name, "start", 11);
            legend_y += 16.0;
        }
    }

    append_text(svg, (x0 + x1) / 2.0, options.height - 12.0, "Year", "middle", 12);
    svg += "</svg>\n";
    return svg;
}

} // namespace co2cast
