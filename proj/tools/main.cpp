// co2cast command line: ingest | evaluate | forecast.

#include "co2cast/chart.hpp"
#include "co2cast/errors.hpp"
#include "co2cast/format.hpp"
#include "co2cast/pipeline.hpp"
#include "co2cast/version.hpp"
#include "co2cast/worldbank.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace co2cast;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;

struct CommonOptions {
    std::string input;
    std::string country = "CAN";
    std::optional<std::string> years;
    std::string horizon = "2019:2030";
    double ratio = 0.9;
    std::string split = "random";
    std::uint64_t seed = 42;
    std::string models = "linear,tree,forest,svm";
    bool refit_full = true;
    bool allow_overlap = false;
    std::string out_dir = ".";
    std::string from_manifest;

    // per-model hyperparameters
    int max_depth = -1; // -1 = unlimited
    int min_samples_split = 2;
    int min_samples_leaf = 1;
    int trees = 100;
    bool no_bootstrap = false;
    std::string kernel = "rbf";
    double svr_c = 1.0;
    double svr_epsilon = 0.1;
    double svr_gamma = 1.0;
    long svr_max_passes = 0;
};

std::pair<int, int> parse_year_range(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) {
        throw Error("bad range '" + text + "' (expected A:B)");
    }
    try {
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw Error("bad range '" + text + "' (expected A:B)");
    }
}

std::vector<ModelKind> parse_models(const std::string& csv) {
    std::vector<ModelKind> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        const std::string token = csv.substr(pos, comma - pos);
        if (!token.empty()) out.push_back(model_kind_from_string(token));
        pos = comma + 1;
    }
    if (out.empty()) throw Error("no models selected");
    return out;
}

PipelineConfig build_config(const CommonOptions& opt) {
    PipelineConfig cfg;
    cfg.models = parse_models(opt.models);
    cfg.country_code = opt.country;
    cfg.ratio = opt.ratio;
    cfg.strategy = split_strategy_from_string(opt.split);
    cfg.seed = opt.seed;
    cfg.refit_full = opt.refit_full;
    std::tie(cfg.horizon_lo, cfg.horizon_hi) = parse_year_range(opt.horizon);
    cfg.allow_overlap = opt.allow_overlap;
    if (opt.max_depth >= 0) cfg.tree_params.max_depth = opt.max_depth;
    cfg.tree_params.min_samples_split = opt.min_samples_split;
    cfg.tree_params.min_samples_leaf = opt.min_samples_leaf;
    cfg.forest_trees = opt.trees;
    cfg.forest_bootstrap = !opt.no_bootstrap;
    cfg.kernel.kind = kernel_kind_from_string(opt.kernel);
    cfg.kernel.gamma = opt.svr_gamma;
    cfg.svr_params.C = opt.svr_c;
    cfg.svr_params.epsilon = opt.svr_epsilon;
    cfg.svr_params.max_passes = opt.svr_max_passes;
    return cfg;
}

EmissionSeries load_series(const CommonOptions& opt) {
    EmissionSeries series = read_series_csv(slurp_file(opt.input));
    if (opt.years) {
        const auto [lo, hi] = parse_year_range(*opt.years);
        EmissionSeries filtered = series;
        filtered.points.clear();
        for (const SeriesPoint& p : series.points) {
            if (p.year >= lo && p.year <= hi) filtered.points.push_back(p);
        }
        if (filtered.points.empty()) throw EmptySeries(opt.input);
        return filtered;
    }
    return series;
}

int cmd_ingest(const CommonOptions& opt, const std::string& out_file) {
    const auto [lo, hi] = parse_year_range(opt.years.value_or("1960:2018"));
    const RawIndicatorFile file = parse_worldbank_csv(slurp_file(opt.input));
    const EmissionSeries series = extract_series(file, opt.country, lo, hi);
    spit_file(out_file, write_series_csv(series));
    if (!series.dropped_years.empty()) {
        std::cerr << "co2cast: dropped " << series.dropped_years.size() << " year(s) for "
                  << series.country_code << ":";
        for (int year : series.dropped_years) std::cerr << ' ' << year;
        std::cerr << '\n';
    }
    std::cerr << "co2cast: wrote " << series.points.size() << " points to " << out_file
              << '\n';
    return kExitOk;
}

int cmd_evaluate(const CommonOptions& opt) {
    PipelineConfig cfg = build_config(opt);
    cfg.allow_overlap = true; // no forecasting here, overlap is irrelevant
    cfg.refit_full = false;   // metrics come from the split fit only
    const EmissionSeries series = load_series(opt);
    cfg.horizon_lo = series.last_year() + 1;
    cfg.horizon_hi = cfg.horizon_lo;
    const PipelineResult result = run_pipeline(series, cfg);
    if (!result.svr_converged) {
        std::cerr << "co2cast: warning: SVR did not converge within its update budget\n";
    }
    std::cout << emit_metrics_csv(result.metrics);
    return kExitOk;
}

int cmd_forecast(const CommonOptions& opt) {
    CommonOptions effective = opt;
    PipelineConfig cfg;
    std::string expected_fingerprint;

    if (!opt.from_manifest.empty()) {
        ManifestConfig mc;
        try {
            mc = manifest_to_config(parse_manifest(slurp_file(opt.from_manifest)));
        } catch (const Error&) {
            throw;
        } catch (const std::exception& e) {
            throw Error(std::string("manifest: ") + e.what());
        }
        cfg = mc.config;
        cfg.allow_overlap = true; // the recorded run already validated its horizon
        expected_fingerprint = mc.data_fingerprint;
        effective.years = std::to_string(mc.year_lo) + ":" + std::to_string(mc.year_hi);
    } else {
        cfg = build_config(opt);
    }

    const EmissionSeries series = load_series(effective);
    if (!expected_fingerprint.empty()) {
        const std::string actual = to_hex(fnv1a64(write_series_csv(series)));
        if (actual != expected_fingerprint) {
            throw Error("manifest replay: data fingerprint mismatch (manifest " +
                        expected_fingerprint + ", input " + actual + ")");
        }
    }

    const PipelineResult result = run_pipeline(series, cfg);
    if (!result.svr_converged) {
        std::cerr << "co2cast: warning: SVR did not converge within its update budget\n";
    }

    namespace fs = std::filesystem;
    fs::create_directories(opt.out_dir);
    const fs::path dir(opt.out_dir);
    spit_file((dir / "forecast.csv").string(), emit_table_csv(result.table));
    spit_file((dir / "metrics.csv").string(), emit_metrics_csv(result.metrics));
    spit_file((dir / "chart.svg").string(), emit_chart_svg(series, &result.table));
    spit_file((dir / "manifest.txt").string(), result.manifest.text());
    std::cerr << "co2cast: wrote forecast.csv, metrics.csv, chart.svg, manifest.txt to "
              << dir.string() << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CO2 per-capita emission forecasting toolkit"};
    app.set_version_flag("--version", co2cast::kToolkitId);
    app.require_subcommand(1);

    CommonOptions opt;
    std::string ingest_out = "series.csv";

    auto add_common = [&](CLI::App* cmd, bool with_pipeline) {
        cmd->add_option("--input", opt.input, "input file")->required();
        cmd->add_option("--years", opt.years,
                        "year range A:B (ingest default 1960:2018, otherwise the whole series)");
        if (with_pipeline) {
            cmd->add_option("--ratio", opt.ratio, "train fraction in (0,1)");
            cmd->add_option("--split", opt.split, "split strategy: random|chronological");
            cmd->add_option("--seed", opt.seed, "split and bagging seed");
            cmd->add_option("--models", opt.models, "comma list of linear,tree,forest,svm");
            cmd->add_option("--trees", opt.trees, "forest size");
            cmd->add_flag("--no-bootstrap", opt.no_bootstrap, "disable bagging resamples");
            cmd->add_option("--max-depth", opt.max_depth, "tree depth cap (-1 = unlimited)");
            cmd->add_option("--min-samples-split", opt.min_samples_split,
                            "smallest splittable node");
            cmd->add_option("--min-samples-leaf", opt.min_samples_leaf, "smallest leaf");
            cmd->add_option("--kernel", opt.kernel, "svr kernel: rbf|linear");
            cmd->add_option("--svr-c", opt.svr_c, "svr box constraint C");
            cmd->add_option("--svr-epsilon", opt.svr_epsilon, "svr tube half-width");
            cmd->add_option("--svr-gamma", opt.svr_gamma, "rbf gamma (standardized x)");
            cmd->add_option("--svr-max-passes", opt.svr_max_passes,
                            "smo update cap (0 = 1000 per sample)");
        }
    };

    CLI::App* ingest = app.add_subcommand("ingest", "extract a country series from a "
                                                    "World Bank indicator CSV");
    add_common(ingest, false);
    ingest->add_option("--country", opt.country, "3-letter country code");
    ingest->add_option("--out", ingest_out, "output series file");

    CLI::App* evaluate = app.add_subcommand("evaluate", "train on a split and print the "
                                                        "test metric comparison");
    add_common(evaluate, true);
    evaluate->add_option("--country", opt.country, "label recorded in outputs");

    CLI::App* forecast = app.add_subcommand("forecast", "train, score and forecast the "
                                                        "horizon years");
    add_common(forecast, true);
    forecast->add_option("--country", opt.country, "label recorded in the manifest");
    forecast->add_option("--horizon", opt.horizon, "forecast years A:B");
    forecast->add_flag("--refit-full,!--no-refit-full", opt.refit_full,
                       "refit on the full series before forecasting");
    forecast->add_flag("--allow-overlap", opt.allow_overlap,
                       "allow a horizon overlapping the data years");
    forecast->add_option("--out", opt.out_dir, "output directory");
    forecast->add_option("--from-manifest", opt.from_manifest,
                         "replay an earlier run's configuration (overrides pipeline flags)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (ingest->parsed()) return cmd_ingest(opt, ingest_out);
        if (evaluate->parsed()) return cmd_evaluate(opt);
        if (forecast->parsed()) return cmd_forecast(opt);
        return kExitBadInput;
    } catch (const co2cast::Error& e) {
        std::cerr << "co2cast: error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "co2cast: internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
