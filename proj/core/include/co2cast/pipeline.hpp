#ifndef CO2CAST_PIPELINE_HPP
#define CO2CAST_PIPELINE_HPP

#include "co2cast/dataset.hpp"
#include "co2cast/forest.hpp"
#include "co2cast/linear.hpp"
#include "co2cast/metrics.hpp"
#include "co2cast/svr.hpp"
#include "co2cast/tree.hpp"
#include "co2cast/worldbank.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace co2cast {

enum class ModelKind { Linear, Tree, Forest, Svr };

/// Column name used in tables, metrics and the manifest.
std::string model_name(ModelKind kind);
ModelKind model_kind_from_string(const std::string& token);

/// Everything run_pipeline needs beyond the series itself. Defaults mirror
/// the CLI defaults; the split seed is the only source of randomness.
struct PipelineConfig {
    std::vector<ModelKind> models = {ModelKind::Linear, ModelKind::Tree,
                                     ModelKind::Forest, ModelKind::Svr};
    std::string country_code = "CAN"; // label recorded in the manifest
    double ratio = 0.9;
    SplitStrategy strategy = SplitStrategy::SeededRandom;
    std::uint64_t seed = 42;
    bool refit_full = true;
    int horizon_lo = 2019;
    int horizon_hi = 2030;
    bool allow_overlap = false;

    TreeParams tree_params;
    int forest_trees = 100;
    bool forest_bootstrap = true;
    SvrParams svr_params;
    Kernel kernel = Kernel::rbf();
};

/// Per-year, per-model forecasts; column order is fixed to
/// {LinearRegression, DecisionTree, RandomForest, SVM} restricted to the
/// models actually run.
struct ForecastTable {
    std::vector<int> years;
    std::vector<std::pair<std::string, std::vector<double>>> columns;
};

/// Flat key=value record sufficient to replay a run bit-exactly given the
/// same input series (verified through the data fingerprint).
struct RunManifest {
    std::vector<std::pair<std::string, std::string>> entries;

    std::string text() const;                 // one key=value per line, LF
    const std::string* find(const std::string& key) const;
};

RunManifest parse_manifest(std::string_view text);

/// Replayable configuration recovered from a manifest.
struct ManifestConfig {
    PipelineConfig config;
    std::string country_code;
    int year_lo = 0;
    int year_hi = 0;
    std::string data_fingerprint;
};

ManifestConfig manifest_to_config(const RunManifest& manifest);

/// The models the forecasts came from (refit on the full series unless
/// refit_full was off).
struct FittedModels {
    std::optional<LinearModel> linear;
    std::optional<TreeModel> tree;
    std::optional<ForestModel> forest;
    std::optional<SvrModel> svr;
};

struct PipelineResult {
    std::vector<std::pair<std::string, MetricsReport>> metrics; // split-fit test scores
    ForecastTable table;
    RunManifest manifest;
    FittedModels models;
    bool svr_converged = true;
};

/// Split, fit, score, optionally refit on the full series, forecast the
/// horizon and assemble the manifest. Throws HorizonBeforeData when the
/// horizon does not extend past the data and overlap is not allowed.
PipelineResult run_pipeline(const EmissionSeries& series, const PipelineConfig& config);

/// Forecast CSV: header "Year,<model columns>", 6-decimal fixed point, LF.
std::string emit_table_csv(const ForecastTable& table);

/// Metrics CSV: header "Model,R2,MAE,RMSE", 6-decimal fixed point, LF.
std::string emit_metrics_csv(const std::vector<std::pair<std::string, MetricsReport>>& metrics);

} // namespace co2cast

#endif
