#include "co2cast/pipeline.hpp"

#include "co2cast/errors.hpp"
#include "co2cast/format.hpp"
#include "co2cast/version.hpp"

#include <algorithm>
#include <cstdint>

namespace co2cast {

std::string model_name(ModelKind kind) {
    switch (kind) {
    case ModelKind::Linear: return "LinearRegression";
    case ModelKind::Tree: return "DecisionTree";
    case ModelKind::Forest: return "RandomForest";
    case ModelKind::Svr: return "SVM";
    }
    throw Error("unreachable model kind");
}

ModelKind model_kind_from_string(const std::string& token) {
    if (token == "linear" || token == "LinearRegression") return ModelKind::Linear;
    if (token == "tree" || token == "DecisionTree") return ModelKind::Tree;
    if (token == "forest" || token == "RandomForest") return ModelKind::Forest;
    if (token == "svm" || token == "svr" || token == "SVM") return ModelKind::Svr;
    throw Error("unknown model '" + token + "' (expected linear, tree, forest or svm)");
}

namespace {

constexpr ModelKind kCanonicalOrder[] = {ModelKind::Linear, ModelKind::Tree,
                                         ModelKind::Forest, ModelKind::Svr};

std::vector<ModelKind> canonical_models(const std::vector<ModelKind>& requested) {
    std::vector<ModelKind> out;
    for (ModelKind kind : kCanonicalOrder) {
        if (std::find(requested.begin(), requested.end(), kind) != requested.end()) {
            out.push_back(kind);
        }
    }
    if (out.empty()) throw Error("no models selected");
    return out;
}

Dataset to_dataset(const EmissionSeries& series) {
    Dataset data;
    data.xs.reserve(series.points.size());
    data.ys.reserve(series.points.size());
    for (const SeriesPoint& p : series.points) {
        data.xs.push_back(static_cast<double>(p.year));
        data.ys.push_back(p.value);
    }
    return data;
}

std::string join_model_tokens(const std::vector<ModelKind>& models) {
    std::string out;
    for (ModelKind kind : models) {
        if (!out.empty()) out += ',';
        switch (kind) {
        case ModelKind::Linear: out += "linear"; break;
        case ModelKind::Tree: out += "tree"; break;
        case ModelKind::Forest: out += "forest"; break;
        case ModelKind::Svr: out += "svm"; break;
        }
    }
    return out;
}

} // namespace

std::string RunManifest::text() const {
    std::string out;
    for (const auto& [key, value] : entries) {
        out += key;
        out += '=';
        out += value;
        out += '\n';
    }
    return out;
}

const std::string* RunManifest::find(const std::string& key) const {
    for (const auto& [k, v] : entries) {
        if (k == key) return &v;
    }
    return nullptr;
}

RunManifest parse_manifest(std::string_view text) {
    RunManifest manifest;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw Error("manifest: line without '='");
        manifest.entries.emplace_back(std::string(line.substr(0, eq)),
                                      std::string(line.substr(eq + 1)));
    }
    return manifest;
}

namespace {

const std::string& need(const RunManifest& m, const std::string& key) {
    const std::string* v = m.find(key);
    if (!v) throw Error("manifest: missing key '" + key + "'");
    return *v;
}

std::pair<int, int> parse_range(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) throw Error("bad range '" + text + "' (expected A:B)");
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

double need_double(const RunManifest& m, const std::string& key) {
    double out = 0.0;
    if (!parse_double(need(m, key), out)) throw Error("manifest: bad number for '" + key + "'");
    return out;
}

} // namespace

ManifestConfig manifest_to_config(const RunManifest& manifest) {
    ManifestConfig mc;
    PipelineConfig& cfg = mc.config;

    mc.country_code = need(manifest, "data.country");
    mc.data_fingerprint = need(manifest, "data.fingerprint");
    std::tie(mc.year_lo, mc.year_hi) = parse_range(need(manifest, "data.years"));

    cfg.country_code = mc.country_code;
    cfg.ratio = need_double(manifest, "split.ratio");
    cfg.strategy = split_strategy_from_string(need(manifest, "split.strategy"));
    cfg.seed = std::stoull(need(manifest, "split.seed"));
    cfg.refit_full = need(manifest, "refit_full") == "true";
    std::tie(cfg.horizon_lo, cfg.horizon_hi) = parse_range(need(manifest, "horizon"));

    cfg.models.clear();
    const std::string& models = need(manifest, "models");
    std::size_t pos = 0;
    while (pos <= models.size()) {
        std::size_t comma = models.find(',', pos);
        if (comma == std::string::npos) comma = models.size();
        cfg.models.push_back(model_kind_from_string(models.substr(pos, comma - pos)));
        pos = comma + 1;
    }

    const std::string& depth = need(manifest, "tree.max_depth");
    cfg.tree_params.max_depth =
        depth == "none" ? std::nullopt : std::optional<int>(std::stoi(depth));
    cfg.tree_params.min_samples_split = std::stoi(need(manifest, "tree.min_samples_split"));
    cfg.tree_params.min_samples_leaf = std::stoi(need(manifest, "tree.min_samples_leaf"));
    cfg.forest_trees = std::stoi(need(manifest, "forest.n_trees"));
    cfg.forest_bootstrap = need(manifest, "forest.bootstrap") == "true";
    cfg.kernel.kind = kernel_kind_from_string(need(manifest, "svr.kernel"));
    cfg.kernel.gamma = need_double(manifest, "svr.gamma");
    cfg.svr_params.C = need_double(manifest, "svr.C");
    cfg.svr_params.epsilon = need_double(manifest, "svr.epsilon");
    cfg.svr_params.tol = need_double(manifest, "svr.tol");
    cfg.svr_params.max_passes = std::stol(need(manifest, "svr.max_passes"));
    return mc;
}

PipelineResult run_pipeline(const EmissionSeries& series, const PipelineConfig& config) {
    if (series.empty()) throw EmptyInput();
    if (config.horizon_lo > config.horizon_hi) throw Error("bad horizon: lo > hi");
    if (!config.allow_overlap && config.horizon_lo <= series.last_year()) {
        throw HorizonBeforeData(config.horizon_lo, series.last_year());
    }

    const std::vector<ModelKind> models = canonical_models(config.models);
    const Dataset full = to_dataset(series);
    const Split split = split_dataset(full, config.ratio, config.strategy, config.seed);

    PipelineResult result;
    result.table.years.reserve(
        static_cast<std::size_t>(config.horizon_hi - config.horizon_lo + 1));
    for (int year = config.horizon_lo; year <= config.horizon_hi; ++year) {
        result.table.years.push_back(year);
    }

    RunManifest& manifest = result.manifest;
    manifest.entries.emplace_back("co2cast", kVersion);
    manifest.entries.emplace_back("data.fingerprint", to_hex(fnv1a64(write_series_csv(series))));
    manifest.entries.emplace_back("data.country", config.country_code);
    manifest.entries.emplace_back("data.years", std::to_string(series.first_year()) + ":" +
                                                    std::to_string(series.last_year()));
    manifest.entries.emplace_back("data.points", std::to_string(series.points.size()));
    manifest.entries.emplace_back("split.ratio", format_double(config.ratio));
    manifest.entries.emplace_back("split.strategy", to_string(config.strategy));
    manifest.entries.emplace_back("split.seed", std::to_string(config.seed));
    manifest.entries.emplace_back("refit_full", config.refit_full ? "true" : "false");
    manifest.entries.emplace_back("horizon", std::to_string(config.horizon_lo) + ":" +
                                                 std::to_string(config.horizon_hi));
    manifest.entries.emplace_back("models", join_model_tokens(models));
    manifest.entries.emplace_back("tree.max_depth",
                                  config.tree_params.max_depth
                                      ? std::to_string(*config.tree_params.max_depth)
                                      : "none");
    manifest.entries.emplace_back("tree.min_samples_split",
                                  std::to_string(config.tree_params.min_samples_split));
    manifest.entries.emplace_back("tree.min_samples_leaf",
                                  std::to_string(config.tree_params.min_samples_leaf));
    manifest.entries.emplace_back("forest.n_trees", std::to_string(config.forest_trees));
    manifest.entries.emplace_back("forest.bootstrap", config.forest_bootstrap ? "true" : "false");
    manifest.entries.emplace_back("forest.seed", std::to_string(config.seed));
    manifest.entries.emplace_back("svr.kernel", to_string(config.kernel.kind));
    manifest.entries.emplace_back("svr.gamma", format_double(config.kernel.gamma));
    manifest.entries.emplace_back("svr.C", format_double(config.svr_params.C));
    manifest.entries.emplace_back("svr.epsilon", format_double(config.svr_params.epsilon));
    manifest.entries.emplace_back("svr.tol", format_double(config.svr_params.tol));
    manifest.entries.emplace_back("svr.max_passes", std::to_string(config.svr_params.max_passes));

    for (ModelKind kind : models) {
        const std::string name = model_name(kind);
        std::vector<double> test_pred(split.test.size());
        std::vector<double> forecast(result.table.years.size());

        switch (kind) {
        case ModelKind::Linear: {
            LinearModel fit = fit_linear(split.train);
            for (std::size_t i = 0; i < split.test.size(); ++i) {
                test_pred[i] = predict_linear(fit, split.test.xs[i]);
            }
            if (config.refit_full) fit = fit_linear(full);
            for (std::size_t i = 0; i < forecast.size(); ++i) {
                forecast[i] = predict_linear(fit, result.table.years[i]);
            }
            manifest.entries.emplace_back("model." + name, serialize_linear(fit));
            result.models.linear = fit;
            break;
        }
        case ModelKind::Tree: {
            TreeModel fit = fit_tree(split.train, config.tree_params);
            for (std::size_t i = 0; i < split.test.size(); ++i) {
                test_pred[i] = predict_tree(fit, split.test.xs[i]);
            }
            if (config.refit_full) fit = fit_tree(full, config.tree_params);
            for (std::size_t i = 0; i < forecast.size(); ++i) {
                forecast[i] = predict_tree(fit, result.table.years[i]);
            }
            manifest.entries.emplace_back("model." + name, serialize_tree(fit));
            result.models.tree = std::move(fit);
            break;
        }
        case ModelKind::Forest: {
            ForestModel fit = fit_forest(split.train, config.forest_trees,
                                         config.forest_bootstrap, config.seed,
                                         config.tree_params);
            for (std::size_t i = 0; i < split.test.size(); ++i) {
                test_pred[i] = predict_forest(fit, split.test.xs[i]);
            }
            if (config.refit_full) {
                fit = fit_forest(full, config.forest_trees, config.forest_bootstrap,
                                 config.seed, config.tree_params);
            }
            for (std::size_t i = 0; i < forecast.size(); ++i) {
                forecast[i] = predict_forest(fit, result.table.years[i]);
            }
            manifest.entries.emplace_back("model." + name,
                                          "n_trees=" + std::to_string(fit.n_trees) +
                                              " seed=" + std::to_string(fit.seed) +
                                              " bootstrap=" + (fit.bootstrap ? "true" : "false"));
            for (std::size_t t = 0; t < fit.trees.size(); ++t) {
                manifest.entries.emplace_back("model." + name + ".tree." + std::to_string(t),
                                              serialize_tree(fit.trees[t]));
            }
            result.models.forest = std::move(fit);
            break;
        }
        case ModelKind::Svr: {
            SvrModel fit = fit_svr(split.train, config.svr_params, config.kernel);
            result.svr_converged = fit.converged;
            for (std::size_t i = 0; i < split.test.size(); ++i) {
                test_pred[i] = predict_svr(fit, split.test.xs[i]);
            }
            if (config.refit_full) {
                fit = fit_svr(full, config.svr_params, config.kernel);
                result.svr_converged = result.svr_converged && fit.converged;
            }
            for (std::size_t i = 0; i < forecast.size(); ++i) {
                forecast[i] = predict_svr(fit, result.table.years[i]);
            }
            manifest.entries.emplace_back("model." + name,
                                          serialize_svr(fit, config.svr_params));
            result.models.svr = std::move(fit);
            break;
        }
        }

        result.metrics.emplace_back(name, evaluate(split.test.ys, test_pred));
        result.table.columns.emplace_back(name, std::move(forecast));
    }

    for (const auto& [name, report] : result.metrics) {
        manifest.entries.emplace_back(
            "metrics." + name, "r2=" + format_double(report.r2) +
                                   " mae=" + format_double(report.mae) +
                                   " rmse=" + format_double(report.rmse) +
                                   " mse=" + format_double(report.mse) +
                                   " n=" + std::to_string(report.n));
    }
    return result;
}

std::string emit_table_csv(const ForecastTable& table) {
    std::string out = "Year";
    for (const auto& [name, _] : table.columns) {
        out += ',';
        out += name;
    }
    out += '\n';
    for (std::size_t r = 0; r < table.years.size(); ++r) {
        out += std::to_string(table.years[r]);
        for (const auto& [_, column] : table.columns) {
            out += ',';
            out += format_fixed(column[r], 6);
        }
        out += '\n';
    }
    return out;
}

std::string emit_metrics_csv(const std::vector<std::pair<std::string, MetricsReport>>& metrics) {
    std::string out = "Model,R2,MAE,RMSE\n";
    for (const auto& [name, report] : metrics) {
        out += name;
        out += ',';
        out += format_fixed(report.r2, 6);
        out += ',';
        out += format_fixed(report.mae, 6);
        out += ',';
        out += format_fixed(report.rmse, 6);
        out += '\n';
    }
    return out;
}

} // namespace co2cast
