#ifndef CO2CAST_METRICS_HPP
#define CO2CAST_METRICS_HPP

#include <cstddef>
#include <span>

namespace co2cast {

struct MetricsReport {
    double r2 = 0.0;
    double mae = 0.0;
    double mse = 0.0;
    double rmse = 0.0;
    std::size_t n = 0;
};

/// Regression scores for predictions against ground truth.
/// r2 = 1 - SS_res/SS_tot; when the targets are constant (SS_tot == 0) it is
/// defined as 1 for a perfect fit and 0 otherwise.
MetricsReport evaluate(std::span<const double> y_true, std::span<const double> y_pred);

} // namespace co2cast

#endif
