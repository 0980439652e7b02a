#include "co2cast/metrics.hpp"

#include "co2cast/errors.hpp"

#include <cmath>

namespace co2cast {

MetricsReport evaluate(std::span<const double> y_true, std::span<const double> y_pred) {
    if (y_true.size() != y_pred.size()) throw LengthMismatch(y_true.size(), y_pred.size());
    if (y_true.empty()) throw EmptyInput();

    const auto n = static_cast<double>(y_true.size());

    double mean = 0.0;
    for (double y : y_true) mean += y;
    mean /= n;

    double ss_res = 0.0, ss_tot = 0.0, abs_sum = 0.0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const double e = y_pred[i] - y_true[i];
        ss_res += e * e;
        abs_sum += std::abs(e);
        const double d = y_true[i] - mean;
        ss_tot += d * d;
    }

    MetricsReport report;
    report.n = y_true.size();
    report.mse = ss_res / n;
    report.mae = abs_sum / n;
    report.rmse = std::sqrt(report.mse);
    if (ss_tot == 0.0) {
        report.r2 = ss_res == 0.0 ? 1.0 : 0.0; // constant targets
    } else {
        report.r2 = 1.0 - ss_res / ss_tot;
    }
    return report;
}

} // namespace co2cast
