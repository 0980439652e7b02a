#include "co2cast/linear.hpp"

#include "co2cast/errors.hpp"
#include "co2cast/format.hpp"

namespace co2cast {

LinearModel fit_linear(const Dataset& train) {
    const std::size_t n = train.size();
    if (n < 2) throw EmptyTrainingSet();

    double x_mean = 0.0, y_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x_mean += train.xs[i];
        y_mean += train.ys[i];
    }
    x_mean /= static_cast<double>(n);
    y_mean /= static_cast<double>(n);

    // Centered normal equations: raw years near 2000 squared would eat half
    // the mantissa, centering keeps the sums well conditioned.
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = train.xs[i] - x_mean;
        sxx += dx * dx;
        sxy += dx * (train.ys[i] - y_mean);
    }
    if (sxx == 0.0) throw DegenerateDesign();

    LinearModel model;
    model.slope = sxy / sxx;
    model.intercept = y_mean - model.slope * x_mean;
    model.x_center = x_mean;
    return model;
}

double predict_linear(const LinearModel& model, double x) {
    return model.intercept + model.slope * x;
}

std::string serialize_linear(const LinearModel& model) {
    return "model=linear intercept=" + format_double(model.intercept) +
           " slope=" + format_double(model.slope);
}

} // namespace co2cast
