#ifndef CO2CAST_LINEAR_HPP
#define CO2CAST_LINEAR_HPP

#include "co2cast/dataset.hpp"

#include <string>

namespace co2cast {

/// Ordinary least squares line y = intercept + slope * x. Coefficients are
/// reported in raw-year coordinates; x_center records the mean training year
/// the fit was centered on.
struct LinearModel {
    double intercept = 0.0;
    double slope = 0.0;
    double x_center = 0.0;
};

/// Closed-form centered OLS: slope = cov(x,y)/var(x), intercept = ybar - slope*xbar.
/// Throws DegenerateDesign if all x are equal, EmptyTrainingSet below 2 samples.
LinearModel fit_linear(const Dataset& train);

double predict_linear(const LinearModel& model, double x);

/// Manifest form: "model=linear intercept=<v> slope=<v>".
std::string serialize_linear(const LinearModel& model);

} // namespace co2cast

#endif
