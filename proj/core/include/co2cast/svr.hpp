#ifndef CO2CAST_SVR_HPP
#define CO2CAST_SVR_HPP

#include "co2cast/dataset.hpp"

#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace co2cast {

struct Kernel {
    enum class Kind { Linear, Rbf };

    Kind kind = Kind::Rbf;
    double gamma = 1.0; // rbf only

    static Kernel linear() { return {Kind::Linear, 0.0}; }
    static Kernel rbf(double gamma = 1.0) { return {Kind::Rbf, gamma}; }

    double operator()(double u, double v) const {
        if (kind == Kind::Linear) return u * v;
        const double d = u - v;
        return std::exp(-gamma * d * d);
    }
};

std::string to_string(Kernel::Kind kind);
Kernel::Kind kernel_kind_from_string(const std::string& name);

struct SvrParams {
    double C = 1.0;        // box constraint
    double epsilon = 0.1;  // tube half-width
    double tol = 1e-3;     // KKT tolerance
    long max_passes = 0;   // cap on pair updates; 0 means 1000 * n
};

/// Epsilon-insensitive SVR in the delta = alpha - alpha* parameterization:
/// f(x) = sum_n coeffs[n] * k(support_x[n], x_std) + bias, with x standardized
/// to zero mean / unit variance by the stored constants.
struct SvrModel {
    std::vector<double> support_x; // standardized training inputs
    std::vector<double> coeffs;    // delta_n, |delta_n| <= C, sum = 0
    double bias = 0.0;
    Kernel kernel;
    double x_mean = 0.0;
    double x_std = 1.0;

    // solver diagnostics
    bool converged = true;
    long updates = 0;
    double final_violation = 0.0;
};

/// Per-update dual objective values, recomputed from scratch after every
/// accepted pair step. Test instrumentation for the ascent invariant.
struct SmoTrace {
    std::vector<double> objectives;
};

/// Solve the dual
///   max -1/2 sum_ij d_i d_j K_ij - eps sum |d_i| + sum y_i d_i
///   s.t. sum d_i = 0, |d_i| <= C
/// by maximal-violating-pair SMO with exact two-variable subproblems.
/// Throws DegenerateInput when all x are equal; a fit that hits max_passes
/// with violation > 10*tol is returned with converged == false.
SvrModel fit_svr(const Dataset& train, const SvrParams& params = {},
                 const Kernel& kernel = Kernel::rbf(), SmoTrace* trace = nullptr);

double predict_svr(const SvrModel& model, double x);

/// Dual objective at `coeffs` for the standardized inputs `x_std`. Throws
/// InfeasiblePoint if the box or equality constraint is violated beyond tol.
double svr_dual_objective(std::span<const double> coeffs, std::span<const double> x_std,
                          std::span<const double> y, const SvrParams& params,
                          const Kernel& kernel);

/// Manifest form: kernel, hyperparameters, standardization constants, bias
/// and the (x_n, delta_n) support list.
std::string serialize_svr(const SvrModel& model, const SvrParams& params);

} // namespace co2cast

#endif
