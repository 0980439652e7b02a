#include "co2cast/svr.hpp"

#include "co2cast/errors.hpp"
#include "co2cast/format.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace co2cast {

std::string to_string(Kernel::Kind kind) {
    return kind == Kernel::Kind::Linear ? "linear" : "rbf";
}

Kernel::Kind kernel_kind_from_string(const std::string& name) {
    if (name == "linear") return Kernel::Kind::Linear;
    if (name == "rbf") return Kernel::Kind::Rbf;
    throw Error("unknown kernel '" + name + "'");
}

namespace {

// Working state of the dual solver. F_i = y_i - (K delta)_i is kept
// incrementally; the bias never enters pair selection or step sizes, so it
// is computed once at the end.
struct SmoState {
    std::vector<double> delta;
    std::vector<double> f; // y - K*delta
    std::vector<std::vector<double>> gram;
    const std::vector<double>& y;
    double C;
    double eps;

    explicit SmoState(const std::vector<double>& x, const std::vector<double>& targets,
                      const Kernel& kernel, double box, double tube)
        : delta(x.size(), 0.0), f(targets), y(targets), C(box), eps(tube) {
        const std::size_t n = x.size();
        gram.assign(n, std::vector<double>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                gram[i][j] = gram[j][i] = kernel(x[i], x[j]);
            }
        }
    }

    // Each sample constrains the bias: l_i <= b <= u_i depending on which
    // face of the box delta_i sits on. KKT holds iff max l <= min u.
    double bias_upper(std::size_t i) const {
        if (delta[i] <= -C) return std::numeric_limits<double>::infinity();
        return delta[i] > 0.0 ? f[i] - eps : f[i] + eps;
    }
    double bias_lower(std::size_t i) const {
        if (delta[i] >= C) return -std::numeric_limits<double>::infinity();
        return delta[i] < 0.0 ? f[i] + eps : f[i] - eps;
    }

    struct Violation {
        double amount;     // max l - min u; KKT satisfied when <= 0
        std::size_t i_lo;  // argmax of the lower bounds
        std::size_t i_up;  // argmin of the upper bounds
    };

    Violation max_violation() const {
        Violation v{-std::numeric_limits<double>::infinity(), 0, 0};
        double lo = -std::numeric_limits<double>::infinity();
        double up = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < delta.size(); ++i) {
            const double l = bias_lower(i);
            const double u = bias_upper(i);
            if (l > lo) {
                lo = l;
                v.i_lo = i;
            }
            if (u < up) {
                up = u;
                v.i_up = i;
            }
        }
        v.amount = lo - up;
        return v;
    }

    // Objective gain of moving (delta_i, delta_j) by (+t, -t); concave
    // piecewise quadratic in t.
    double gain(std::size_t i, std::size_t j, double t, double eta) const {
        return (f[i] - f[j]) * t - 0.5 * eta * t * t -
               eps * (std::abs(delta[i] + t) - std::abs(delta[i])) -
               eps * (std::abs(delta[j] - t) - std::abs(delta[j]));
    }

    // Exact maximizer of the two-variable subproblem: evaluate the clipped
    // stationary point of every smooth segment plus the breakpoints and box
    // ends, keep the best. Returns true when the coefficients moved.
    bool solve_pair(std::size_t i, std::size_t j) {
        if (i == j) return false;
        const double lo = std::max(-C - delta[i], delta[j] - C);
        const double hi = std::min(C - delta[i], delta[j] + C);
        if (!(lo < hi)) return false;

        const double eta = gram[i][i] + gram[j][j] - 2.0 * gram[i][j];
        const double df = f[i] - f[j];

        double candidates[8];
        std::size_t count = 0;
        candidates[count++] = lo;
        candidates[count++] = hi;
        for (double bp : {-delta[i], delta[j]}) {
            if (bp > lo && bp < hi) candidates[count++] = bp;
        }
        if (eta > 0.0) {
            // stationary points per sign pattern of (delta_i + t, delta_j - t)
            for (double si : {-1.0, 1.0}) {
                for (double sj : {-1.0, 1.0}) {
                    const double t = (df - eps * si + eps * sj) / eta;
                    if (t > lo && t < hi) candidates[count++] = t;
                }
            }
        }

        double best_t = 0.0;
        double best_gain = 0.0;
        for (std::size_t k = 0; k < count; ++k) {
            const double g = gain(i, j, candidates[k], eta);
            if (g > best_gain) {
                best_gain = g;
                best_t = candidates[k];
            }
        }
        if (best_t == 0.0) return false;
        return apply(i, j, best_t);
    }

    bool apply(std::size_t i, std::size_t j, double t) {
        const double di_old = delta[i];
        const double dj_old = delta[j];
        delta[i] += t;
        delta[j] -= t;
        snap(i);
        snap(j);
        // update f with the realized (post-snap) changes so f stays exactly
        // y - K*delta; the equality constraint drifts by at most 2e-12 per
        // update, far inside tol
        const double ti = delta[i] - di_old;
        const double tj = delta[j] - dj_old;
        if (ti == 0.0 && tj == 0.0) return false;
        for (std::size_t k = 0; k < f.size(); ++k) {
            f[k] -= ti * gram[i][k] + tj * gram[j][k];
        }
        return true;
    }

    // Land exactly on the box faces and on zero; the bias-interval logic
    // branches on those values.
    void snap(std::size_t i) {
        constexpr double tiny = 1e-12;
        if (std::abs(delta[i]) < tiny) {
            delta[i] = 0.0;
        } else if (std::abs(delta[i] - C) < tiny) {
            delta[i] = C;
        } else if (std::abs(delta[i] + C) < tiny) {
            delta[i] = -C;
        }
    }

    double objective() const {
        double quad = 0.0, lin = 0.0;
        for (std::size_t i = 0; i < delta.size(); ++i) {
            if (delta[i] == 0.0) continue;
            for (std::size_t j = 0; j < delta.size(); ++j) {
                quad += delta[i] * delta[j] * gram[i][j];
            }
            lin += y[i] * delta[i] - eps * std::abs(delta[i]);
        }
        return -0.5 * quad + lin;
    }

    // Mean implied bias over non-bound support vectors; midpoint of the
    // feasible interval when none exist.
    double bias() const {
        double sum = 0.0;
        std::size_t count = 0;
        for (std::size_t i = 0; i < delta.size(); ++i) {
            if (delta[i] != 0.0 && std::abs(delta[i]) < C) {
                sum += f[i] - eps * (delta[i] > 0.0 ? 1.0 : -1.0);
                ++count;
            }
        }
        if (count > 0) return sum / static_cast<double>(count);
        const Violation v = max_violation();
        return (bias_lower(v.i_lo) + bias_upper(v.i_up)) / 2.0;
    }
};

} // namespace

SvrModel fit_svr(const Dataset& train, const SvrParams& params, const Kernel& kernel,
                 SmoTrace* trace) {
    const std::size_t n = train.size();
    if (n < 2) throw EmptyTrainingSet();
    if (!(params.C > 0.0) || params.epsilon < 0.0 || !(params.tol > 0.0)) {
        throw Error("invalid SVR parameters");
    }
    if (kernel.kind == Kernel::Kind::Rbf && !(kernel.gamma > 0.0)) {
        throw Error("rbf gamma must be positive");
    }

    double mean = 0.0;
    for (double x : train.xs) mean += x;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double x : train.xs) var += (x - mean) * (x - mean);
    var /= static_cast<double>(n);
    if (var == 0.0) throw DegenerateInput();
    const double std_dev = std::sqrt(var);

    std::vector<double> x_std(n);
    for (std::size_t i = 0; i < n; ++i) x_std[i] = (train.xs[i] - mean) / std_dev;

    SmoState state(x_std, train.ys, kernel, params.C, params.epsilon);

    const long max_updates = params.max_passes > 0
                                 ? params.max_passes
                                 : 1000 * static_cast<long>(n);
    long updates = 0;
    double violation = 0.0;
    while (true) {
        const SmoState::Violation v = state.max_violation();
        violation = v.amount;
        if (violation <= params.tol) break;
        if (updates >= max_updates) break;

        bool moved = state.solve_pair(v.i_lo, v.i_up);
        if (!moved) {
            // numerically stuck on the selected pair; try the best partner
            // for each end before giving up
            for (std::size_t k = 0; k < n && !moved; ++k) {
                moved = state.solve_pair(v.i_lo, k) || state.solve_pair(k, v.i_up);
            }
            if (!moved) break; // no pair makes progress
        }
        ++updates;
        if (trace) trace->objectives.push_back(state.objective());
    }

    SvrModel model;
    model.bias = state.bias();
    model.support_x = std::move(x_std);
    model.coeffs = std::move(state.delta);
    model.kernel = kernel;
    model.x_mean = mean;
    model.x_std = std_dev;
    model.updates = updates;
    model.final_violation = std::max(violation, 0.0);
    model.converged = violation <= 10.0 * params.tol;
    return model;
}

double predict_svr(const SvrModel& model, double x) {
    const double xs = (x - model.x_mean) / model.x_std;
    double sum = model.bias;
    for (std::size_t i = 0; i < model.support_x.size(); ++i) {
        if (model.coeffs[i] == 0.0) continue;
        sum += model.coeffs[i] * model.kernel(model.support_x[i], xs);
    }
    return sum;
}

double svr_dual_objective(std::span<const double> coeffs, std::span<const double> x_std,
                          std::span<const double> y, const SvrParams& params,
                          const Kernel& kernel) {
    if (coeffs.size() != x_std.size() || coeffs.size() != y.size()) {
        throw LengthMismatch(coeffs.size(), x_std.size());
    }
    double sum = 0.0;
    for (double d : coeffs) {
        if (std::abs(d) > params.C + params.tol) {
            throw InfeasiblePoint("box constraint |delta| <= C violated");
        }
        sum += d;
    }
    if (std::abs(sum) > params.tol) {
        throw InfeasiblePoint("equality constraint sum(delta) = 0 violated");
    }

    double quad = 0.0, lin = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            quad += coeffs[i] * coeffs[j] * kernel(x_std[i], x_std[j]);
        }
        lin += y[i] * coeffs[i] - params.epsilon * std::abs(coeffs[i]);
    }
    return -0.5 * quad + lin;
}

std::string serialize_svr(const SvrModel& model, const SvrParams& params) {
    std::string out = "model=svr kernel=" + to_string(model.kernel.kind);
    if (model.kernel.kind == Kernel::Kind::Rbf) {
        out += " gamma=" + format_double(model.kernel.gamma);
    }
    out += " C=" + format_double(params.C);
    out += " epsilon=" + format_double(params.epsilon);
    out += " x_mean=" + format_double(model.x_mean);
    out += " x_std=" + format_double(model.x_std);
    out += " bias=" + format_double(model.bias);
    out += " sv=";
    bool first = true;
    for (std::size_t i = 0; i < model.coeffs.size(); ++i) {
        if (model.coeffs[i] == 0.0) continue;
        if (!first) out += ';';
        out += '(' + format_double(model.support_x[i]) + ',' +
               format_double(model.coeffs[i]) + ')';
        first = false;
    }
    return out;
}

} // namespace co2cast
