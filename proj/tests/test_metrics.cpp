#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "co2cast/errors.hpp"
#include "co2cast/metrics.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace co2cast;

TEST_CASE("perfect fit") {
    const std::vector<double> y{1.0, 2.0, 3.0};
    const auto report = evaluate(y, y);
    CHECK(report.r2 == doctest::Approx(1.0));
    CHECK(report.mae == 0.0);
    CHECK(report.rmse == 0.0);
    CHECK(report.n == 3);
}

TEST_CASE("mean predictor scores zero") {
    const std::vector<double> y{1.0, 2.0, 3.0};
    const std::vector<double> pred{2.0, 2.0, 2.0};
    CHECK(evaluate(y, pred).r2 == doctest::Approx(0.0));
}

TEST_CASE("hand-computed example") {
    // SS_res = 1, SS_tot = 2 -> r2 = 0.5; mse = 1/3
    const std::vector<double> y{1.0, 2.0, 3.0};
    const std::vector<double> pred{1.0, 2.0, 4.0};
    const auto report = evaluate(y, pred);
    CHECK(report.r2 == doctest::Approx(0.5));
    CHECK(report.mse == doctest::Approx(1.0 / 3.0));
    CHECK(report.mae == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("constant targets") {
    const std::vector<double> y{5.0, 5.0, 5.0};
    CHECK(evaluate(y, y).r2 == 1.0);
    const std::vector<double> off{5.0, 5.0, 6.0};
    CHECK(evaluate(y, off).r2 == 0.0);
}

TEST_CASE("errors") {
    const std::vector<double> a{1.0};
    const std::vector<double> b{1.0, 2.0};
    CHECK_THROWS_AS(evaluate(a, b), LengthMismatch);
    CHECK_THROWS_AS(evaluate({}, {}), EmptyInput);
}

TEST_CASE("translation leaves every score unchanged") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> value(-10.0, 10.0);
    for (int round = 0; round < 100; ++round) {
        std::vector<double> y, pred, y_shift, pred_shift;
        const double c = value(gen);
        const std::size_t n = 2 + gen() % 20;
        bool constant = true;
        for (std::size_t i = 0; i < n; ++i) {
            y.push_back(value(gen));
            pred.push_back(value(gen));
            y_shift.push_back(y.back() + c);
            pred_shift.push_back(pred.back() + c);
            if (y.back() != y.front()) constant = false;
        }
        if (constant) continue;
        const auto base = evaluate(y, pred);
        const auto shifted = evaluate(y_shift, pred_shift);
        CHECK(shifted.mae == doctest::Approx(base.mae).epsilon(1e-12));
        CHECK(shifted.mse == doctest::Approx(base.mse).epsilon(1e-12));
        CHECK(shifted.rmse == doctest::Approx(base.rmse).epsilon(1e-12));
        CHECK(shifted.r2 == doctest::Approx(base.r2).epsilon(1e-9));
        // rmse^2 == mse to ulp scale
        CHECK(base.rmse * base.rmse == doctest::Approx(base.mse).epsilon(1e-12));
    }
}
