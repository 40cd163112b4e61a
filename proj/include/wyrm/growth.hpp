#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wyrm/error.hpp"

namespace wyrm::growth {

// Logistic growth law y(t) = A / (1 + a * exp(-b * t)).
//
// A is the asymptotic adult size, a sets the birth-size offset
// (y(0) = A / (1 + a)) and b the per-year growth rate. All three are
// positive, which makes the curve strictly increasing with horizontal
// asymptote A and inflection at t = ln(a) / b.
struct GrowthModel {
    double asymptote = 1.0;  // A, meters
    double offset = 1.0;     // a, dimensionless
    double rate = 1.0;       // b, per year

    void validate() const;
};

double eval(const GrowthModel& model, double t);

// Model gradient d eval / d(A, a, b) at t; used for the fit Jacobian.
std::array<double, 3> gradient(const GrowthModel& model, double t);

// Time of steepest growth, ln(a) / b.
double inflection_time(const GrowthModel& model);

struct FitResult {
    GrowthModel model;
    double rmse = 0.0;               // meters
    std::vector<double> residuals;   // y_i - eval(t_i), per input point
    std::size_t iterations = 0;
    bool converged = false;

    std::string to_json_string() const;
};

using Series = std::vector<std::pair<double, double>>;  // (t years, y meters)

// Damped Gauss-Newton (Levenberg-Marquardt) least-squares fit with the
// analytic Jacobian. Needs at least 4 points with distinct t and positive y.
// When no explicit start is given the initial guess is derived from the data:
// A0 = 1.05 * max(y), b0 = 1, a0 solved from the first point.
//
// Runs at most 500 iterations; a result that ran out of iterations is
// returned with converged = false rather than thrown away.
FitResult fit(const Series& data, std::optional<GrowthModel> init = std::nullopt);

// Initial guess used by fit() when none is supplied.
GrowthModel default_init(const Series& data);

struct GridBounds {
    double asymptote_lo = 40.0, asymptote_hi = 100.0;
    double offset_lo = 10.0, offset_hi = 1e4;  // sampled log-spaced
    double rate_lo = 0.1, rate_hi = 3.0;
};

// Exhaustive grid evaluation; returns the grid point with the smallest sum
// of squared residuals (ties broken by lowest index). Slow but independent
// of the iterative solver, which is the point.
GrowthModel grid_search_oracle(const Series& data, const GridBounds& bounds = {},
                               std::size_t resolution = 40);

double sum_squared_residuals(const GrowthModel& model, const Series& data);
double rmse_of(const GrowthModel& model, const Series& data);

}  // namespace wyrm::growth
