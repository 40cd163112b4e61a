#include "wyrm/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <json.hpp>

namespace wyrm::growth {

namespace {

constexpr std::size_t kMaxIterations = 500;
constexpr double kStepTolerance = 1e-10;
constexpr double kGradientTolerance = 1e-12;

void check_data(const Series& data) {
    std::set<double> distinct;
    for (const auto& [t, y] : data) {
        if (!(y > 0.0)) throw ValidationError("fit requires positive observations");
        if (!(t >= 0.0)) throw ValidationError("fit requires nonnegative times");
        distinct.insert(t);
    }
    if (distinct.size() < 4)
        throw InsufficientData("need at least 4 points with distinct t, got " +
                               std::to_string(distinct.size()));
    const double y0 = data.front().second;
    if (std::all_of(data.begin(), data.end(),
                    [&](const auto& p) { return p.second == y0; }))
        throw DegenerateData("all observations are equal");
}

// Solves the 3x3 system M x = rhs by Gaussian elimination with partial
// pivoting. Returns false on a (numerically) singular matrix.
bool solve3(std::array<std::array<double, 3>, 3> m, std::array<double, 3> rhs,
            std::array<double, 3>& x) {
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (std::abs(m[pivot][col]) < 1e-300) return false;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (int r = col + 1; r < 3; ++r) {
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < 3; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (int r = 2; r >= 0; --r) {
        double s = rhs[r];
        for (int c = r + 1; c < 3; ++c) s -= m[r][c] * x[c];
        x[r] = s / m[r][r];
    }
    return std::isfinite(x[0]) && std::isfinite(x[1]) && std::isfinite(x[2]);
}

}  // namespace

void GrowthModel::validate() const {
    if (!(asymptote > 0.0 && offset > 0.0 && rate > 0.0))
        throw ValidationError("growth model parameters must be positive");
    if (!(std::isfinite(asymptote) && std::isfinite(offset) && std::isfinite(rate)))
        throw ValidationError("growth model parameters must be finite");
}

double eval(const GrowthModel& model, double t) {
    return model.asymptote / (1.0 + model.offset * std::exp(-model.rate * t));
}

std::array<double, 3> gradient(const GrowthModel& model, double t) {
    const double e = std::exp(-model.rate * t);
    const double denom = 1.0 + model.offset * e;
    const double d2 = denom * denom;
    return {
        1.0 / denom,                                // d/dA
        -model.asymptote * e / d2,                  // d/da
        model.asymptote * model.offset * t * e / d2 // d/db
    };
}

double inflection_time(const GrowthModel& model) {
    return std::log(model.offset) / model.rate;
}

double sum_squared_residuals(const GrowthModel& model, const Series& data) {
    double s = 0.0;
    for (const auto& [t, y] : data) {
        const double r = y - eval(model, t);
        s += r * r;
    }
    return s;
}

double rmse_of(const GrowthModel& model, const Series& data) {
    return std::sqrt(sum_squared_residuals(model, data) / static_cast<double>(data.size()));
}

GrowthModel default_init(const Series& data) {
    double ymax = 0.0;
    for (const auto& [t, y] : data) ymax = std::max(ymax, y);
    GrowthModel m;
    m.asymptote = 1.05 * ymax;
    m.rate = 1.0;
    const auto& [t0, y0] = data.front();
    const double a0 = (m.asymptote / y0 - 1.0) * std::exp(m.rate * t0);
    m.offset = a0 > 0.0 ? a0 : 1.0;
    return m;
}

FitResult fit(const Series& data, std::optional<GrowthModel> init) {
    check_data(data);
    GrowthModel theta = init.value_or(default_init(data));
    theta.validate();

    const std::size_t n = data.size();
    double sse = sum_squared_residuals(theta, data);
    double lambda = 1e-3;

    FitResult result;
    result.model = theta;
    result.converged = false;

    std::size_t iter = 0;
    for (; iter < kMaxIterations; ++iter) {
        // Normal equations from the residual Jacobian J_ij = -d f / d theta_j.
        std::array<std::array<double, 3>, 3> jtj{};
        std::array<double, 3> jtr{};
        for (const auto& [t, y] : data) {
            const auto g = gradient(theta, t);
            const double r = y - eval(theta, t);
            for (int i = 0; i < 3; ++i) {
                jtr[i] += -g[i] * r;
                for (int j = 0; j < 3; ++j) jtj[i][j] += g[i] * g[j];
            }
        }

        const double gnorm = std::sqrt(jtr[0] * jtr[0] + jtr[1] * jtr[1] + jtr[2] * jtr[2]);
        if (gnorm < kGradientTolerance) {
            result.converged = true;
            break;
        }

        bool stepped = false;
        for (int attempt = 0; attempt < 40; ++attempt) {
            auto damped = jtj;
            for (int i = 0; i < 3; ++i) damped[i][i] += lambda * jtj[i][i];
            std::array<double, 3> delta{};
            std::array<double, 3> rhs = {-jtr[0], -jtr[1], -jtr[2]};
            if (!solve3(damped, rhs, delta)) {
                lambda *= 10.0;
                continue;
            }
            GrowthModel trial = theta;
            trial.asymptote += delta[0];
            trial.offset += delta[1];
            trial.rate += delta[2];
            if (!(trial.asymptote > 0.0 && trial.offset > 0.0 && trial.rate > 0.0)) {
                lambda *= 10.0;
                continue;
            }
            const double trial_sse = sum_squared_residuals(trial, data);
            if (trial_sse < sse) {
                const double step = std::sqrt(delta[0] * delta[0] + delta[1] * delta[1] +
                                              delta[2] * delta[2]);
                const double scale = std::sqrt(theta.asymptote * theta.asymptote +
                                               theta.offset * theta.offset +
                                               theta.rate * theta.rate);
                theta = trial;
                sse = trial_sse;
                lambda = std::max(lambda / 3.0, 1e-14);
                stepped = true;
                if (step < kStepTolerance * (scale + kStepTolerance)) {
                    result.converged = true;
                }
                break;
            }
            lambda *= 10.0;
        }
        if (!stepped) {
            // No damping level improves the fit: we are at a local optimum.
            result.converged = true;
            break;
        }
        if (result.converged) break;
    }

    result.model = theta;
    result.iterations = iter + 1 > kMaxIterations ? kMaxIterations : iter + 1;
    result.residuals.reserve(n);
    for (const auto& [t, y] : data) result.residuals.push_back(y - eval(theta, t));
    result.rmse = rmse_of(theta, data);
    return result;
}

GrowthModel grid_search_oracle(const Series& data, const GridBounds& bounds,
                               std::size_t resolution) {
    if (resolution < 10)
        throw ValidationError("grid resolution must be at least 10 per axis");
    if (!(std::isfinite(bounds.asymptote_lo) && std::isfinite(bounds.asymptote_hi) &&
          std::isfinite(bounds.offset_lo) && std::isfinite(bounds.offset_hi) &&
          std::isfinite(bounds.rate_lo) && std::isfinite(bounds.rate_hi)))
        throw ValidationError("grid bounds must be finite");
    if (!(bounds.asymptote_lo > 0.0 && bounds.offset_lo > 0.0 && bounds.rate_lo > 0.0))
        throw ValidationError("grid bounds must be positive");

    const double n1 = static_cast<double>(resolution - 1);
    const double log_alo = std::log(bounds.offset_lo);
    const double log_ahi = std::log(bounds.offset_hi);

    GrowthModel best;
    double best_sse = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < resolution; ++i) {
        const double A = bounds.asymptote_lo +
                         (bounds.asymptote_hi - bounds.asymptote_lo) * static_cast<double>(i) / n1;
        for (std::size_t j = 0; j < resolution; ++j) {
            const double a =
                std::exp(log_alo + (log_ahi - log_alo) * static_cast<double>(j) / n1);
            for (std::size_t k = 0; k < resolution; ++k) {
                const double b = bounds.rate_lo +
                                 (bounds.rate_hi - bounds.rate_lo) * static_cast<double>(k) / n1;
                const GrowthModel m{A, a, b};
                const double sse = sum_squared_residuals(m, data);
                if (sse < best_sse) {  // strict: ties keep the lowest-index point
                    best_sse = sse;
                    best = m;
                }
            }
        }
    }
    return best;
}

std::string FitResult::to_json_string() const {
    nlohmann::ordered_json j;
    j["A"] = model.asymptote;
    j["a"] = model.offset;
    j["b"] = model.rate;
    j["rmse"] = rmse;
    j["converged"] = converged;
    return j.dump();
}

}  // namespace wyrm::growth
