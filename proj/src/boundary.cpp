#include "taskalloc/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "taskalloc/error.hpp"

namespace taskalloc::boundary {

namespace {

void check_theta(double theta)
{
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw DomainError("intricacy theta " + std::to_string(theta) + " outside [0,1]");
    }
}

void check_t(int t)
{
    if (t < 0) {
        throw DomainError("time index must be non-negative, got " + std::to_string(t));
    }
}

}  // namespace

void ContinuousParams::validate() const
{
    if (!std::isfinite(alpha_H) || !std::isfinite(alpha_M)) {
        throw ValidationError("payoff intercepts must be finite");
    }
    if (!(beta_H > 0.0) || !std::isfinite(beta_H)) {
        throw ValidationError("beta_H must be positive, got " + std::to_string(beta_H));
    }
    if (!(beta_M > 0.0) || !std::isfinite(beta_M)) {
        throw ValidationError("beta_M must be positive, got " + std::to_string(beta_M));
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw ValidationError("gamma must be positive, got " + std::to_string(gamma));
    }
    try {
        shape.validate();
    } catch (const DomainError& e) {
        throw ValidationError(e.what());
    }
}

ContinuousParams paper_defaults()
{
    return ContinuousParams{};
}

double payoff_human(double theta, const ContinuousParams& params)
{
    check_theta(theta);
    return params.alpha_H + params.beta_H * theta;
}

double payoff_machine(double theta, int t, const ContinuousParams& params)
{
    check_theta(theta);
    check_t(t);
    return params.alpha_M - params.beta_M * theta + params.gamma * t;
}

double automation_boundary(int t, const ContinuousParams& params)
{
    check_t(t);
    return (params.alpha_M - params.alpha_H + params.gamma * t) / (params.beta_M + params.beta_H);
}

double automated_share(int t, const ContinuousParams& params)
{
    const double theta = std::clamp(automation_boundary(t, params), 0.0, 1.0);
    return numerics::reg_inc_beta(theta, params.shape);
}

std::vector<BoundaryPoint> simulate_boundary(const ContinuousParams& params, int horizon_years)
{
    params.validate();
    if (horizon_years < 0) {
        throw DomainError("simulate_boundary: horizon_years must be non-negative");
    }
    std::vector<BoundaryPoint> out;
    out.reserve(static_cast<std::size_t>(horizon_years) + 1);
    for (int t = 0; t <= horizon_years; ++t) {
        const double theta = automation_boundary(t, params);
        const double share = numerics::reg_inc_beta(std::clamp(theta, 0.0, 1.0), params.shape);
        out.push_back({params.start_year + t, theta, share});
    }
    return out;
}

AdvantageGrid advantage_grid(const ContinuousParams& params, const std::vector<int>& years,
                             const std::vector<double>& thetas)
{
    params.validate();
    if (years.empty() || thetas.empty()) {
        throw DomainError("advantage_grid: year and theta lists must be non-empty");
    }
    if (!std::is_sorted(years.begin(), years.end()) ||
        !std::is_sorted(thetas.begin(), thetas.end())) {
        throw DomainError("advantage_grid: year and theta lists must be ascending");
    }
    AdvantageGrid grid{years, thetas, {}};
    grid.values.reserve(years.size() * thetas.size());
    for (const int year : years) {
        const int t = year - params.start_year;
        for (const double theta : thetas) {
            grid.values.push_back(payoff_machine(theta, t, params) - payoff_human(theta, params));
        }
    }
    return grid;
}

ContinuousParams calibrate(double share_at_start, double share_at_end, int horizon_years,
                           double alpha_H, double beta_H, double beta_M,
                           const numerics::BetaShape& shape, int start_year)
{
    if (!(share_at_start > 0.0 && share_at_start < 1.0) ||
        !(share_at_end > 0.0 && share_at_end < 1.0)) {
        throw DomainError("calibrate: target shares must lie in (0,1)");
    }
    if (!(share_at_start < share_at_end)) {
        throw DomainError("calibrate: share_at_start must be below share_at_end");
    }
    if (horizon_years < 1) {
        throw DomainError("calibrate: horizon_years must be >= 1");
    }
    shape.validate();

    const double slope_sum = beta_M + beta_H;
    const double theta_start = numerics::inv_reg_inc_beta(share_at_start, shape);
    const double theta_end = numerics::inv_reg_inc_beta(share_at_end, shape);

    ContinuousParams params;
    params.alpha_H = alpha_H;
    params.beta_H = beta_H;
    params.beta_M = beta_M;
    params.shape = shape;
    params.start_year = start_year;
    params.alpha_M = alpha_H + slope_sum * theta_start;
    params.gamma = (slope_sum * theta_end - (params.alpha_M - alpha_H)) / horizon_years;
    if (!(params.gamma > 0.0)) {
        throw CalibrationError("calibrate: implied gamma " + std::to_string(params.gamma) +
                               " is not positive");
    }
    params.validate();
    return params;
}

}  // namespace taskalloc::boundary
