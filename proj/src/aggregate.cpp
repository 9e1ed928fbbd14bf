#include "taskalloc/aggregate.hpp"

#include <cmath>
#include <string>

#include "taskalloc/error.hpp"

namespace taskalloc::aggregate {

void AggregateParams::validate() const
{
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw ValidationError("alpha must lie in [0,1], got " + std::to_string(alpha));
    }
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw ValidationError("beta must lie in [0,1], got " + std::to_string(beta));
    }
    if (!(alpha + beta > 0.0)) {
        throw ValidationError("alpha + beta must be positive");
    }
    if (!(x0 >= 0.0 && x0 <= 1.0)) {
        throw ValidationError("x0 must lie in [0,1], got " + std::to_string(x0));
    }
}

AggregateParams paper_defaults()
{
    return AggregateParams{};
}

double step(double x, const AggregateParams& params)
{
    params.validate();
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("aggregate step: share " + std::to_string(x) + " outside [0,1]");
    }
    return x + params.alpha * (1.0 - x) - params.beta * x;
}

double equilibrium(const AggregateParams& params)
{
    const double total = params.alpha + params.beta;
    if (total == 0.0) {
        throw DegenerateParams("equilibrium undefined for alpha + beta == 0");
    }
    return params.alpha / total;
}

double closed_form(int t, const AggregateParams& params)
{
    params.validate();
    if (t < 0) {
        throw DomainError("closed_form: t must be non-negative");
    }
    const double star = equilibrium(params);
    const double factor = 1.0 - params.alpha - params.beta;
    return star + (params.x0 - star) * std::pow(factor, t);
}

std::vector<SharePoint> simulate(const AggregateParams& params, int horizon_years)
{
    params.validate();
    if (horizon_years < 1) {
        throw DomainError("simulate: horizon_years must be >= 1");
    }
    std::vector<SharePoint> out;
    out.reserve(static_cast<std::size_t>(horizon_years) + 1);
    double x = params.x0;
    out.push_back({params.start_year, x});
    for (int t = 1; t <= horizon_years; ++t) {
        x = step(x, params);
        out.push_back({params.start_year + t, x});
    }
    return out;
}

int convergence_time(const AggregateParams& params, double tol)
{
    params.validate();
    if (!(tol > 0.0)) {
        throw DomainError("convergence_time: tol must be positive");
    }
    const double star = equilibrium(params);
    const double gap = std::fabs(params.x0 - star);
    auto within = [&](int t) { return std::fabs(closed_form(t, params) - star) < tol; };
    if (gap < tol) {
        return 0;
    }
    const double factor = std::fabs(1.0 - params.alpha - params.beta);
    if (factor == 0.0) {
        return 1;
    }
    if (factor >= 1.0) {
        throw DegenerateParams("convergence_time: contraction factor must be below 1");
    }
    int t = static_cast<int>(std::ceil(std::log(tol / gap) / std::log(factor)));
    if (t < 1) {
        t = 1;
    }
    // At most a step or two of adjustment; the analytic estimate is exact
    // up to rounding of the logarithms.
    const int analytic = t;
    while (t > 1 && within(t - 1)) {
        --t;
    }
    while (!within(t)) {
        // Below the resolution of x* itself the closed form cannot confirm
        // the estimate; the analytic value stands.
        if (t >= analytic + 64) {
            return analytic;
        }
        ++t;
    }
    return t;
}

}  // namespace taskalloc::aggregate
