#include "taskalloc/replicator.hpp"

#include <cmath>
#include <string>

#include "taskalloc/error.hpp"

namespace taskalloc::replicator {

void CategoryParams::validate() const
{
    if (!(x0 >= 0.0 && x0 <= 1.0)) {
        throw ValidationError("category x0 must lie in [0,1], got " + std::to_string(x0));
    }
    if (!std::isfinite(a) || !std::isfinite(g) || !std::isfinite(b)) {
        throw ValidationError("category payoffs must be finite");
    }
}

void ReplicatorParams::validate() const
{
    routine.validate();
    complex.validate();
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw ValidationError("sensitivity r must be positive, got " + std::to_string(r));
    }
    if (!(w_routine >= 0.0 && w_routine <= 1.0)) {
        throw ValidationError("w_routine must lie in [0,1], got " + std::to_string(w_routine));
    }
}

ReplicatorParams paper_defaults()
{
    ReplicatorParams params;
    params.routine = {0.30, 1.0, 0.05, 0.8};
    params.complex = {0.05, 0.5, 0.02, 1.2};
    params.r = 0.2;
    params.w_routine = 0.6;
    params.start_year = 2025;
    return params;
}

double payoff_gap(int t, const CategoryParams& cat)
{
    return (cat.a + cat.g * t) - cat.b;
}

double replicator_step(double x, int t, const CategoryParams& cat, double r)
{
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("replicator_step: share " + std::to_string(x) + " outside [0,1]");
    }
    if (t < 0) {
        throw DomainError("replicator_step: t must be non-negative");
    }
    const double next = x + r * x * (1.0 - x) * payoff_gap(t, cat);
    if (!(next >= 0.0 && next <= 1.0)) {
        throw RangeError("replicator_step: update left [0,1] (" + std::to_string(next) +
                         ") at t=" + std::to_string(t) + "; reduce r or the payoff gap");
    }
    return next;
}

std::vector<ReplicatorPoint> simulate_replicator(const ReplicatorParams& params, int horizon_years)
{
    params.validate();
    if (horizon_years < 1) {
        throw DomainError("simulate_replicator: horizon_years must be >= 1");
    }
    const double w_r = params.w_routine;
    const double w_c = params.w_complex();
    std::vector<ReplicatorPoint> out;
    out.reserve(static_cast<std::size_t>(horizon_years) + 1);

    double xr = params.routine.x0;
    double xc = params.complex.x0;
    out.push_back({params.start_year, xr, xc, w_r * xr + w_c * xc});
    for (int t = 0; t < horizon_years; ++t) {
        xr = replicator_step(xr, t, params.routine, params.r);
        xc = replicator_step(xc, t, params.complex, params.r);
        out.push_back({params.start_year + t + 1, xr, xc, w_r * xr + w_c * xc});
    }
    return out;
}

}  // namespace taskalloc::replicator
