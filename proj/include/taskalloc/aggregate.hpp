#pragma once

#include <vector>

namespace taskalloc::aggregate {

/// Aggregate automated-share model x' = x + alpha (1 - x) - beta x.
struct AggregateParams {
    double alpha = 0.10;  ///< automation-adoption rate per year
    double beta = 0.05;   ///< task-creation rate per year
    double x0 = 0.10;     ///< initial automated share
    int start_year = 2025;

    /// alpha, beta in [0,1], alpha + beta > 0, x0 in [0,1].
    void validate() const;

    bool operator==(const AggregateParams&) const = default;
};

struct SharePoint {
    int year = 0;
    double share = 0.0;

    bool operator==(const SharePoint&) const = default;
};

/// alpha = 0.10, beta = 0.05, x0 = 0.10, from 2025.
AggregateParams paper_defaults();

double step(double x, const AggregateParams& params);

/// Steady state alpha / (alpha + beta).
double equilibrium(const AggregateParams& params);

/// x* + (x0 - x*) (1 - alpha - beta)^t.
double closed_form(int t, const AggregateParams& params);

/// horizon_years + 1 points obtained by repeated application of step().
std::vector<SharePoint> simulate(const AggregateParams& params, int horizon_years);

/// Smallest t with |closed_form(t) - x*| < tol.
///
/// Computed from the logarithmic formula and then confirmed against the
/// closed form at t and t - 1, so rounding at an exact boundary cannot
/// shift the answer.
int convergence_time(const AggregateParams& params, double tol);

}  // namespace taskalloc::aggregate
