#pragma once

#include <cstddef>
#include <vector>

#include "taskalloc/numerics.hpp"

namespace taskalloc::boundary {

/// Linear payoffs on task intricacy theta in [0,1]:
///   human   u_H(theta)    = alpha_H + beta_H theta
///   machine u_M(t, theta) = alpha_M - beta_M theta + gamma t
/// with tasks distributed as Beta(p, q).
struct ContinuousParams {
    double alpha_H = 1.0;
    double beta_H = 1.5;
    double alpha_M = 1.3704;
    double beta_M = 2.5;
    double gamma = 0.04336;
    numerics::BetaShape shape{2.0, 5.0};
    int start_year = 2025;

    /// beta_H, beta_M, gamma > 0; intercepts finite; shape valid.
    void validate() const;

    bool operator==(const ContinuousParams&) const = default;
};

struct BoundaryPoint {
    int year = 0;
    double theta = 0.0;  ///< raw boundary, may lie outside [0,1]
    double share = 0.0;
};

/// Machine-minus-human payoff sampled on a (year, theta) lattice, row-major
/// with one row per year.
struct AdvantageGrid {
    std::vector<int> years;
    std::vector<double> thetas;
    std::vector<double> values;

    double at(std::size_t year_index, std::size_t theta_index) const
    {
        return values[year_index * thetas.size() + theta_index];
    }
};

/// alpha_H = 1.0, beta_H = 1.5, alpha_M = 1.3704, beta_M = 2.5,
/// gamma = 0.04336, Beta(2,5), from 2025.
ContinuousParams paper_defaults();

double payoff_human(double theta, const ContinuousParams& params);
double payoff_machine(double theta, int t, const ContinuousParams& params);

/// theta_t = (alpha_M - alpha_H + gamma t) / (beta_M + beta_H).
double automation_boundary(int t, const ContinuousParams& params);

/// Beta CDF at the boundary, clamped to [0,1] before evaluation.
double automated_share(int t, const ContinuousParams& params);

/// Points for t = 0..horizon_years.
std::vector<BoundaryPoint> simulate_boundary(const ContinuousParams& params, int horizon_years);

/// Entry (i, j) is u_M(theta_j, years_i - start_year) - u_H(theta_j).
/// Both lists must be non-empty and ascending.
AdvantageGrid advantage_grid(const ContinuousParams& params, const std::vector<int>& years,
                             const std::vector<double>& thetas);

/// Fits alpha_M and gamma so that the automated share is share_at_start at
/// t = 0 and share_at_end at t = horizon_years.
ContinuousParams calibrate(double share_at_start, double share_at_end, int horizon_years,
                           double alpha_H, double beta_H, double beta_M,
                           const numerics::BetaShape& shape, int start_year = 2025);

}  // namespace taskalloc::boundary
