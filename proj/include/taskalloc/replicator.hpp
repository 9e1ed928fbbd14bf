#pragma once

#include <vector>

namespace taskalloc::replicator {

/// One task category: machine payoff a + g t against a constant human payoff b.
struct CategoryParams {
    double x0 = 0.0;  ///< initial automated fraction
    double a = 0.0;
    double g = 0.0;
    double b = 0.0;

    void validate() const;

    bool operator==(const CategoryParams&) const = default;
};

struct ReplicatorParams {
    CategoryParams routine;
    CategoryParams complex;
    double r = 0.2;           ///< sensitivity
    double w_routine = 0.6;   ///< complex weight is 1 - w_routine
    int start_year = 2025;

    void validate() const;
    double w_complex() const { return 1.0 - w_routine; }

    bool operator==(const ReplicatorParams&) const = default;
};

struct ReplicatorPoint {
    int year = 0;
    double x_routine = 0.0;
    double x_complex = 0.0;
    double x_total = 0.0;
};

ReplicatorParams paper_defaults();

/// Payoff gap (a + g t) - b at t years after the start.
double payoff_gap(int t, const CategoryParams& cat);

/// x + r x (1 - x) ((a + g t) - b). Throws RangeError if the result leaves [0,1].
double replicator_step(double x, int t, const CategoryParams& cat, double r);

/// Point k is the state at start_year + k; the step producing it uses
/// payoffs at t = k - 1.
std::vector<ReplicatorPoint> simulate_replicator(const ReplicatorParams& params, int horizon_years);

}  // namespace taskalloc::replicator
