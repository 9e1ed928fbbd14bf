#pragma once

#include <optional>
#include <vector>

#include "taskalloc/boundary.hpp"

namespace taskalloc::sweep {

/// Axes of a (p, q, gamma) grid over the continuous boundary model.
struct GridSpec {
    std::vector<double> p_values;
    std::vector<double> q_values;
    std::vector<double> gamma_values;
    int horizon_years = 20;
    double initial_share_target = 0.10;
    double alpha_H = 1.0;
    double beta_H = 1.5;
    double beta_M = 2.5;
    int start_year = 2025;

    /// Axes non-empty, strictly ascending and positive; target in (0,1).
    void validate() const;

    bool operator==(const GridSpec&) const = default;
};

struct GridCell {
    double p = 0.0;
    double q = 0.0;
    double gamma = 0.0;
    double alpha_M_used = 0.0;
    double final_share = 0.0;
    std::optional<int> cross50_year;
};

/// p in {1.5, ..., 3.5}, q = 5, gamma in {0.03, ..., 0.07}, 20 years, 10% start.
GridSpec paper_grid();

/// Calibrated parameters of one cell: alpha_M pins the t = 0 share to the
/// target under Beta(p, q); gamma is taken as given.
boundary::ContinuousParams cell_params(const GridSpec& spec, double p, double q, double gamma);

/// First calendar year in [start, start + horizon] whose share reaches 0.5.
std::optional<int> cross50(const boundary::ContinuousParams& params, int horizon_years);

/// Cells in row-major order: p outer, q middle, gamma inner.
std::vector<GridCell> run_grid(const GridSpec& spec);

}  // namespace taskalloc::sweep
