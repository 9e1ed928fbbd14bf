#pragma once

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "taskalloc/cli/scenario.hpp"

namespace taskalloc::cli {

struct BoundaryResult {
    std::vector<boundary::BoundaryPoint> points;
    boundary::AdvantageGrid advantage;
    /// (year, theta_t) at the heatmap years; the curve drawn over the heatmap.
    std::vector<std::pair<int, double>> boundary_line;
};

struct LatticeResult {
    int start_year = 2025;
    std::size_t universe_size = 0;
    lattice::DelegationTrace trace;
};

using RunResult = std::variant<std::vector<aggregate::SharePoint>,
                               std::vector<replicator::ReplicatorPoint>, BoundaryResult,
                               LatticeResult, std::vector<sweep::GridCell>>;

/// Runs the model described by the config's params block.
RunResult execute(const ModelParams& params);

/// Fixed-point decimal with exactly `precision` digits; "-0.00" becomes "0.00".
std::string format_fixed(double value, int precision);

std::string emit_csv(std::span<const aggregate::SharePoint> points, int precision);
std::string emit_csv(std::span<const replicator::ReplicatorPoint> points, int precision);
std::string emit_csv(std::span<const boundary::BoundaryPoint> points, int precision);
std::string emit_csv(const LatticeResult& result, int precision);
std::string emit_csv(std::span<const sweep::GridCell> cells, int precision);
std::string emit_csv(const RunResult& result, int precision);

/// Chart used when the output block does not name one.
Chart default_chart(Model model);

/// Throws UnsupportedChart when the result type cannot be drawn as `chart`.
std::string emit_svg(const RunResult& result, Chart chart, int width, int height);

class UnsupportedChart : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Renders a config end to end in its configured format.
std::string render(const ScenarioConfig& config);

}  // namespace taskalloc::cli
