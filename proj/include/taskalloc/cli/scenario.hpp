#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "taskalloc/aggregate.hpp"
#include "taskalloc/boundary.hpp"
#include "taskalloc/error.hpp"
#include "taskalloc/lattice.hpp"
#include "taskalloc/replicator.hpp"
#include "taskalloc/sweep.hpp"

namespace taskalloc::cli {

/// Malformed JSON. Line and column are 1-based.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

enum class Model { Aggregate, Replicator, Boundary, Lattice, Sweep };
enum class Format { Csv, Svg };
enum class Chart { Line, MultiLine, Heatmap };

struct AggregateRun {
    aggregate::AggregateParams params;
    int horizon_years = 20;

    bool operator==(const AggregateRun&) const = default;
};

struct ReplicatorRun {
    replicator::ReplicatorParams params;
    int horizon_years = 20;

    bool operator==(const ReplicatorRun&) const = default;
};

struct BoundaryRun {
    boundary::ContinuousParams params;
    int horizon_years = 20;
    int heatmap_year_step = 2;     ///< spacing of heatmap rows in years
    int heatmap_theta_count = 11;  ///< evenly spaced theta samples on [0,1]

    bool operator==(const BoundaryRun&) const = default;
};

/// Finite task universe at Beta quantiles with linear human utility.
/// schedule "linear": u_M = alpha_M - beta_M theta + gamma t.
/// schedule "saturating": u_M = (limit_intercept - limit_slope theta)(1 - 2^-t).
struct LatticeRun {
    int n_tasks = 1000;
    numerics::BetaShape shape{2.0, 5.0};
    double alpha_H = 1.0;
    double beta_H = 1.5;
    std::string schedule = "linear";
    double alpha_M = 1.3704;
    double beta_M = 2.5;
    double gamma = 0.04336;
    double limit_intercept = 2.2;
    double limit_slope = 1.0;
    int max_years = 50;
    int stability_window = 3;
    int start_year = 2025;

    void validate() const;
    lattice::TaskUniverse universe() const;

    bool operator==(const LatticeRun&) const = default;
};

struct SweepRun {
    sweep::GridSpec spec;

    bool operator==(const SweepRun&) const = default;
};

using ModelParams = std::variant<AggregateRun, ReplicatorRun, BoundaryRun, LatticeRun, SweepRun>;

struct OutputSpec {
    Format format = Format::Csv;
    std::string path;  ///< empty: standard output
    int precision = 6;
    std::optional<Chart> chart;
    int width = 800;
    int height = 450;

    bool operator==(const OutputSpec&) const = default;
};

struct ScenarioConfig {
    Model model = Model::Aggregate;
    ModelParams params;
    OutputSpec output;

    bool operator==(const ScenarioConfig&) const = default;
};

std::string_view to_string(Model model);
std::string_view to_string(Format format);
std::string_view to_string(Chart chart);
Model parse_model(std::string_view text);
Format parse_format(std::string_view text);
Chart parse_chart(std::string_view text);

/// Names accepted by builtin() and by the "scenario" config key.
const std::vector<std::string>& builtin_names();

/// Paper default scenario by name; throws ValidationError for unknown names.
ScenarioConfig builtin(std::string_view name);

/// Parses and validates a JSON scenario document. Unknown keys anywhere
/// are rejected; a "scenario" key seeds the params before overrides apply.
ScenarioConfig load_config(std::string_view text);

/// Fully expanded document; load_config(to_json(c).dump()) == c.
nlohmann::json to_json(const ScenarioConfig& config);

}  // namespace taskalloc::cli
