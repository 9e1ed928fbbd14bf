#include "taskalloc/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "taskalloc/cli/svg.hpp"

namespace taskalloc::cli {

namespace {

// Fewest decimals (up to 6) that render every value on a sweep axis exactly.
int axis_decimals(const std::vector<double>& axis)
{
    int decimals = 0;
    for (const double v : axis) {
        int d = 0;
        while (d < 6 && std::fabs(v * std::pow(10.0, d) - std::round(v * std::pow(10.0, d))) > 1e-9) {
            ++d;
        }
        decimals = std::max(decimals, d);
    }
    return decimals;
}

BoundaryResult run_boundary(const BoundaryRun& run)
{
    BoundaryResult result;
    result.points = boundary::simulate_boundary(run.params, run.horizon_years);
    std::vector<int> years;
    for (int t = 0; t <= run.horizon_years; t += run.heatmap_year_step) {
        years.push_back(run.params.start_year + t);
    }
    std::vector<double> thetas;
    for (int i = 0; i < run.heatmap_theta_count; ++i) {
        thetas.push_back(static_cast<double>(i) / (run.heatmap_theta_count - 1));
    }
    result.advantage = boundary::advantage_grid(run.params, years, thetas);
    for (const int year : years) {
        result.boundary_line.emplace_back(
            year, boundary::automation_boundary(year - run.params.start_year, run.params));
    }
    return result;
}

}  // namespace

RunResult execute(const ModelParams& params)
{
    struct Visitor {
        RunResult operator()(const AggregateRun& run) const
        {
            return aggregate::simulate(run.params, run.horizon_years);
        }
        RunResult operator()(const ReplicatorRun& run) const
        {
            return replicator::simulate_replicator(run.params, run.horizon_years);
        }
        RunResult operator()(const BoundaryRun& run) const { return run_boundary(run); }
        RunResult operator()(const LatticeRun& run) const
        {
            const auto universe = run.universe();
            return LatticeResult{run.start_year, universe.size(),
                                 lattice::run_delegation(universe, run.max_years, run.stability_window)};
        }
        RunResult operator()(const SweepRun& run) const { return sweep::run_grid(run.spec); }
    };
    return std::visit(Visitor{}, params);
}

std::string format_fixed(double value, int precision)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", precision, value);
    std::string s(buf);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

std::string emit_csv(std::span<const aggregate::SharePoint> points, int precision)
{
    std::string out = "year,share\n";
    for (const auto& p : points) {
        out += std::to_string(p.year) + "," + format_fixed(p.share, precision) + "\n";
    }
    return out;
}

std::string emit_csv(std::span<const replicator::ReplicatorPoint> points, int precision)
{
    std::string out = "year,x_routine,x_complex,x_total\n";
    for (const auto& p : points) {
        out += std::to_string(p.year) + "," + format_fixed(p.x_routine, precision) + "," +
               format_fixed(p.x_complex, precision) + "," + format_fixed(p.x_total, precision) + "\n";
    }
    return out;
}

std::string emit_csv(std::span<const boundary::BoundaryPoint> points, int precision)
{
    std::string out = "year,theta,share\n";
    for (const auto& p : points) {
        out += std::to_string(p.year) + "," + format_fixed(p.theta, precision) + "," +
               format_fixed(p.share, precision) + "\n";
    }
    return out;
}

std::string emit_csv(const LatticeResult& result, int precision)
{
    std::string out = "year,automated,share\n";
    const auto& iterations = result.trace.iterations;
    for (std::size_t k = 0; k < iterations.size(); ++k) {
        out += std::to_string(result.start_year + static_cast<int>(k)) + "," +
               std::to_string(iterations[k].size()) + "," +
               format_fixed(iterations[k].fraction(result.universe_size), precision) + "\n";
    }
    return out;
}

std::string emit_csv(std::span<const sweep::GridCell> cells, int precision)
{
    std::vector<double> ps, qs, gammas;
    for (const auto& c : cells) {
        ps.push_back(c.p);
        qs.push_back(c.q);
        gammas.push_back(c.gamma);
    }
    const int dp = axis_decimals(ps);
    const int dq = axis_decimals(qs);
    const int dg = axis_decimals(gammas);

    std::string out = "p,q,gamma,alpha_M,final_share,cross50_year\n";
    for (const auto& c : cells) {
        out += format_fixed(c.p, dp) + "," + format_fixed(c.q, dq) + "," + format_fixed(c.gamma, dg) +
               "," + format_fixed(c.alpha_M_used, precision) + "," +
               format_fixed(c.final_share, precision) + "," +
               (c.cross50_year ? std::to_string(*c.cross50_year) : std::string()) + "\n";
    }
    return out;
}

std::string emit_csv(const RunResult& result, int precision)
{
    struct Visitor {
        int precision;
        std::string operator()(const std::vector<aggregate::SharePoint>& r) const
        {
            return emit_csv(std::span<const aggregate::SharePoint>(r), precision);
        }
        std::string operator()(const std::vector<replicator::ReplicatorPoint>& r) const
        {
            return emit_csv(std::span<const replicator::ReplicatorPoint>(r), precision);
        }
        std::string operator()(const BoundaryResult& r) const
        {
            return emit_csv(std::span<const boundary::BoundaryPoint>(r.points), precision);
        }
        std::string operator()(const LatticeResult& r) const { return emit_csv(r, precision); }
        std::string operator()(const std::vector<sweep::GridCell>& r) const
        {
            return emit_csv(std::span<const sweep::GridCell>(r), precision);
        }
    };
    return std::visit(Visitor{precision}, result);
}

Chart default_chart(Model model)
{
    switch (model) {
    case Model::Replicator:
        return Chart::MultiLine;
    case Model::Sweep:
        return Chart::Heatmap;
    default:
        return Chart::Line;
    }
}

std::string emit_svg(const RunResult& result, Chart chart, int width, int height)
{
    struct Visitor {
        Chart chart;
        int width;
        int height;

        [[noreturn]] void unsupported(const char* model) const
        {
            throw UnsupportedChart("chart '" + std::string(to_string(chart)) +
                                   "' is not available for the " + model + " model");
        }

        std::string operator()(const std::vector<aggregate::SharePoint>& r) const
        {
            if (chart != Chart::Line) {
                unsupported("aggregate");
            }
            Series s{"automated share", "#1f77b4", {}};
            for (const auto& p : r) {
                s.points.emplace_back(p.year, p.share);
            }
            return render_line_chart({"Automated share", "Year", "Automated share",
                                      {s}, width, height});
        }
        std::string operator()(const std::vector<replicator::ReplicatorPoint>& r) const
        {
            if (chart != Chart::MultiLine) {
                unsupported("replicator");
            }
            Series routine{"Routine", "#1f77b4", {}};
            Series complex{"Complex", "#d62728", {}};
            Series total{"Weighted total", "#000000", {}};
            for (const auto& p : r) {
                routine.points.emplace_back(p.year, p.x_routine);
                complex.points.emplace_back(p.year, p.x_complex);
                total.points.emplace_back(p.year, p.x_total);
            }
            return render_line_chart({"Replicator dynamics", "Year", "Automated share",
                                      {routine, complex, total}, width, height});
        }
        std::string operator()(const BoundaryResult& r) const
        {
            if (chart == Chart::Line) {
                Series s{"automated share", "#7b3294", {}};
                for (const auto& p : r.points) {
                    s.points.emplace_back(p.year, p.share);
                }
                return render_line_chart({"Automated share (continuous tasks)", "Year",
                                          "Automated share", {s}, width, height});
            }
            if (chart != Chart::Heatmap) {
                unsupported("boundary");
            }
            HeatmapSpec spec;
            spec.title = "Machine minus human payoff";
            spec.x_label = "Year";
            spec.y_label = "Task intricacy";
            spec.xs.assign(r.advantage.years.begin(), r.advantage.years.end());
            spec.ys = r.advantage.thetas;
            spec.values = r.advantage.values;
            for (const auto& [year, theta] : r.boundary_line) {
                spec.overlay.emplace_back(year, theta);
            }
            spec.overlay_label = "automation boundary";
            spec.width = width;
            spec.height = height;
            return render_heatmap(spec);
        }
        std::string operator()(const LatticeResult& r) const
        {
            if (chart != Chart::Line) {
                unsupported("lattice");
            }
            Series s{"automated share", "#1f77b4", {}};
            for (std::size_t k = 0; k < r.trace.iterations.size(); ++k) {
                s.points.emplace_back(r.start_year + static_cast<double>(k),
                                      r.trace.iterations[k].fraction(r.universe_size));
            }
            return render_line_chart({"Delegation iteration", "Year", "Automated share",
                                      {s}, width, height});
        }
        std::string operator()(const std::vector<sweep::GridCell>& r) const
        {
            if (chart != Chart::Heatmap) {
                unsupported("sweep");
            }
            std::vector<double> ps, qs, gammas;
            for (const auto& c : r) {
                if (std::find(ps.begin(), ps.end(), c.p) == ps.end()) ps.push_back(c.p);
                if (std::find(qs.begin(), qs.end(), c.q) == qs.end()) qs.push_back(c.q);
                if (std::find(gammas.begin(), gammas.end(), c.gamma) == gammas.end()) gammas.push_back(c.gamma);
            }
            if (qs.size() != 1) {
                throw UnsupportedChart("sweep heatmap needs exactly one q value");
            }
            // Columns gamma, rows p; centred on 0.5 so the colour flips at half automation.
            HeatmapSpec spec;
            spec.title = "Final automated share (q = " + format_fixed(qs.front(), axis_decimals(qs)) + ")";
            spec.x_label = "gamma";
            spec.y_label = "Beta shape p";
            spec.xs = gammas;
            spec.ys = ps;
            spec.values.assign(gammas.size() * ps.size(), 0.0);
            for (std::size_t ip = 0; ip < ps.size(); ++ip) {
                for (std::size_t ig = 0; ig < gammas.size(); ++ig) {
                    spec.values[ig * ps.size() + ip] = r[ip * gammas.size() + ig].final_share - 0.5;
                }
            }
            spec.width = width;
            spec.height = height;
            return render_heatmap(spec);
        }
    };
    return std::visit(Visitor{chart, width, height}, result);
}

std::string render(const ScenarioConfig& config)
{
    const RunResult result = execute(config.params);
    if (config.output.format == Format::Csv) {
        return emit_csv(result, config.output.precision);
    }
    return emit_svg(result, config.output.chart.value_or(default_chart(config.model)),
                    config.output.width, config.output.height);
}

}  // namespace taskalloc::cli
