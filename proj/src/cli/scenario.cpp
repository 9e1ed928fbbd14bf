#include "taskalloc/cli/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace taskalloc::cli {

using nlohmann::json;

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : ValidationError(message), line_(line), column_(column)
{
}

namespace {

// Reads the members of one JSON object, type-checking each and rejecting
// any member that was never asked for.
class ObjectReader {
public:
    ObjectReader(const json& object, std::string context) : object_(object), context_(std::move(context))
    {
        if (!object_.is_object()) {
            throw ValidationError("'" + context_ + "' must be a JSON object");
        }
    }

    bool has(const std::string& key) const { return object_.contains(key); }

    void number(const std::string& key, double& out)
    {
        if (const json* value = take(key)) {
            if (!value->is_number()) {
                throw ValidationError("'" + path(key) + "' must be a number");
            }
            out = value->get<double>();
        }
    }

    void integer(const std::string& key, int& out)
    {
        if (const json* value = take(key)) {
            if (!value->is_number_integer()) {
                throw ValidationError("'" + path(key) + "' must be an integer");
            }
            const auto wide = value->get<long long>();
            if (wide < -1000000000LL || wide > 1000000000LL) {
                throw ValidationError("'" + path(key) + "' is out of range");
            }
            out = static_cast<int>(wide);
        }
    }

    void string(const std::string& key, std::string& out)
    {
        if (const json* value = take(key)) {
            if (!value->is_string()) {
                throw ValidationError("'" + path(key) + "' must be a string");
            }
            out = value->get<std::string>();
        }
    }

    void number_list(const std::string& key, std::vector<double>& out)
    {
        if (const json* value = take(key)) {
            if (!value->is_array()) {
                throw ValidationError("'" + path(key) + "' must be an array of numbers");
            }
            out.clear();
            for (const auto& item : *value) {
                if (!item.is_number()) {
                    throw ValidationError("'" + path(key) + "' must be an array of numbers");
                }
                out.push_back(item.get<double>());
            }
        }
    }

    const json* object(const std::string& key)
    {
        return take(key);
    }

    std::string path(const std::string& key) const
    {
        return context_.empty() ? key : context_ + "." + key;
    }

    void finish() const
    {
        for (const auto& [key, value] : object_.items()) {
            if (!seen_.contains(key)) {
                throw ValidationError("unknown key '" + path(key) + "'");
            }
        }
    }

private:
    const json* take(const std::string& key)
    {
        seen_.insert(key);
        auto it = object_.find(key);
        return it == object_.end() ? nullptr : &*it;
    }

    const json& object_;
    std::string context_;
    std::set<std::string> seen_;
};

// Re-raises a parameter invariant failure as a validation error.
template <typename F>
void validated(F&& check)
{
    try {
        check();
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError(e.what());
    }
}

void read_category(ObjectReader& parent, const std::string& key, replicator::CategoryParams& cat)
{
    if (const json* node = parent.object(key)) {
        ObjectReader reader(*node, parent.path(key));
        reader.number("x0", cat.x0);
        reader.number("a", cat.a);
        reader.number("g", cat.g);
        reader.number("b", cat.b);
        reader.finish();
    }
}

void read_params(const json& node, AggregateRun& run)
{
    ObjectReader reader(node, "params");
    reader.number("alpha", run.params.alpha);
    reader.number("beta", run.params.beta);
    reader.number("x0", run.params.x0);
    reader.integer("start_year", run.params.start_year);
    reader.integer("horizon_years", run.horizon_years);
    reader.finish();
}

void read_params(const json& node, ReplicatorRun& run)
{
    ObjectReader reader(node, "params");
    read_category(reader, "routine", run.params.routine);
    read_category(reader, "complex", run.params.complex);
    reader.number("r", run.params.r);
    reader.number("w_routine", run.params.w_routine);
    reader.integer("start_year", run.params.start_year);
    reader.integer("horizon_years", run.horizon_years);
    reader.finish();
}

void read_params(const json& node, BoundaryRun& run)
{
    ObjectReader reader(node, "params");
    auto& p = run.params;
    reader.number("alpha_H", p.alpha_H);
    reader.number("beta_H", p.beta_H);
    reader.number("alpha_M", p.alpha_M);
    reader.number("beta_M", p.beta_M);
    reader.number("gamma", p.gamma);
    reader.number("p", p.shape.p);
    reader.number("q", p.shape.q);
    reader.integer("start_year", p.start_year);
    reader.integer("horizon_years", run.horizon_years);
    reader.integer("heatmap_year_step", run.heatmap_year_step);
    reader.integer("heatmap_theta_count", run.heatmap_theta_count);
    reader.finish();
}

void read_params(const json& node, LatticeRun& run)
{
    ObjectReader reader(node, "params");
    reader.integer("n_tasks", run.n_tasks);
    reader.number("p", run.shape.p);
    reader.number("q", run.shape.q);
    reader.number("alpha_H", run.alpha_H);
    reader.number("beta_H", run.beta_H);
    reader.string("schedule", run.schedule);
    reader.number("alpha_M", run.alpha_M);
    reader.number("beta_M", run.beta_M);
    reader.number("gamma", run.gamma);
    reader.number("limit_intercept", run.limit_intercept);
    reader.number("limit_slope", run.limit_slope);
    reader.integer("max_years", run.max_years);
    reader.integer("stability_window", run.stability_window);
    reader.integer("start_year", run.start_year);
    reader.finish();
}

void read_params(const json& node, SweepRun& run)
{
    ObjectReader reader(node, "params");
    auto& s = run.spec;
    reader.number_list("p_values", s.p_values);
    reader.number_list("q_values", s.q_values);
    reader.number_list("gamma_values", s.gamma_values);
    reader.integer("horizon_years", s.horizon_years);
    reader.number("initial_share_target", s.initial_share_target);
    reader.number("alpha_H", s.alpha_H);
    reader.number("beta_H", s.beta_H);
    reader.number("beta_M", s.beta_M);
    reader.integer("start_year", s.start_year);
    reader.finish();
}

void validate_params(const ModelParams& params)
{
    struct Visitor {
        void operator()(const AggregateRun& run) const
        {
            run.params.validate();
            if (run.horizon_years < 1) {
                throw ValidationError("'params.horizon_years' must be >= 1");
            }
        }
        void operator()(const ReplicatorRun& run) const
        {
            run.params.validate();
            if (run.horizon_years < 1) {
                throw ValidationError("'params.horizon_years' must be >= 1");
            }
        }
        void operator()(const BoundaryRun& run) const
        {
            run.params.validate();
            if (run.horizon_years < 0) {
                throw ValidationError("'params.horizon_years' must be >= 0");
            }
            if (run.heatmap_year_step < 1) {
                throw ValidationError("'params.heatmap_year_step' must be >= 1");
            }
            if (run.heatmap_theta_count < 2) {
                throw ValidationError("'params.heatmap_theta_count' must be >= 2");
            }
        }
        void operator()(const LatticeRun& run) const { run.validate(); }
        void operator()(const SweepRun& run) const { run.spec.validate(); }
    };
    validated([&] { std::visit(Visitor{}, params); });
}

ModelParams default_params(Model model)
{
    switch (model) {
    case Model::Aggregate:
        return AggregateRun{};
    case Model::Replicator:
        return ReplicatorRun{replicator::paper_defaults(), 20};
    case Model::Boundary:
        return BoundaryRun{};
    case Model::Lattice:
        return LatticeRun{};
    case Model::Sweep:
        return SweepRun{sweep::paper_grid()};
    }
    throw ValidationError("unknown model");
}

void read_output(const json& node, OutputSpec& out)
{
    ObjectReader reader(node, "output");
    std::string format(to_string(out.format));
    reader.string("format", format);
    out.format = parse_format(format);
    reader.string("path", out.path);
    reader.integer("precision", out.precision);
    if (reader.has("chart")) {
        std::string chart;
        reader.string("chart", chart);
        out.chart = parse_chart(chart);
    }
    reader.integer("width", out.width);
    reader.integer("height", out.height);
    reader.finish();
    if (out.precision < 0 || out.precision > 17) {
        throw ValidationError("'output.precision' must lie in [0,17]");
    }
    if (out.width < 1 || out.height < 1) {
        throw ValidationError("'output.width' and 'output.height' must be positive");
    }
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min(byte, text.size());
    for (std::size_t i = 0; i + 1 < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

json params_json(const ModelParams& params)
{
    struct Visitor {
        json operator()(const AggregateRun& run) const
        {
            return {{"alpha", run.params.alpha},
                    {"beta", run.params.beta},
                    {"x0", run.params.x0},
                    {"start_year", run.params.start_year},
                    {"horizon_years", run.horizon_years}};
        }
        json operator()(const ReplicatorRun& run) const
        {
            auto category = [](const replicator::CategoryParams& c) {
                return json{{"x0", c.x0}, {"a", c.a}, {"g", c.g}, {"b", c.b}};
            };
            return {{"routine", category(run.params.routine)},
                    {"complex", category(run.params.complex)},
                    {"r", run.params.r},
                    {"w_routine", run.params.w_routine},
                    {"start_year", run.params.start_year},
                    {"horizon_years", run.horizon_years}};
        }
        json operator()(const BoundaryRun& run) const
        {
            const auto& p = run.params;
            return {{"alpha_H", p.alpha_H},
                    {"beta_H", p.beta_H},
                    {"alpha_M", p.alpha_M},
                    {"beta_M", p.beta_M},
                    {"gamma", p.gamma},
                    {"p", p.shape.p},
                    {"q", p.shape.q},
                    {"start_year", p.start_year},
                    {"horizon_years", run.horizon_years},
                    {"heatmap_year_step", run.heatmap_year_step},
                    {"heatmap_theta_count", run.heatmap_theta_count}};
        }
        json operator()(const LatticeRun& run) const
        {
            return {{"n_tasks", run.n_tasks},
                    {"p", run.shape.p},
                    {"q", run.shape.q},
                    {"alpha_H", run.alpha_H},
                    {"beta_H", run.beta_H},
                    {"schedule", run.schedule},
                    {"alpha_M", run.alpha_M},
                    {"beta_M", run.beta_M},
                    {"gamma", run.gamma},
                    {"limit_intercept", run.limit_intercept},
                    {"limit_slope", run.limit_slope},
                    {"max_years", run.max_years},
                    {"stability_window", run.stability_window},
                    {"start_year", run.start_year}};
        }
        json operator()(const SweepRun& run) const
        {
            const auto& s = run.spec;
            return {{"p_values", s.p_values},
                    {"q_values", s.q_values},
                    {"gamma_values", s.gamma_values},
                    {"horizon_years", s.horizon_years},
                    {"initial_share_target", s.initial_share_target},
                    {"alpha_H", s.alpha_H},
                    {"beta_H", s.beta_H},
                    {"beta_M", s.beta_M},
                    {"start_year", s.start_year}};
        }
    };
    return std::visit(Visitor{}, params);
}

}  // namespace

void LatticeRun::validate() const
{
    if (n_tasks < 0 || n_tasks > 1000000) {
        throw ValidationError("'params.n_tasks' must lie in [0, 1000000]");
    }
    shape.validate();
    if (!std::isfinite(alpha_H) || !std::isfinite(beta_H)) {
        throw ValidationError("human utility coefficients must be finite");
    }
    if (schedule == "linear") {
        if (!(gamma >= 0.0) || !std::isfinite(alpha_M) || !std::isfinite(beta_M)) {
            throw ValidationError("linear schedule needs finite alpha_M, beta_M and gamma >= 0");
        }
    } else if (schedule == "saturating") {
        // The limit must be non-negative on [0,1] for u_M to grow with t.
        if (!(limit_intercept >= 0.0) || !(limit_intercept - limit_slope >= 0.0)) {
            throw ValidationError(
                "saturating schedule needs limit_intercept - limit_slope theta >= 0 on [0,1]");
        }
    } else {
        throw ValidationError("'params.schedule' must be \"linear\" or \"saturating\", got \"" +
                              schedule + "\"");
    }
    if (max_years < 1) {
        throw ValidationError("'params.max_years' must be >= 1");
    }
    if (stability_window < 1) {
        throw ValidationError("'params.stability_window' must be >= 1");
    }
}

lattice::TaskUniverse LatticeRun::universe() const
{
    validate();
    auto tasks = lattice::quantile_tasks(n_tasks, shape);
    auto human = lattice::linear_human(alpha_H, beta_H);
    if (schedule == "linear") {
        return {std::move(tasks), std::move(human),
                lattice::MachineSchedule(lattice::LinearGrowth{alpha_M, beta_M, gamma})};
    }
    const double intercept = limit_intercept;
    const double slope = limit_slope;
    lattice::Saturating saturating{
        [=](const lattice::Task& task) { return intercept - slope * task.theta; }};
    return {std::move(tasks), std::move(human), lattice::MachineSchedule(std::move(saturating))};
}

std::string_view to_string(Model model)
{
    switch (model) {
    case Model::Aggregate:
        return "aggregate";
    case Model::Replicator:
        return "replicator";
    case Model::Boundary:
        return "boundary";
    case Model::Lattice:
        return "lattice";
    case Model::Sweep:
        return "sweep";
    }
    return "";
}

std::string_view to_string(Format format)
{
    return format == Format::Csv ? "csv" : "svg";
}

std::string_view to_string(Chart chart)
{
    switch (chart) {
    case Chart::Line:
        return "line";
    case Chart::MultiLine:
        return "multi-line";
    case Chart::Heatmap:
        return "heatmap";
    }
    return "";
}

Model parse_model(std::string_view text)
{
    for (const Model m :
         {Model::Aggregate, Model::Replicator, Model::Boundary, Model::Lattice, Model::Sweep}) {
        if (to_string(m) == text) {
            return m;
        }
    }
    throw ValidationError("unknown model '" + std::string(text) + "'");
}

Format parse_format(std::string_view text)
{
    if (text == "csv") {
        return Format::Csv;
    }
    if (text == "svg") {
        return Format::Svg;
    }
    throw ValidationError("unknown output format '" + std::string(text) + "'");
}

Chart parse_chart(std::string_view text)
{
    for (const Chart c : {Chart::Line, Chart::MultiLine, Chart::Heatmap}) {
        if (to_string(c) == text) {
            return c;
        }
    }
    throw ValidationError("unknown chart '" + std::string(text) + "'");
}

const std::vector<std::string>& builtin_names()
{
    static const std::vector<std::string> names = {"paper-aggregate", "paper-replicator",
                                                   "paper-boundary", "paper-grid"};
    return names;
}

ScenarioConfig builtin(std::string_view name)
{
    ScenarioConfig config;
    if (name == "paper-aggregate") {
        config.model = Model::Aggregate;
    } else if (name == "paper-replicator") {
        config.model = Model::Replicator;
    } else if (name == "paper-boundary") {
        config.model = Model::Boundary;
    } else if (name == "paper-grid") {
        config.model = Model::Sweep;
    } else {
        throw ValidationError("unknown scenario '" + std::string(name) + "'");
    }
    config.params = default_params(config.model);
    return config;
}

ScenarioConfig load_config(std::string_view text)
{
    json document;
    try {
        document = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_and_column(text, e.byte);
        throw ParseError("parse error at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + e.what(),
                         line, column);
    }

    ObjectReader top(document, "");
    std::string model_name;
    top.string("model", model_name);
    if (model_name.empty()) {
        throw ValidationError("missing required key 'model'");
    }

    ScenarioConfig config;
    config.model = parse_model(model_name);
    config.params = default_params(config.model);

    if (top.has("scenario")) {
        std::string scenario;
        top.string("scenario", scenario);
        const ScenarioConfig base = builtin(scenario);
        if (base.model != config.model) {
            throw ValidationError("scenario '" + scenario + "' is a " +
                                  std::string(to_string(base.model)) + " scenario, not " +
                                  model_name);
        }
        config.params = base.params;
    }
    if (const json* params = top.object("params")) {
        std::visit([&](auto& run) { read_params(*params, run); }, config.params);
    }
    if (const json* output = top.object("output")) {
        read_output(*output, config.output);
    }
    top.finish();

    validate_params(config.params);
    return config;
}

json to_json(const ScenarioConfig& config)
{
    json output = {{"format", to_string(config.output.format)},
                   {"precision", config.output.precision},
                   {"width", config.output.width},
                   {"height", config.output.height}};
    if (!config.output.path.empty()) {
        output["path"] = config.output.path;
    }
    if (config.output.chart) {
        output["chart"] = to_string(*config.output.chart);
    }
    return {{"model", to_string(config.model)},
            {"params", params_json(config.params)},
            {"output", output}};
}

}  // namespace taskalloc::cli
