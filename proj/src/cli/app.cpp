#include "taskalloc/cli/app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "taskalloc/cli/golden.hpp"
#include "taskalloc/cli/report.hpp"
#include "taskalloc/cli/scenario.hpp"

namespace taskalloc::cli {

namespace {

namespace fs = std::filesystem;

struct OutputFlags {
    std::string out_path;
    std::string format;
    std::optional<int> precision;
    std::string chart;
};

void add_output_flags(CLI::App* command, OutputFlags& flags)
{
    command->add_option("--out", flags.out_path, "Write output to this path instead of stdout");
    command->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "svg"}));
    command->add_option("--precision", flags.precision, "Decimal places for CSV numbers")
        ->check(CLI::Range(0, 17));
    command->add_option("--chart", flags.chart, "Chart type for SVG output")
        ->check(CLI::IsMember({"line", "multi-line", "heatmap"}));
}

void apply_flags(ScenarioConfig& config, const OutputFlags& flags)
{
    if (!flags.out_path.empty()) {
        config.output.path = flags.out_path;
    }
    if (!flags.format.empty()) {
        config.output.format = parse_format(flags.format);
    }
    if (flags.precision) {
        config.output.precision = *flags.precision;
    }
    if (!flags.chart.empty()) {
        config.output.chart = parse_chart(flags.chart);
    }
}

// The document is written to a sibling temporary and renamed into place,
// so a failure never leaves a truncated file at `path`.
void write_atomically(const std::string& path, const std::string& content)
{
    const fs::path target(path);
    fs::path temp = target;
    temp += ".partial";
    {
        std::ofstream file(temp, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw std::runtime_error("cannot open '" + temp.string() + "' for writing");
        }
        file.write(content.data(), static_cast<std::streamsize>(content.size()));
        file.flush();
        if (!file) {
            std::error_code ignored;
            fs::remove(temp, ignored);
            throw std::runtime_error("failed writing '" + temp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(temp, target, ec);
    if (ec) {
        fs::remove(temp, ec);
        throw std::runtime_error("cannot move output into '" + path + "'");
    }
}

void emit(const ScenarioConfig& config, std::ostream& out)
{
    const std::string document = render(config);
    if (config.output.path.empty()) {
        out << document;
    } else {
        write_atomically(config.output.path, document);
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot read config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Task-allocation dynamics: simulate, tabulate and plot the human/machine models"};
    app.name("taskalloc");
    app.require_subcommand(1);

    OutputFlags flags;

    std::string config_path;
    auto* run = app.add_subcommand("run", "Run a JSON scenario file");
    run->add_option("config", config_path, "Path to the scenario file")->required();
    add_output_flags(run, flags);

    std::string scenario_name;
    auto* scenario = app.add_subcommand("scenario", "Run a builtin scenario");
    scenario->add_option("name", scenario_name, "Builtin scenario name")
        ->required()
        ->check(CLI::IsMember(builtin_names()));
    add_output_flags(scenario, flags);

    bool expand = false;
    auto* list = app.add_subcommand("list-scenarios", "List builtin scenarios");
    list->add_flag("--expand", expand, "Print each scenario as a full JSON config, one per line");

    auto* verify = app.add_subcommand("verify", "Check the embedded reference values");

    // CLI11 parses the vector back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (run->parsed()) {
            ScenarioConfig config = load_config(read_file(config_path));
            apply_flags(config, flags);
            emit(config, out);
        } else if (scenario->parsed()) {
            ScenarioConfig config = builtin(scenario_name);
            apply_flags(config, flags);
            emit(config, out);
        } else if (list->parsed()) {
            for (const auto& name : builtin_names()) {
                if (expand) {
                    out << to_json(builtin(name)).dump() << "\n";
                } else {
                    out << name << "\n";
                }
            }
        } else if (verify->parsed()) {
            const auto checks = run_golden_checks();
            out << format_golden_table(checks);
            const bool ok = std::all_of(checks.begin(), checks.end(),
                                        [](const GoldenCheck& c) { return c.passed(); });
            if (!ok) {
                err << "error: reference checks failed\n";
                return kExitRuntime;
            }
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace taskalloc::cli
