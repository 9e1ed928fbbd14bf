#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "taskalloc/cli/app.hpp"
#include "taskalloc/cli/report.hpp"
#include "taskalloc/cli/scenario.hpp"
#include "taskalloc/cli/svg.hpp"

using namespace taskalloc;
using namespace taskalloc::cli;
namespace fs = std::filesystem;

namespace {

std::size_t count(const std::string& haystack, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult invoke(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::path(TASKALLOC_TEST_TMPDIR) / "cli_scratch";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    fs::remove(p);
    return p;
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("load_config reads a minimal document")
{
    const auto config = load_config(R"({"model": "aggregate", "params": {"alpha": 0.2}})");
    CHECK(config.model == Model::Aggregate);
    const auto& run = std::get<AggregateRun>(config.params);
    CHECK(run.params.alpha == 0.2);
    CHECK(run.params.beta == 0.05);
    CHECK(run.horizon_years == 20);
    CHECK(config.output.format == Format::Csv);
    CHECK(config.output.precision == 6);
}

TEST_CASE("load_config seeds from a builtin scenario")
{
    const auto config = load_config(R"({"model": "boundary", "scenario": "paper-boundary",
                                        "params": {"gamma": 0.05}, "output": {"format": "svg"}})");
    const auto& run = std::get<BoundaryRun>(config.params);
    CHECK(run.params.gamma == 0.05);
    CHECK(run.params.alpha_M == 1.3704);
    CHECK(config.output.format == Format::Svg);
}

TEST_CASE("load_config errors")
{
    CHECK_THROWS_WITH_AS(load_config(R"({"model": "aggregate", "params": {"alpah": 0.2}})"),
                         doctest::Contains("params.alpah"), ValidationError);
    CHECK_THROWS_AS(load_config(R"({"model": "aggregate", "extra": 1})"), ValidationError);
    CHECK_THROWS_AS(load_config(R"({"params": {}})"), ValidationError);
    CHECK_THROWS_AS(load_config(R"({"model": "spline"})"), ValidationError);
    CHECK_THROWS_AS(load_config(R"({"model": "aggregate", "params": {"alpha": -1}})"), ValidationError);
    CHECK_THROWS_AS(load_config(R"({"model": "aggregate", "params": {"alpha": "high"}})"), ValidationError);
    CHECK_THROWS_AS(load_config(R"({"model": "aggregate", "scenario": "paper-grid"})"), ValidationError);
    CHECK_THROWS_AS(load_config(R"({"model": "aggregate", "output": {"precision": 40}})"), ValidationError);

    try {
        load_config("{\n  \"model\": \"aggregate\",\n  \"params\": {\"alpha\": 0.2,}\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() > 1);
    }
}

TEST_CASE("expanded configs round trip")
{
    for (const auto& name : builtin_names()) {
        const auto config = builtin(name);
        CHECK(load_config(to_json(config).dump()) == config);
    }
    auto custom = builtin("paper-grid");
    custom.output.format = Format::Svg;
    custom.output.chart = Chart::Heatmap;
    custom.output.path = "grid.svg";
    CHECK(load_config(to_json(custom).dump()) == custom);
    CHECK_THROWS_AS(builtin("nope"), ValidationError);
}

TEST_CASE("format_fixed")
{
    CHECK(format_fixed(0.185, 4) == "0.1850");
    CHECK(format_fixed(-0.0000001, 3) == "0.000");
    CHECK(format_fixed(-0.25, 2) == "-0.25");
    CHECK(format_fixed(2.0, 0) == "2");
}

TEST_CASE("CSV output")
{
    const auto traj = aggregate::simulate(aggregate::paper_defaults(), 20);
    const auto csv = lines(emit_csv(std::span(traj), 4));
    REQUIRE(csv.size() == 22);
    CHECK(csv[0] == "year,share");
    CHECK(csv[1] == "2025,0.1000");
    CHECK(csv[2] == "2026,0.1850");

    CHECK(emit_csv(std::span<const aggregate::SharePoint>{}, 4) == "year,share\n");

    const auto rep = replicator::simulate_replicator(replicator::paper_defaults(), 2);
    CHECK(lines(emit_csv(std::span(rep), 4))[0] == "year,x_routine,x_complex,x_total");

    const auto cells = sweep::run_grid(sweep::paper_grid());
    const auto grid = lines(emit_csv(std::span(cells), 3));
    CHECK(grid[0] == "p,q,gamma,alpha_M,final_share,cross50_year");
    REQUIRE(grid.size() == 26);
    CHECK(grid[1].rfind("1.5,5,0.03,", 0) == 0);
    CHECK(grid[8].rfind("2.0,5,0.05,", 0) == 0);
    // p = 3.5, gamma = 0.03 never reaches one half
    CHECK(grid[21].back() == ',');
}

TEST_CASE("SVG output")
{
    const auto agg = execute(builtin("paper-aggregate").params);
    const auto line = emit_svg(agg, Chart::Line, 800, 450);
    CHECK(line.rfind("<?xml", 0) == 0);
    CHECK(count(line, "<polyline") == 1);
    CHECK(count(line, "<svg") == 1);

    const auto rep = execute(builtin("paper-replicator").params);
    CHECK(count(emit_svg(rep, Chart::MultiLine, 800, 450), "<polyline") == 3);

    const auto bnd = execute(builtin("paper-boundary").params);
    const auto heat = emit_svg(bnd, Chart::Heatmap, 800, 450);
    const auto& advantage = std::get<BoundaryResult>(bnd).advantage;
    CHECK(count(heat, "<rect") >= advantage.values.size());
    CHECK(count(heat, "<polyline") == 1);

    const auto grid = execute(builtin("paper-grid").params);
    CHECK(count(emit_svg(grid, Chart::Heatmap, 800, 450), "<rect") >= 25);

    CHECK_THROWS_AS(emit_svg(agg, Chart::Heatmap, 800, 450), UnsupportedChart);
    CHECK_THROWS_AS(emit_svg(grid, Chart::Line, 800, 450), UnsupportedChart);
    CHECK(coord(-0.001) == "0.00");
    CHECK(escape_xml("a<b & \"c\"") == "a&lt;b &amp; &quot;c&quot;");
}

TEST_CASE("boundary overlay follows theta_t")
{
    const auto bnd = std::get<BoundaryResult>(execute(builtin("paper-boundary").params));
    bool found = false;
    for (const auto& [year, theta] : bnd.boundary_line) {
        if (year == 2035) {
            CHECK(std::fabs(theta - 0.2010) < 5e-4);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("lattice scenario output")
{
    auto config = load_config(R"({"model": "lattice", "params": {"n_tasks": 50, "schedule": "saturating"}})");
    const auto csv = lines(render(config));
    CHECK(csv[0] == "year,automated,share");
    CHECK(csv.size() >= 3);
    CHECK_THROWS_AS(load_config(R"({"model": "lattice", "params": {"schedule": "cubic"}})"), ValidationError);
}

TEST_CASE("run_cli scenario and list")
{
    const auto r = invoke({"scenario", "paper-aggregate", "--precision", "4"});
    CHECK(r.code == kExitOk);
    const auto csv = lines(r.out);
    REQUIRE(csv.size() == 22);
    CHECK(csv[6] == "2030,0.4152");

    const auto list = invoke({"list-scenarios"});
    CHECK(list.code == kExitOk);
    CHECK(lines(list.out) == builtin_names());

    const auto expanded = invoke({"list-scenarios", "--expand"});
    const auto docs = lines(expanded.out);
    REQUIRE(docs.size() == builtin_names().size());
    for (std::size_t i = 0; i < docs.size(); ++i) {
        CHECK(load_config(docs[i]) == builtin(builtin_names()[i]));
    }
}

TEST_CASE("run_cli exit codes")
{
    CHECK(invoke({}).code == kExitValidation);
    CHECK(invoke({"frobnicate"}).code == kExitValidation);
    CHECK(invoke({"scenario", "unknown"}).code == kExitValidation);
    CHECK(invoke({"scenario", "paper-aggregate", "--format", "pdf"}).code == kExitValidation);
    CHECK(invoke({"scenario", "paper-aggregate", "--format", "svg", "--chart", "heatmap"}).code == kExitValidation);
    CHECK(invoke({"run", (fs::path(TASKALLOC_TEST_TMPDIR) / "missing.json").string()}).code == kExitRuntime);
    CHECK(invoke({"--help"}).code == kExitOk);

    const auto bad = scratch("bad.json");
    std::ofstream(bad) << R"({"model": "aggregate", "params": {"alpha": -1}})";
    const auto r = invoke({"run", bad.string()});
    CHECK(r.code == kExitValidation);
    CHECK(r.out.empty());
    CHECK(r.err.find("error:") != std::string::npos);

    const auto verify = invoke({"verify"});
    CHECK(verify.code == kExitOk);
    CHECK(verify.out.find("FAIL") == std::string::npos);
}

TEST_CASE("run_cli writes files atomically and deterministically")
{
    const auto target = scratch("grid.svg");
    CHECK(invoke({"scenario", "paper-grid", "--format", "svg", "--out", target.string()}).code == kExitOk);
    const std::string first = slurp(target);
    CHECK(first.find("</svg>") != std::string::npos);
    CHECK_FALSE(fs::exists(fs::path(target.string() + ".partial")));

    fs::remove(target);
    CHECK(invoke({"scenario", "paper-grid", "--format", "svg", "--out", target.string()}).code == kExitOk);
    CHECK(slurp(target) == first);

    const auto a = invoke({"scenario", "paper-replicator"});
    const auto b = invoke({"scenario", "paper-replicator"});
    CHECK(a.out == b.out);

    const auto untouched = scratch("never.svg");
    CHECK(invoke({"scenario", "paper-aggregate", "--format", "svg", "--chart", "heatmap", "--out",
               untouched.string()})
              .code == kExitValidation);
    CHECK_FALSE(fs::exists(untouched));
    CHECK_FALSE(fs::exists(fs::path(untouched.string() + ".partial")));

    const auto config = scratch("agg.json");
    const auto csv_out = scratch("agg.csv");
    std::ofstream(config) << R"({"model": "aggregate", "output": {"precision": 3, "path": ")" << csv_out.string()
                          << R"("}})";
    CHECK(invoke({"run", config.string()}).code == kExitOk);
    CHECK(lines(slurp(csv_out))[2] == "2026,0.185");
}
