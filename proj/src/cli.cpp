#include "chernslope/cli.hpp"

#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "chernslope/errors.hpp"
#include "chernslope/report.hpp"

namespace chernslope {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chern numbers of degeneracy loci and slopes of families of curves"};
    app.name("chernslope");

    std::string config;
    std::string bundled;
    bool check = false;
    OutputFormat format = OutputFormat::exact;
    const std::map<std::string, OutputFormat> formats{
        {"exact", OutputFormat::exact}, {"decimal", OutputFormat::decimal}, {"json", OutputFormat::json}};

    auto* config_opt = app.add_option("--config", config, "Scenario JSON file");
    auto* scenario_opt =
        app.add_option("--scenario", bundled, "Bundled scenario")->check(CLI::IsMember({"m15", "m16"}));
    config_opt->excludes(scenario_opt);
    app.add_option("--format", format, "Output format: exact (default), decimal, json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_flag("--check", check, "Run the double point and sigma~ identity cross-checks; fail on mismatch");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitScenarioError;
    }
    if (config.empty() && bundled.empty()) {
        err << "error: one of --config or --scenario is required\n";
        return kExitScenarioError;
    }

    try {
        const Scenario scenario =
            config.empty() ? parse_scenario_text(*bundled_scenario(bundled), bundled) : parse_scenario(config);
        RunOptions options;
        options.check = check;
        const Report report = run_scenario(scenario, options);
        out << render_report(report, format);
        if (!report.checks_passed()) {
            err << "error: cross-check mismatch\n";
            return kExitInternalError;
        }
        return kExitOk;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitScenarioError;
    }
}

}  // namespace chernslope
