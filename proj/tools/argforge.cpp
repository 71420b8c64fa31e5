#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "argforge/metrics.hpp"
#include "argforge/pipeline.hpp"

namespace {

void print_reports(const argforge::PipelineResult& result) {
    for (const auto& r : result.reports) {
        std::cout << r.stage << ": " << r.inputs << " in, " << r.accepted
                  << " accepted, " << r.rejected << " rejected";
        if (!r.reasons.empty()) {
            std::cout << " (";
            bool first = true;
            for (const auto& [code, count] : r.reasons) {
                if (!first) std::cout << ", ";
                first = false;
                std::cout << code << "=" << count;
            }
            std::cout << ")";
        }
        std::cout << "\n";
    }
    for (const auto& d : result.diagnostics) std::cerr << d << "\n";
}

int run_mode(const std::string& config_path, bool offline,
             const std::string& out_dir, argforge::RunMode mode) {
    argforge::PipelineConfig cfg;
    std::string error;
    if (!argforge::load_config(config_path, cfg, error)) {
        std::cerr << "configuration error: " << error << "\n";
        return 1;
    }
    if (offline) cfg.offline = true;
    if (!out_dir.empty()) cfg.output_root = out_dir;
    try {
        argforge::PipelineResult result = argforge::run_pipeline(cfg, mode);
        print_reports(result);
        if (mode == argforge::RunMode::Full)
            std::cout << "benchmarks: " << result.manifest.benchmark_count
                      << ", property runs: " << result.manifest.total_property_runs
                      << ", avg loc: " << result.manifest.average_loc() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int report_mode(const std::string& results_path, const std::string& property) {
    std::ifstream in(results_path, std::ios::binary);
    if (!in) {
        std::cerr << "configuration error: cannot read " << results_path << "\n";
        return 1;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    std::vector<std::string> diags;
    auto records = argforge::parse_results(ss.str(), &diags);
    for (const auto& d : diags) std::cerr << d << "\n";

    std::vector<argforge::ReportGroup> groups;
    if (property.empty()) {
        groups.push_back({"ReachSafety", argforge::tabulate(records, std::string("ReachSafety"))});
        groups.push_back({"ExceptionProperty",
                          argforge::tabulate(records, std::string("ExceptionProperty"))});
        groups.push_back({"Cumulative", argforge::tabulate(records)});
    } else {
        groups.push_back({property, argforge::tabulate(records, property)});
    }
    argforge::Report rep = argforge::render_report(groups);
    std::cout << rep.text << "\n" << rep.csv;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"benchmark generation pipeline and verdict metrics"};
    app.require_subcommand(1);

    std::string config_path, out_dir, results_path, property;
    bool offline = false;

    auto add_pipeline_opts = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "pipeline configuration file")->required();
        sub->add_flag("--offline", offline, "never touch the network");
        sub->add_option("--out", out_dir, "override output directory");
    };
    CLI::App* run = app.add_subcommand("run", "full pipeline: acquire through package");
    add_pipeline_opts(run);
    CLI::App* filter_only =
        app.add_subcommand("filter-only", "stop after the filter stage (reports only)");
    add_pipeline_opts(filter_only);
    CLI::App* transform_only = app.add_subcommand(
        "transform-only", "transform every parsed file, skip filtering and packaging");
    add_pipeline_opts(transform_only);

    CLI::App* report = app.add_subcommand("report", "metrics from a verifier results CSV");
    report->add_option("--results", results_path, "results CSV")->required();
    report->add_option("--property", property, "restrict to one property");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return run_mode(config_path, offline, out_dir, argforge::RunMode::Full);
    if (filter_only->parsed())
        return run_mode(config_path, offline, out_dir, argforge::RunMode::FilterOnly);
    if (transform_only->parsed())
        return run_mode(config_path, offline, out_dir, argforge::RunMode::TransformOnly);
    if (report->parsed()) return report_mode(results_path, property);
    return 1;
}
