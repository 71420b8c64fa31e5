#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "argforge/filter.hpp"
#include "argforge/packaging.hpp"
#include "argforge/repo.hpp"

namespace argforge {

struct PipelineConfig {
    std::filesystem::path repo_list_path;
    std::filesystem::path corpus_root;
    std::filesystem::path output_root;
    FilterCriteria criteria;
    std::set<Prim> chosen_primitives;
    std::filesystem::path allowlist_path;   // empty = builtin default
    std::filesystem::path verdicts_path;    // empty = no expected verdicts
    bool offline = false;
    long long max_files_per_repo = 0;       // 0 = unlimited
    long long array_length_bound = 16;
};

/// Declarative JSON config. Keys: repo_list, corpus_root, output_root,
/// allowlist, verdicts, offline, max_files_per_repo, array_length_bound,
/// chosen_primitive_types (array of names), criteria {minIfStmt,
/// minIfOnChosenPrimitive, minLoops, minConnectives, minTypeExpr,
/// minTypeParams, minMethods}. Relative paths resolve against the config
/// file's directory. Returns false and sets `error` on any violation.
bool load_config(const std::filesystem::path& path, PipelineConfig& out,
                 std::string& error);

struct StageReport {
    std::string stage;
    long long inputs = 0;
    long long accepted = 0;
    long long rejected = 0;
    std::map<std::string, long long> reasons;

    bool operator==(const StageReport&) const = default;
};

enum class RunMode { Full, FilterOnly, TransformOnly };

struct PipelineResult {
    std::vector<StageReport> reports;
    std::vector<BenchmarkArtifact> artifacts;
    CorpusManifest manifest;
    std::vector<std::string> diagnostics;
};

/// Stages: acquire -> enumerate -> parse -> filter -> transform -> package.
/// Files are processed in lexicographic (repo id, relative path) order;
/// a failure in any stage rejects only that file. FilterOnly stops after the
/// filter stage (reports only); TransformOnly skips the filter and writes
/// transformed sources without task definitions. Full mode also writes
/// manifest.json and report.json under output_root. Throws only on broken
/// preconditions (unreadable repo list, unwritable output root).
PipelineResult run_pipeline(const PipelineConfig& cfg, RunMode mode = RunMode::Full,
                            Fetcher* fetcher = nullptr);

std::string report_to_json(const std::vector<StageReport>& reports,
                           const std::vector<std::string>& diagnostics);

} // namespace argforge
