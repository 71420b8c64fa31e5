#include "argforge/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "argforge/parser.hpp"
#include "argforge/printer.hpp"
#include "argforge/source.hpp"
#include "argforge/types.hpp"

namespace argforge {

namespace {

bool read_file(const std::filesystem::path& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << text;
}

std::filesystem::path resolve_rel(const std::filesystem::path& base,
                                  const std::string& p) {
    std::filesystem::path pp(p);
    return pp.is_absolute() ? pp : base / pp;
}

} // namespace

bool load_config(const std::filesystem::path& path, PipelineConfig& out,
                 std::string& error) {
    std::string text;
    if (!read_file(path, text)) {
        error = "cannot read config file: " + path.string();
        return false;
    }
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        error = "config is not valid JSON: " + path.string();
        return false;
    }
    std::filesystem::path base = path.parent_path();
    try {
        if (j.contains("repo_list"))
            out.repo_list_path = resolve_rel(base, j["repo_list"].get<std::string>());
        if (j.contains("corpus_root"))
            out.corpus_root = resolve_rel(base, j["corpus_root"].get<std::string>());
        if (j.contains("output_root"))
            out.output_root = resolve_rel(base, j["output_root"].get<std::string>());
        if (j.contains("allowlist"))
            out.allowlist_path = resolve_rel(base, j["allowlist"].get<std::string>());
        if (j.contains("verdicts"))
            out.verdicts_path = resolve_rel(base, j["verdicts"].get<std::string>());
        if (j.contains("offline")) out.offline = j["offline"].get<bool>();
        if (j.contains("max_files_per_repo"))
            out.max_files_per_repo = j["max_files_per_repo"].get<long long>();
        if (j.contains("array_length_bound"))
            out.array_length_bound = j["array_length_bound"].get<long long>();
        if (j.contains("chosen_primitive_types")) {
            out.chosen_primitives.clear();
            for (const auto& v : j["chosen_primitive_types"]) {
                auto name = v.get<std::string>();
                auto p = prim_from_name(name);
                if (!p) {
                    error = "unknown primitive type in chosen_primitive_types: " + name;
                    return false;
                }
                out.chosen_primitives.insert(*p);
            }
        }
        if (j.contains("criteria")) {
            const auto& c = j["criteria"];
            auto get = [&](const char* key, long long& field) {
                if (c.contains(key)) field = c[key].get<long long>();
            };
            get("minIfStmt", out.criteria.min_if);
            get("minIfOnChosenPrimitive", out.criteria.min_if_on_chosen_primitive);
            get("minLoops", out.criteria.min_loops);
            get("minConnectives", out.criteria.min_connectives);
            get("minTypeExpr", out.criteria.min_type_expressions);
            get("minTypeParams", out.criteria.min_type_parameters);
            get("minMethods", out.criteria.min_methods);
        }
    } catch (const nlohmann::json::exception& e) {
        error = std::string("config field has wrong type: ") + e.what();
        return false;
    }
    if (out.repo_list_path.empty()) {
        error = "config is missing repo_list";
        return false;
    }
    if (out.corpus_root.empty()) {
        error = "config is missing corpus_root";
        return false;
    }
    if (out.output_root.empty()) {
        error = "config is missing output_root";
        return false;
    }
    if (out.array_length_bound < 1) {
        error = "array_length_bound must be >= 1";
        return false;
    }
    return true;
}

namespace {

struct StageCounter {
    StageReport report;

    explicit StageCounter(std::string name) { report.stage = std::move(name); }
    void accept() {
        report.inputs++;
        report.accepted++;
    }
    void reject(const std::string& reason) {
        report.inputs++;
        report.rejected++;
        report.reasons[reason]++;
    }
};

} // namespace

PipelineResult run_pipeline(const PipelineConfig& cfg, RunMode mode, Fetcher* fetcher) {
    PipelineResult result;

    std::string list_text;
    if (!read_file(cfg.repo_list_path, list_text))
        throw std::runtime_error("cannot read repo list: " + cfg.repo_list_path.string());

    Allowlist allowlist = Allowlist::builtin_default();
    if (!cfg.allowlist_path.empty()) {
        std::string allow_text;
        if (!read_file(cfg.allowlist_path, allow_text))
            throw std::runtime_error("cannot read allowlist: " + cfg.allowlist_path.string());
        allowlist = Allowlist::parse(allow_text, &result.diagnostics);
    }
    allowlist.add_verifier_surface();

    VerdictMap verdicts;
    if (!cfg.verdicts_path.empty()) {
        std::string verdict_text;
        if (!read_file(cfg.verdicts_path, verdict_text))
            throw std::runtime_error("cannot read verdicts: " + cfg.verdicts_path.string());
        verdicts = VerdictMap::parse(verdict_text, &result.diagnostics);
    }

    GitFetcher default_fetcher;
    if (!fetcher) fetcher = &default_fetcher;

    // acquire
    StageCounter acquire_stage("acquire");
    std::vector<std::string> list_diags;
    std::vector<RepoSpec> specs = parse_repo_list(list_text, &list_diags);
    for (const auto& d : list_diags) {
        acquire_stage.reject("REPO_LIST_MALFORMED");
        result.diagnostics.push_back(d);
    }
    std::vector<LocalRepo> repos;
    for (const auto& spec : specs) {
        AcquireResult ar = acquire(spec, cfg.corpus_root, cfg.offline, fetcher);
        if (ar.repo) {
            acquire_stage.accept();
            repos.push_back(*ar.repo);
        } else {
            acquire_stage.reject(ar.error_code);
            result.diagnostics.push_back(spec.id() + ": " + ar.message);
        }
    }

    // enumerate, in deterministic (repo id, relative path) order
    std::sort(repos.begin(), repos.end(),
              [](const LocalRepo& a, const LocalRepo& b) { return a.spec.id() < b.spec.id(); });
    StageCounter enumerate_stage("enumerate");
    std::vector<SourceFile> sources;
    for (const auto& repo : repos) {
        std::vector<std::string> enum_diags;
        auto files = enumerate_sources(repo, cfg.max_files_per_repo, &enum_diags);
        for (const auto& d : enum_diags) {
            enumerate_stage.reject("ENCODING_INVALID");
            result.diagnostics.push_back(d);
        }
        for (auto& f : files) {
            enumerate_stage.accept();
            sources.push_back(std::move(f));
        }
    }

    // parse
    StageCounter parse_stage("parse");
    struct ParsedFile {
        SourceFile file;
        Ast unit;
    };
    std::vector<ParsedFile> parsed;
    for (auto& src : sources) {
        try {
            Ast unit = parse_source(src.contents);
            parse_stage.accept();
            parsed.push_back({std::move(src), std::move(unit)});
        } catch (const CompileError& e) {
            parse_stage.reject(e.code());
            result.diagnostics.push_back(src.origin.id() + "/" + src.relative_path + ":" +
                                         to_string(e.span()) + ": " + e.what());
        }
    }

    // filter (skipped in transform-only mode)
    std::vector<ParsedFile> filtered;
    StageCounter filter_stage("filter");
    if (mode == RunMode::TransformOnly) {
        filtered = std::move(parsed);
    } else {
        for (auto& pf : parsed) {
            try {
                TypeTable table = build_type_table(pf.unit, allowlist);
                assign_ids(pf.unit);
                FeatureProfile p = profile(pf.unit, cfg.chosen_primitives, table);
                if (accept(p, cfg.criteria)) {
                    filter_stage.accept();
                    filtered.push_back(std::move(pf));
                } else {
                    filter_stage.reject("FILTER_REJECT");
                }
            } catch (const CompileError& e) {
                filter_stage.reject(e.code());
                result.diagnostics.push_back(pf.file.origin.id() + "/" +
                                             pf.file.relative_path + ": " + e.what());
            }
        }
    }

    auto finish = [&](std::initializer_list<StageReport> reports) {
        result.reports.assign(reports);
        result.manifest = corpus_manifest(result.artifacts);
        std::error_code ec;
        std::filesystem::create_directories(cfg.output_root, ec);
        if (!ec) {
            write_file(cfg.output_root / "report.json",
                       report_to_json(result.reports, result.diagnostics));
            if (mode == RunMode::Full)
                write_file(cfg.output_root / "manifest.json", manifest_to_json(result.manifest));
        }
    };

    if (mode == RunMode::FilterOnly) {
        finish({acquire_stage.report, enumerate_stage.report, parse_stage.report,
                filter_stage.report});
        return result;
    }

    // transform
    StageCounter transform_stage("transform");
    struct TransformedFile {
        TransformOutcome outcome;
        Provenance prov;
    };
    std::vector<TransformedFile> transformed;
    TransformConfig tcfg;
    tcfg.array_length_bound = cfg.array_length_bound;
    for (auto& pf : filtered) {
        Provenance prov;
        prov.repo = pf.file.origin;
        prov.original_path = pf.file.relative_path;
        prov.original_class = pf.unit.cls.name;
        try {
            TransformOutcome out = transform_file(pf.unit, allowlist, prov, tcfg);
            switch (out.status) {
                case TransformStatus::Transformed:
                    transform_stage.accept();
                    transformed.push_back({std::move(out), std::move(prov)});
                    break;
                case TransformStatus::RejectedEmpty:
                    transform_stage.reject("TRANSFORM_EMPTY");
                    break;
                case TransformStatus::RejectedUnresolvable:
                    transform_stage.reject("TRANSFORM_UNRESOLVED");
                    break;
            }
        } catch (const CompileError& e) {
            transform_stage.reject(e.code());
            result.diagnostics.push_back(pf.file.origin.id() + "/" +
                                         pf.file.relative_path + ": " + e.what());
        }
    }

    // package
    StageCounter package_stage("package");
    std::set<std::string> used_slugs;
    std::error_code ec;
    std::filesystem::create_directories(cfg.output_root, ec);
    if (ec)
        throw std::runtime_error("cannot create output root: " + cfg.output_root.string());
    for (auto& tf : transformed) {
        if (mode == RunMode::TransformOnly) {
            std::string stem = std::filesystem::path(tf.prov.original_path).stem().string();
            std::string slug = dedupe_slug(make_slug(tf.prov.repo, stem), used_slugs);
            write_file(cfg.output_root / (slug + ".java"), pretty_print(tf.outcome.unit));
            package_stage.accept();
        } else {
            BenchmarkArtifact art =
                emit_benchmark(tf.outcome, tf.prov, verdicts, cfg.output_root, used_slugs);
            result.artifacts.push_back(std::move(art));
            package_stage.accept();
        }
    }

    finish({acquire_stage.report, enumerate_stage.report, parse_stage.report,
            filter_stage.report, transform_stage.report, package_stage.report});
    if (mode == RunMode::TransformOnly) {
        // the filter stage never ran; drop its empty report
        result.reports.erase(result.reports.begin() + 3);
    }
    return result;
}

std::string report_to_json(const std::vector<StageReport>& reports,
                           const std::vector<std::string>& diagnostics) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json stages = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json s;
        s["stage"] = r.stage;
        s["inputs"] = r.inputs;
        s["accepted"] = r.accepted;
        s["rejected"] = r.rejected;
        nlohmann::ordered_json reasons = nlohmann::ordered_json::object();
        for (const auto& [code, count] : r.reasons) reasons[code] = count;
        s["reasons"] = reasons;
        stages.push_back(s);
    }
    j["stages"] = stages;
    j["diagnostics"] = diagnostics;
    return j.dump(2) + "\n";
}

} // namespace argforge
