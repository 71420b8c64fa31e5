#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "argforge/pipeline.hpp"

using namespace argforge;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fixture(const char* rel) { return fs::path(FIXTURE_DIR) / rel; }

fs::path fresh_dir(const char* name) {
    fs::path p = fs::temp_directory_path() / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

PipelineConfig corpus_cfg(const fs::path& out_root) {
    PipelineConfig cfg;
    cfg.repo_list_path = fixture("config/repos.csv");
    cfg.corpus_root = fixture("corpus");
    cfg.output_root = out_root;
    cfg.allowlist_path = fixture("config/allowlist.txt");
    cfg.verdicts_path = fixture("config/verdicts.csv");
    cfg.offline = true;
    cfg.chosen_primitives = {Prim::Int, Prim::Double};
    cfg.criteria.min_if = 1;
    cfg.criteria.min_if_on_chosen_primitive = 1;
    cfg.criteria.min_methods = 1;
    return cfg;
}

// relative path -> bytes for every regular file under root
std::map<std::string, std::string> snapshot(const fs::path& root) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(root))
        if (e.is_regular_file())
            out[fs::relative(e.path(), root).generic_string()] = slurp(e.path());
    return out;
}

const StageReport& stage(const PipelineResult& r, const std::string& name) {
    for (const auto& s : r.reports)
        if (s.stage == name) return s;
    REQUIRE_MESSAGE(false, "missing stage " << name);
    static StageReport dummy;
    return dummy;
}

} // namespace

TEST_CASE("load_config resolves paths and criteria") {
    fs::path dir = fresh_dir("argforge_cfg_test");
    spit(dir / "cfg.json",
         "{\n"
         "  \"repo_list\": \"repos.csv\",\n"
         "  \"corpus_root\": \"corpus\",\n"
         "  \"output_root\": \"/tmp/abs-out\",\n"
         "  \"offline\": true,\n"
         "  \"max_files_per_repo\": 7,\n"
         "  \"array_length_bound\": 4,\n"
         "  \"chosen_primitive_types\": [\"int\", \"double\"],\n"
         "  \"criteria\": {\"minIfStmt\": 2, \"minLoops\": 1}\n"
         "}\n");
    PipelineConfig cfg;
    std::string err;
    REQUIRE_MESSAGE(load_config(dir / "cfg.json", cfg, err), err);
    CHECK(cfg.repo_list_path == dir / "repos.csv");
    CHECK(cfg.corpus_root == dir / "corpus");
    CHECK(cfg.output_root == fs::path("/tmp/abs-out"));
    CHECK(cfg.offline);
    CHECK(cfg.max_files_per_repo == 7);
    CHECK(cfg.array_length_bound == 4);
    CHECK(cfg.chosen_primitives == std::set<Prim>{Prim::Int, Prim::Double});
    CHECK(cfg.criteria.min_if == 2);
    CHECK(cfg.criteria.min_loops == 1);
    CHECK(cfg.criteria.min_methods == 0);
    fs::remove_all(dir);
}

TEST_CASE("load_config rejects bad inputs") {
    fs::path dir = fresh_dir("argforge_cfg_bad");
    PipelineConfig cfg;
    std::string err;

    CHECK(!load_config(dir / "missing.json", cfg, err));
    CHECK(err.find("cannot read") != std::string::npos);

    spit(dir / "notjson.json", "not json {");
    CHECK(!load_config(dir / "notjson.json", cfg, err));

    spit(dir / "nolist.json", "{\"corpus_root\": \"c\", \"output_root\": \"o\"}");
    CHECK(!load_config(dir / "nolist.json", cfg, err));
    CHECK(err.find("repo_list") != std::string::npos);

    spit(dir / "badprim.json",
         "{\"repo_list\": \"r\", \"corpus_root\": \"c\", \"output_root\": \"o\","
         " \"chosen_primitive_types\": [\"quux\"]}");
    cfg = {};
    CHECK(!load_config(dir / "badprim.json", cfg, err));
    CHECK(err.find("quux") != std::string::npos);

    spit(dir / "badbound.json",
         "{\"repo_list\": \"r\", \"corpus_root\": \"c\", \"output_root\": \"o\","
         " \"array_length_bound\": 0}");
    cfg = {};
    CHECK(!load_config(dir / "badbound.json", cfg, err));
    CHECK(err.find("array_length_bound") != std::string::npos);

    spit(dir / "badtype.json",
         "{\"repo_list\": \"r\", \"corpus_root\": \"c\", \"output_root\": \"o\","
         " \"offline\": \"yes\"}");
    cfg = {};
    CHECK(!load_config(dir / "badtype.json", cfg, err));
    fs::remove_all(dir);
}

TEST_CASE("the fixture config file loads") {
    PipelineConfig cfg;
    std::string err;
    REQUIRE_MESSAGE(load_config(fixture("config/pipeline.json"), cfg, err), err);
    CHECK(cfg.offline);
    CHECK(cfg.criteria.min_if == 1);
    CHECK(cfg.chosen_primitives.count(Prim::Double) == 1);
}

TEST_CASE("full offline run over the fixture corpus") {
    fs::path out = fresh_dir("argforge_run_full");
    PipelineResult r = run_pipeline(corpus_cfg(out), RunMode::Full);

    REQUIRE(r.reports.size() == 6);
    const StageReport& acq = stage(r, "acquire");
    CHECK(acq.inputs == 2);
    CHECK(acq.accepted == 2);

    const StageReport& en = stage(r, "enumerate");
    CHECK(en.inputs == 10);
    CHECK(en.accepted == 9);
    CHECK(en.reasons.at("ENCODING_INVALID") == 1);

    const StageReport& pa = stage(r, "parse");
    CHECK(pa.inputs == 9);
    CHECK(pa.accepted == 8);
    CHECK(pa.reasons.at("PARSE_FAIL") == 1);

    const StageReport& fi = stage(r, "filter");
    CHECK(fi.inputs == 8);
    CHECK(fi.accepted == 5);
    CHECK(fi.reasons.at("FILTER_REJECT") == 2);
    CHECK(fi.reasons.at("RESOLVE_FAIL") == 1);

    const StageReport& tr = stage(r, "transform");
    CHECK(tr.inputs == 5);
    CHECK(tr.accepted == 4);
    CHECK(tr.reasons.at("TRANSFORM_EMPTY") == 1);

    const StageReport& pk = stage(r, "package");
    CHECK(pk.inputs == 4);
    CHECK(pk.accepted == 4);

    REQUIRE(r.artifacts.size() == 4);
    std::vector<std::string> slugs;
    for (const auto& a : r.artifacts) slugs.push_back(a.slug);
    std::sort(slugs.begin(), slugs.end());
    CHECK(slugs == std::vector<std::string>{"acme-widgets-mixed", "acme-widgets-widget",
                                            "zeta-mathkit-arrayuser", "zeta-mathkit-calc"});

    for (const auto& slug : slugs) {
        CHECK(fs::exists(out / slug / "Main.java"));
        CHECK(fs::exists(out / slug / (slug + ".yml")));
        CHECK(fs::exists(out / slug / "Verifier.java"));
    }
    CHECK(fs::exists(out / "report.json"));
    CHECK(fs::exists(out / "manifest.json"));
    CHECK(slurp(out / "report.json").find("\"stages\"") != std::string::npos);

    // verdicts from the csv land in the task definitions
    std::string widget_yml = slurp(out / "acme-widgets-widget" / "acme-widgets-widget.yml");
    CHECK(widget_yml.find("assert.prp\n    expected_verdict: true") != std::string::npos);
    CHECK(widget_yml.find("runtime-exception.prp\n    expected_verdict: false") !=
          std::string::npos);
    std::string calc_yml = slurp(out / "zeta-mathkit-calc" / "zeta-mathkit-calc.yml");
    CHECK(calc_yml.find("assert.prp\n    expected_verdict: false") != std::string::npos);
    // no verdict registered for the exception property
    CHECK(calc_yml.find("runtime-exception.prp\norigin:") != std::string::npos);

    CHECK(r.manifest.benchmark_count == 4);
    CHECK(r.manifest.total_property_runs == 8);
    fs::remove_all(out);
}

TEST_CASE("two offline runs are byte-identical") {
    fs::path out1 = fresh_dir("argforge_run_det1");
    fs::path out2 = fresh_dir("argforge_run_det2");
    PipelineResult r1 = run_pipeline(corpus_cfg(out1), RunMode::Full);
    PipelineResult r2 = run_pipeline(corpus_cfg(out2), RunMode::Full);
    CHECK(r1.reports == r2.reports);
    CHECK(snapshot(out1) == snapshot(out2));
    fs::remove_all(out1);
    fs::remove_all(out2);
}

TEST_CASE("filter-only stops after the filter stage") {
    fs::path out = fresh_dir("argforge_run_filter");
    PipelineResult r = run_pipeline(corpus_cfg(out), RunMode::FilterOnly);
    REQUIRE(r.reports.size() == 4);
    CHECK(r.reports.back().stage == "filter");
    CHECK(r.reports.back().accepted == 5);
    CHECK(r.artifacts.empty());
    CHECK(fs::exists(out / "report.json"));
    CHECK(!fs::exists(out / "manifest.json"));
    // no benchmark directories
    long long dirs = 0;
    for (const auto& e : fs::directory_iterator(out))
        if (e.is_directory()) dirs++;
    CHECK(dirs == 0);
    fs::remove_all(out);
}

TEST_CASE("transform-only skips the filter and writes plain sources") {
    fs::path out = fresh_dir("argforge_run_transform");
    PipelineResult r = run_pipeline(corpus_cfg(out), RunMode::TransformOnly);
    REQUIRE(r.reports.size() == 5);
    for (const auto& s : r.reports) CHECK(s.stage != "filter");
    const StageReport& tr = stage(r, "transform");
    CHECK(tr.inputs == 8);   // every parsed file, no feature gate
    CHECK(fs::exists(out / "acme-widgets-widget.java"));
    CHECK(fs::exists(out / "zeta-mathkit-calc.java"));
    CHECK(!fs::exists(out / "manifest.json"));
    CHECK(fs::exists(out / "report.json"));
    std::string src = slurp(out / "acme-widgets-widget.java");
    CHECK(src.find("class Main") != std::string::npos);
    fs::remove_all(out);
}

TEST_CASE("empty repo list gives empty reports") {
    fs::path dir = fresh_dir("argforge_run_empty");
    spit(dir / "repos.csv", "# nothing here\n");
    PipelineConfig cfg = corpus_cfg(dir / "out");
    cfg.repo_list_path = dir / "repos.csv";
    PipelineResult r = run_pipeline(cfg, RunMode::Full);
    REQUIRE(r.reports.size() == 6);
    for (const auto& s : r.reports) {
        CHECK(s.inputs == 0);
        CHECK(s.rejected == 0);
    }
    CHECK(r.artifacts.empty());
    CHECK(r.manifest.benchmark_count == 0);
    fs::remove_all(dir);
}

TEST_CASE("missing repo in offline mode is ACQUIRE_MISSING") {
    fs::path dir = fresh_dir("argforge_run_missing");
    spit(dir / "repos.csv", "acme/widgets\nnobody/nowhere\nbad line here,x,y\n");
    PipelineConfig cfg = corpus_cfg(dir / "out");
    cfg.repo_list_path = dir / "repos.csv";
    PipelineResult r = run_pipeline(cfg, RunMode::FilterOnly);
    const StageReport& acq = stage(r, "acquire");
    CHECK(acq.accepted == 1);
    CHECK(acq.reasons.at("ACQUIRE_MISSING") == 1);
    CHECK(acq.reasons.at("REPO_LIST_MALFORMED") == 1);
    fs::remove_all(dir);
}

TEST_CASE("unreadable repo list throws") {
    PipelineConfig cfg = corpus_cfg(fs::temp_directory_path() / "argforge_never");
    cfg.repo_list_path = "/nonexistent/repos.csv";
    CHECK_THROWS_AS(run_pipeline(cfg, RunMode::FilterOnly), std::runtime_error);
}

TEST_CASE("max_files_per_repo truncates enumeration") {
    fs::path out = fresh_dir("argforge_run_max");
    PipelineConfig cfg = corpus_cfg(out);
    cfg.max_files_per_repo = 2;
    PipelineResult r = run_pipeline(cfg, RunMode::FilterOnly);
    const StageReport& en = stage(r, "enumerate");
    CHECK(en.accepted == 4);   // two per repo
    fs::remove_all(out);
}
