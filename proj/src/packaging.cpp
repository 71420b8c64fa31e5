#include "argforge/packaging.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "argforge/loc.hpp"
#include "argforge/printer.hpp"

namespace argforge {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> cols;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cols.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cols.push_back(cur);
    for (auto& col : cols) {
        size_t b = col.find_first_not_of(" \t\r");
        size_t e = col.find_last_not_of(" \t\r");
        col = b == std::string::npos ? "" : col.substr(b, e - b + 1);
    }
    return cols;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

} // namespace

VerdictMap VerdictMap::parse(std::string_view csv_text, std::vector<std::string>* diags) {
    VerdictMap map;
    std::istringstream in{std::string(csv_text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto cols = split_csv_row(line);
        if (cols.size() != 3) {
            if (diags)
                diags->push_back("verdicts line " + std::to_string(lineno) +
                                 ": expected slug,property,verdict");
            continue;
        }
        if (cols[1] != kReachSafety && cols[1] != kExceptionProperty) {
            if (diags)
                diags->push_back("verdicts line " + std::to_string(lineno) +
                                 ": unknown property '" + cols[1] + "'");
            continue;
        }
        if (cols[2] != "true" && cols[2] != "false") {
            if (diags)
                diags->push_back("verdicts line " + std::to_string(lineno) +
                                 ": verdict must be true or false");
            continue;
        }
        map.entries[cols[0]][cols[1]] = cols[2] == "true";
    }
    return map;
}

std::optional<bool> VerdictMap::lookup(const std::string& slug,
                                       const std::string& property) const {
    auto it = entries.find(slug);
    if (it == entries.end()) return std::nullopt;
    auto jt = it->second.find(property);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
}

std::string make_slug(const RepoSpec& repo, const std::string& file_stem) {
    std::string raw = repo.owner + "-" + repo.name + "-" + file_stem;
    std::string slug;
    for (char c : raw) {
        char lc = (char)std::tolower((unsigned char)c);
        if ((lc >= 'a' && lc <= 'z') || (lc >= '0' && lc <= '9')) {
            slug += lc;
        } else if (!slug.empty() && slug.back() != '-') {
            slug += '-';
        }
    }
    while (!slug.empty() && slug.back() == '-') slug.pop_back();
    if (slug.empty()) slug = "benchmark";
    return slug;
}

std::string dedupe_slug(const std::string& base, std::set<std::string>& used) {
    std::string slug = base;
    for (int n = 2; used.count(slug); n++)
        slug = base + "-" + std::to_string(n);
    used.insert(slug);
    return slug;
}

std::string property_file_for(const std::string& property) {
    if (property == kReachSafety) return "../properties/assert.prp";
    if (property == kExceptionProperty) return "../properties/runtime-exception.prp";
    throw std::runtime_error("unknown property: " + property);
}

std::string emit_task_definition(const std::string& ext,
                                 const std::vector<PropertyRef>& properties,
                                 const Provenance& prov) {
    std::string revision = prov.repo.revision.empty() ? "unknown" : prov.repo.revision;
    std::ostringstream out;
    out << "format_version: \"1.0\"\n";
    out << "input_files: 'Main." << ext << "'\n";
    out << "properties:\n";
    for (const auto& p : properties) {
        out << "  - property_file: " << property_file_for(p.name) << "\n";
        if (p.expected != Verdict::Unspecified)
            out << "    expected_verdict: "
                << (p.expected == Verdict::True ? "true" : "false") << "\n";
    }
    out << "origin: " << prov.repo.owner << "/" << prov.repo.name << "@" << revision
        << " " << prov.original_path << "\n";
    return out.str();
}

std::string verifier_stub_source() {
    return "public class Verifier {\n"
           "\n"
           "    public static boolean nondetBoolean() {\n"
           "        return false;\n"
           "    }\n"
           "\n"
           "    public static byte nondetByte() {\n"
           "        return 0;\n"
           "    }\n"
           "\n"
           "    public static short nondetShort() {\n"
           "        return 0;\n"
           "    }\n"
           "\n"
           "    public static char nondetChar() {\n"
           "        return (char) 0;\n"
           "    }\n"
           "\n"
           "    public static int nondetInt() {\n"
           "        return 0;\n"
           "    }\n"
           "\n"
           "    public static long nondetLong() {\n"
           "        return 0L;\n"
           "    }\n"
           "\n"
           "    public static float nondetFloat() {\n"
           "        return 0.0f;\n"
           "    }\n"
           "\n"
           "    public static double nondetDouble() {\n"
           "        return 0.0;\n"
           "    }\n"
           "}\n";
}

BenchmarkArtifact emit_benchmark(const TransformOutcome& outcome, const Provenance& prov,
                                 const VerdictMap& verdicts,
                                 const std::filesystem::path& out_root,
                                 std::set<std::string>& used_slugs) {
    std::string stem = std::filesystem::path(prov.original_path).stem().string();
    std::string slug = dedupe_slug(make_slug(prov.repo, stem), used_slugs);

    BenchmarkArtifact art;
    art.slug = slug;
    art.source_text = pretty_print(outcome.unit);
    art.loc = loc_count(art.source_text);
    for (const char* prop : {kReachSafety, kExceptionProperty}) {
        PropertyRef ref;
        ref.name = prop;
        if (auto v = verdicts.lookup(slug, prop))
            ref.expected = *v ? Verdict::True : Verdict::False;
        art.properties.push_back(ref);
    }
    art.task_definition = emit_task_definition("java", art.properties, prov);

    std::filesystem::path dir = out_root / slug;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    write_file(dir / "Main.java", art.source_text);
    write_file(dir / (slug + ".yml"), art.task_definition);
    write_file(dir / "Verifier.java", verifier_stub_source());
    return art;
}

CorpusManifest corpus_manifest(const std::vector<BenchmarkArtifact>& artifacts) {
    CorpusManifest m;
    for (const auto& art : artifacts) {
        m.benchmark_count++;
        m.total_loc += art.loc;
        for (const auto& p : art.properties) {
            auto& s = m.per_property[p.name];
            s.benchmarks++;
            m.total_property_runs++;
            switch (p.expected) {
                case Verdict::True: s.expected_true++; break;
                case Verdict::False: s.expected_false++; break;
                case Verdict::Unspecified: s.unspecified++; break;
            }
        }
    }
    return m;
}

std::string CorpusManifest::average_loc() const {
    if (benchmark_count == 0) return "0.0";
    // round(10 * total/count) half-up, then place the decimal point
    long long tenths = (20 * total_loc + benchmark_count) / (2 * benchmark_count);
    return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

std::string manifest_to_json(const CorpusManifest& m) {
    nlohmann::ordered_json j;
    j["benchmark_count"] = m.benchmark_count;
    j["total_property_runs"] = m.total_property_runs;
    j["average_loc"] = m.average_loc();
    nlohmann::ordered_json props = nlohmann::ordered_json::object();
    for (const auto& [name, s] : m.per_property) {
        props[name] = {
            {"benchmarks", s.benchmarks},
            {"expected_true", s.expected_true},
            {"expected_false", s.expected_false},
            {"unspecified", s.unspecified},
        };
    }
    j["properties"] = props;
    return j.dump(2) + "\n";
}

} // namespace argforge
