#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "argforge/transform.hpp"

namespace argforge {

inline constexpr const char* kReachSafety = "ReachSafety";
inline constexpr const char* kExceptionProperty = "ExceptionProperty";

enum class Verdict { True, False, Unspecified };

struct PropertyRef {
    std::string name;   // ReachSafety | ExceptionProperty
    Verdict expected = Verdict::Unspecified;
};

struct BenchmarkArtifact {
    std::string slug;
    std::string source_text;       // contents of Main.java
    std::string task_definition;   // contents of <slug>.yml
    std::vector<PropertyRef> properties;
    int loc = 0;
};

/// Optional user-supplied expected verdicts, CSV rows `slug,property,verdict`.
/// Missing entries leave the verdict unspecified.
struct VerdictMap {
    std::map<std::string, std::map<std::string, bool>> entries;

    static VerdictMap parse(std::string_view csv_text,
                            std::vector<std::string>* diags = nullptr);
    std::optional<bool> lookup(const std::string& slug,
                               const std::string& property) const;
};

/// `<owner>-<name>-<stem>`, lowercased, characters outside [a-z0-9] mapped
/// to '-', runs collapsed. Uniqueness is the caller's job (dedupe_slug).
std::string make_slug(const RepoSpec& repo, const std::string& file_stem);

/// Returns `base` if unused, otherwise `base-2`, `base-3`, ... Inserts the
/// result into `used`.
std::string dedupe_slug(const std::string& base, std::set<std::string>& used);

/// ../properties/assert.prp for ReachSafety, ../properties/runtime-exception.prp
/// for ExceptionProperty.
std::string property_file_for(const std::string& property);

std::string emit_task_definition(const std::string& ext,
                                 const std::vector<PropertyRef>& properties,
                                 const Provenance& prov);

/// Deterministic Verifier stub shipped alongside every benchmark.
std::string verifier_stub_source();

/// Writes `<out_root>/<slug>/{Main.java, <slug>.yml, Verifier.java}`. The slug
/// is derived from provenance and deduplicated against `used_slugs`. Both
/// properties are always listed; verdicts come from `verdicts` when present.
/// Throws std::runtime_error on I/O failure.
BenchmarkArtifact emit_benchmark(const TransformOutcome& outcome, const Provenance& prov,
                                 const VerdictMap& verdicts,
                                 const std::filesystem::path& out_root,
                                 std::set<std::string>& used_slugs);

struct PropertyStats {
    long long benchmarks = 0;
    long long expected_true = 0;
    long long expected_false = 0;
    long long unspecified = 0;
};

struct CorpusManifest {
    std::map<std::string, PropertyStats> per_property;
    long long benchmark_count = 0;
    long long total_property_runs = 0;
    long long total_loc = 0;

    /// Mean LOC over benchmarks, rounded half-up to one decimal ("0.0" when
    /// the corpus is empty).
    std::string average_loc() const;
};

CorpusManifest corpus_manifest(const std::vector<BenchmarkArtifact>& artifacts);

/// Stable-key JSON rendering of the manifest (written as manifest.json).
std::string manifest_to_json(const CorpusManifest& m);

} // namespace argforge
