#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace argforge {

struct RepoSpec {
    std::string owner;
    std::string name;
    std::string revision;   // empty = default branch

    std::string id() const { return owner + "/" + name; }
    bool operator==(const RepoSpec&) const = default;
};

struct LocalRepo {
    RepoSpec spec;
    std::filesystem::path root;
};

struct SourceFile {
    RepoSpec origin;
    std::string relative_path;   // '/'-separated, relative to repo root
    std::string contents;
    int line_count = 0;
};

/// CSV schema: `owner/name[,revision]`, one per line; `#`-prefixed comment
/// lines and blank lines skipped. Malformed lines are skipped and reported
/// through `diags`.
std::vector<RepoSpec> parse_repo_list(std::string_view csv_text,
                                      std::vector<std::string>* diags = nullptr);

/// Network access lives behind this interface; tests substitute a counting
/// fake, the CLI uses GitFetcher.
class Fetcher {
public:
    virtual ~Fetcher() = default;
    virtual bool fetch(const RepoSpec& spec, const std::filesystem::path& dest,
                       std::string* error) = 0;
};

/// Shells out to `git clone` (and `git checkout` when a revision is pinned).
class GitFetcher : public Fetcher {
public:
    bool fetch(const RepoSpec& spec, const std::filesystem::path& dest,
               std::string* error) override;
};

struct AcquireResult {
    std::optional<LocalRepo> repo;
    std::string error_code;   // ACQUIRE_MISSING or ACQUIRE_FAIL when !repo
    std::string message;
};

/// Mirror layout is `corpus_root/<owner>/<name>/`. An existing mirror is
/// returned as-is (no refetch); offline mode never touches the fetcher.
AcquireResult acquire(const RepoSpec& spec, const std::filesystem::path& corpus_root,
                      bool offline, Fetcher* fetcher = nullptr);

/// All `.java` files under the repo root, lexicographically sorted by
/// relative path, truncated to max_files when non-zero. Files that are not
/// valid UTF-8 text are skipped with a diagnostic.
std::vector<SourceFile> enumerate_sources(const LocalRepo& repo, long long max_files,
                                          std::vector<std::string>* diags = nullptr);

bool is_valid_utf8_text(std::string_view data);

} // namespace argforge
