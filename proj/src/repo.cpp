#include "argforge/repo.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace argforge {

namespace fs = std::filesystem;

namespace {

std::string trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

bool valid_component(const std::string& s) {
    if (s.empty()) return false;
    return s.find('/') == std::string::npos && s.find('\\') == std::string::npos;
}

} // namespace

std::vector<RepoSpec> parse_repo_list(std::string_view csv_text,
                                      std::vector<std::string>* diags) {
    std::vector<RepoSpec> out;
    int line_no = 0;
    std::istringstream in{std::string(csv_text)};
    std::string raw;
    while (std::getline(in, raw)) {
        line_no++;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        auto bad = [&](const std::string& why) {
            if (diags)
                diags->push_back("repo list line " + std::to_string(line_no) + ": " + why);
        };

        std::vector<std::string> cols;
        size_t start = 0;
        while (true) {
            size_t comma = line.find(',', start);
            cols.push_back(trim(line.substr(start, comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (cols.size() > 2) {
            bad("expected owner/name[,revision], got " + std::to_string(cols.size()) +
                " columns");
            continue;
        }
        size_t slash = cols[0].find('/');
        if (slash == std::string::npos) {
            bad("missing '/' in repository identifier");
            continue;
        }
        RepoSpec spec;
        spec.owner = cols[0].substr(0, slash);
        spec.name = cols[0].substr(slash + 1);
        if (cols.size() == 2) spec.revision = cols[1];
        if (!valid_component(spec.owner) || !valid_component(spec.name)) {
            bad("owner and name must be non-empty and contain no path separators");
            continue;
        }
        out.push_back(std::move(spec));
    }
    return out;
}

bool GitFetcher::fetch(const RepoSpec& spec, const fs::path& dest, std::string* error) {
    std::error_code ec;
    fs::create_directories(dest.parent_path(), ec);
    std::string url = "https://github.com/" + spec.owner + "/" + spec.name + ".git";
    std::string cmd = "git clone --quiet " + std::string(spec.revision.empty() ? "--depth 1 " : "") +
                      "'" + url + "' '" + dest.string() + "' >/dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) {
        if (error) *error = "git clone failed for " + url;
        fs::remove_all(dest, ec);
        return false;
    }
    if (!spec.revision.empty()) {
        std::string co = "git -C '" + dest.string() + "' checkout --quiet '" +
                         spec.revision + "' >/dev/null 2>&1";
        if (std::system(co.c_str()) != 0) {
            if (error) *error = "git checkout failed for revision " + spec.revision;
            fs::remove_all(dest, ec);
            return false;
        }
    }
    return true;
}

AcquireResult acquire(const RepoSpec& spec, const fs::path& corpus_root, bool offline,
                      Fetcher* fetcher) {
    fs::path mirror = corpus_root / spec.owner / spec.name;
    std::error_code ec;
    if (fs::is_directory(mirror, ec))
        return {LocalRepo{spec, mirror}, "", ""};
    if (offline)
        return {std::nullopt, "ACQUIRE_MISSING",
                "no mirror at " + mirror.string() + " in offline mode"};
    if (!fetcher) {
        static GitFetcher default_fetcher;
        fetcher = &default_fetcher;
    }
    std::string err;
    if (!fetcher->fetch(spec, mirror, &err))
        return {std::nullopt, "ACQUIRE_FAIL", err};
    return {LocalRepo{spec, mirror}, "", ""};
}

bool is_valid_utf8_text(std::string_view data) {
    size_t i = 0;
    while (i < data.size()) {
        unsigned char c = data[i];
        if (c == 0) return false;
        size_t extra;
        if (c < 0x80) extra = 0;
        else if ((c & 0xE0) == 0xC0) extra = 1;
        else if ((c & 0xF0) == 0xE0) extra = 2;
        else if ((c & 0xF8) == 0xF0) extra = 3;
        else return false;
        if (i + extra >= data.size() && extra > 0) return false;
        for (size_t j = 1; j <= extra; j++)
            if ((static_cast<unsigned char>(data[i + j]) & 0xC0) != 0x80) return false;
        i += extra + 1;
    }
    return true;
}

std::vector<SourceFile> enumerate_sources(const LocalRepo& repo, long long max_files,
                                          std::vector<std::string>* diags) {
    std::vector<fs::path> candidates;
    std::error_code ec;
    for (auto it = fs::recursive_directory_iterator(repo.root, ec);
         it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) break;
        if (!it->is_regular_file(ec)) continue;
        if (it->path().extension() == ".java") candidates.push_back(it->path());
    }

    std::vector<std::pair<std::string, fs::path>> rel;
    for (auto& p : candidates)
        rel.emplace_back(fs::relative(p, repo.root).generic_string(), p);
    std::sort(rel.begin(), rel.end());

    std::vector<SourceFile> out;
    for (auto& [relpath, full] : rel) {
        if (max_files > 0 && (long long)out.size() >= max_files) break;
        std::ifstream in(full, std::ios::binary);
        if (!in) {
            if (diags) diags->push_back(relpath + ": unreadable, skipped");
            continue;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        std::string contents = buf.str();
        if (!is_valid_utf8_text(contents)) {
            if (diags) diags->push_back(relpath + ": not valid UTF-8 text, skipped");
            continue;
        }
        SourceFile sf;
        sf.origin = repo.spec;
        sf.relative_path = relpath;
        sf.contents = std::move(contents);
        int newlines = (int)std::count(sf.contents.begin(), sf.contents.end(), '\n');
        sf.line_count = newlines;
        if (!sf.contents.empty() && sf.contents.back() != '\n') sf.line_count++;
        out.push_back(std::move(sf));
    }
    return out;
}

} // namespace argforge
