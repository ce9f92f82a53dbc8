#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "histcode/errors.hpp"
#include "histcode/process.hpp"

namespace histcode {

// Thin wrapper over the `git` binary for read-only repository queries.
class GitRepo {
 public:
  explicit GitRepo(std::filesystem::path root) : root_(std::move(root)) {
    if (!std::filesystem::is_directory(root_)) {
      throw RepositoryUnreadable("not a directory: " + root_.string());
    }
    const ProcessResult probe =
        run_process({"git", "-C", root_.string(), "rev-parse", "--git-dir"});
    if (probe.exit_code != 0) {
      throw RepositoryUnreadable("not a git repository: " + root_.string());
    }
    const ProcessResult head =
        run_process({"git", "-C", root_.string(), "rev-parse", "HEAD"});
    if (head.exit_code != 0) {
      throw RepositoryUnreadable("repository has no HEAD commit: " + root_.string());
    }
  }

  const std::filesystem::path& root() const { return root_; }

  std::string run(std::vector<std::string> args) const {
    std::vector<std::string> argv = {"git", "-C", root_.string()};
    argv.insert(argv.end(), std::make_move_iterator(args.begin()),
                std::make_move_iterator(args.end()));
    ProcessResult r = run_process(argv);
    if (r.exit_code != 0) {
      throw RepositoryUnreadable("git failed in " + root_.string() + ": " + r.err);
    }
    return std::move(r.out);
  }

  std::int64_t head_author_time() const {
    const std::string out = run({"log", "-1", "--format=%at", "HEAD"});
    return std::stoll(out);
  }

  std::vector<std::string> head_java_files() const {
    std::vector<std::string> files;
    const std::string out = run({"ls-tree", "-r", "--name-only", "HEAD"});
    std::size_t start = 0;
    while (start < out.size()) {
      auto nl = out.find('\n', start);
      if (nl == std::string::npos) nl = out.size();
      const std::string_view line(out.data() + start, nl - start);
      if (line.size() > 5 && line.substr(line.size() - 5) == ".java") {
        files.emplace_back(line);
      }
      start = nl + 1;
    }
    std::sort(files.begin(), files.end());
    return files;
  }

  std::string file_at(const std::string& commit, const std::string& path) const {
    return run({"show", commit + ":" + path});
  }

  bool file_exists_at(const std::string& commit, const std::string& path) const {
    const ProcessResult r = run_process(
        {"git", "-C", root_.string(), "cat-file", "-e", commit + ":" + path});
    return r.exit_code == 0;
  }

  // One commit that touched a tracked file, with the file's path at that
  // commit (renames followed).
  struct FileCommit {
    std::string hash;
    std::int64_t author_time = 0;
    std::string path;
  };

  // All commits that changed `head_path`, oldest first, with per-commit
  // paths resolved through rename records. Uses `git log --follow`.
  std::vector<FileCommit> file_history(const std::string& head_path) const {
    const std::string out = run({"log", "--follow", "--format=%x01%H%x02%at",
                                 "--name-status", "--", head_path});

    struct RawEntry {
      std::string hash;
      std::int64_t time = 0;
      std::string shown_path;  // path at this commit, per name-status
      std::string renamed_from;
    };
    std::vector<RawEntry> entries;

    std::size_t start = 0;
    while (start < out.size()) {
      auto nl = out.find('\n', start);
      if (nl == std::string::npos) nl = out.size();
      const std::string_view line(out.data() + start, nl - start);
      start = nl + 1;
      if (line.empty()) continue;
      if (line.front() == '\x01') {
        const auto sep = line.find('\x02');
        RawEntry e;
        e.hash = std::string(line.substr(1, sep - 1));
        e.time = std::stoll(std::string(line.substr(sep + 1)));
        entries.push_back(std::move(e));
        continue;
      }
      if (entries.empty()) continue;
      // Name-status line: "M\tpath" or "R100\told\tnew".
      std::vector<std::string_view> fields;
      std::size_t fs = 0;
      while (fs <= line.size()) {
        auto tab = line.find('\t', fs);
        if (tab == std::string_view::npos) tab = line.size();
        fields.push_back(line.substr(fs, tab - fs));
        fs = tab + 1;
      }
      if (fields.size() >= 3 && !fields[0].empty() && fields[0][0] == 'R') {
        entries.back().renamed_from = std::string(fields[1]);
        entries.back().shown_path = std::string(fields[2]);
      } else if (fields.size() >= 2) {
        entries.back().shown_path = std::string(fields[1]);
      }
    }

    // Entries arrive newest first; walk them assigning the tracked path.
    std::vector<FileCommit> commits;
    std::string current = head_path;
    for (const RawEntry& e : entries) {
      const std::string at = e.shown_path.empty() ? current : e.shown_path;
      commits.push_back(FileCommit{e.hash, e.time, at});
      current = e.renamed_from.empty() ? at : e.renamed_from;
    }
    std::reverse(commits.begin(), commits.end());
    return commits;
  }

 private:
  std::filesystem::path root_;
};

}  // namespace histcode
