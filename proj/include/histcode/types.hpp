#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "histcode/errors.hpp"

namespace histcode {

using Vec = std::vector<double>;

// Upper bound on a plausible method lifetime (100 years), used when
// validating mined or deserialized bundles.
inline constexpr int kMaxLifetimeDays = 36500;

// Identifies one method within a corpus. The tuple (project, file_path,
// qualified_name, signature) is the unique key; a signature change starts a
// new identity, file renames are followed by the miner so file_path is
// always the HEAD path.
struct MethodIdentity {
  std::string project;
  std::string file_path;       // repo-relative, '/'-separated
  std::string qualified_name;  // enclosing class chain + method name, '.'-joined
  std::string signature;       // comma-joined parameter types, no spaces

  auto key() const { return std::tie(project, file_path, qualified_name, signature); }

  bool operator==(const MethodIdentity& o) const { return key() == o.key(); }
  bool operator!=(const MethodIdentity& o) const { return !(*this == o); }
  bool operator<(const MethodIdentity& o) const { return key() < o.key(); }

  std::string display() const {
    return project + ":" + file_path + ":" + qualified_name + "(" + signature + ")";
  }
};

// One kept snapshot of a method. changed_lines counts unified-diff added plus
// deleted lines against the previous (older) kept version; the oldest version
// of a history carries 0 since it has no predecessor.
struct MethodVersion {
  std::string commit_hash;  // 40-hex
  std::int64_t author_time = 0;  // UTC seconds
  std::string source_text;  // full declaration incl. signature
  int changed_lines = 0;
};

// All kept snapshots of one method, newest first. versions[0] is the current
// snapshot at HEAD; adjacent versions always differ in source_text.
struct VersionHistory {
  MethodIdentity identity;
  std::vector<MethodVersion> versions;
  int lifetime_days = 0;  // floor((HEAD commit time - oldest author_time) / 86400)

  const MethodVersion& current() const { return versions.front(); }

  void validate() const {
    if (versions.empty()) {
      throw Error("version history for " + identity.display() + " is empty");
    }
    for (std::size_t i = 1; i < versions.size(); ++i) {
      if (versions[i - 1].author_time <= versions[i].author_time) {
        throw Error("versions of " + identity.display() +
                    " not strictly decreasing in author_time");
      }
      if (versions[i - 1].source_text == versions[i].source_text) {
        throw Error("adjacent versions of " + identity.display() + " have identical text");
      }
    }
    if (lifetime_days < 0) {
      throw Error("negative lifetime_days for " + identity.display());
    }
  }
};

// The longest in-project caller and callee of a method, as raw source text.
// Among multiple candidates the one with the most lexical tokens wins; ties
// go to the lexicographically smallest qualified name.
struct CallHierarchy {
  std::optional<std::string> longest_caller;
  std::optional<std::string> longest_callee;
};

// A method's current code plus its contexts: version history, call
// hierarchy, and the number of days it existed in the repository.
struct ContextBundle {
  VersionHistory history;
  CallHierarchy calls;
  int days = 0;  // == history.lifetime_days

  const MethodIdentity& id() const { return history.identity; }

  void validate() const {
    history.validate();
    if (days != history.lifetime_days) {
      throw Error("days of " + id().display() + " disagrees with lifetime_days");
    }
    if (days < 0 || days > kMaxLifetimeDays) {
      throw Error("days of " + id().display() + " outside [0, 36500]");
    }
  }
};

// Human clone judgments for one pair, split by confidence level.
struct JudgmentCounts {
  double high_yes = 0, med_yes = 0, low_yes = 0;
  double high_no = 0, med_no = 0, low_no = 0;

  double total() const { return high_yes + med_yes + low_yes + high_no + med_no + low_no; }
};

// Per-confidence weights and the decision threshold for turning judgments
// into a binary label. The defaults are the documented stand-in rule.
struct ConfidenceWeights {
  double high = 1.0;
  double medium = 0.66;
  double low = 0.33;
  double threshold = 0.5;
};

// label = 1 iff the weighted share of yes-judgments exceeds the threshold.
inline int derive_label(const JudgmentCounts& j, const ConfidenceWeights& w = {}) {
  const double yes = w.high * j.high_yes + w.medium * j.med_yes + w.low * j.low_yes;
  const double all = yes + w.high * j.high_no + w.medium * j.med_no + w.low * j.low_no;
  if (all <= 0.0) {
    throw Error("pair has no judgments");
  }
  return yes / all > w.threshold ? 1 : 0;
}

struct LabeledPair {
  MethodIdentity a;
  MethodIdentity b;
  JudgmentCounts judgments;
  int label = 0;  // derived from judgments via ConfidenceWeights
};

// One row of the corpus statistics table; "total" aggregates all projects.
struct ProjectStats {
  std::string project;
  int method_count = 0;
  long version_count = 0;
  double avg_versions_per_method = 0.0;
  // Mean added+deleted lines over versions that have a predecessor; absent
  // (rendered "-") when every method has a single version.
  std::optional<double> avg_changed_lines_per_version;
  int min_days = 0;
  int max_days = 0;
  double avg_days = 0.0;
};

struct CorpusStats {
  std::vector<ProjectStats> projects;  // sorted by project name
  ProjectStats total;
};

}  // namespace histcode
