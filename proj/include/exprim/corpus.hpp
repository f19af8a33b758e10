#pragma once

// The bundled corpus: permutation sources, matrix groups for every affine
// extremely primitive family member of dimension at most 11, negative
// controls, and class data; plus the acceptance checks that run over it.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exprim/action.hpp"
#include "exprim/builders.hpp"
#include "exprim/io.hpp"

namespace exprim::corpus {

struct PermSource {
  std::string file;  // "m12.perm"
  std::function<io::PermutationGroup()> build;
};

const std::vector<PermSource>& permutation_sources();

struct GroupSource {
  std::string file;   // "a7_d4.g2m"
  std::string label;  // "(4, Alt_7)"
  /// "ii(a)" .. "ii(d)", "even-degree" or "negative".
  std::string part;
  /// Expected EP verdict; nullopt for entries recorded without a claim.
  std::optional<bool> expected_ep;
  bool listed_positive = false;  // one of the explicitly listed positives
  bool listed_negative = false;
  std::function<groups::MatrixGroup()> build;
};

const std::vector<GroupSource>& group_sources();
const GroupSource& group_source(std::string_view file);

/// Loads the bundled file, or builds the group when no file was bundled
/// (which rethrows the builder's error for entries that cannot exist).
groups::MatrixGroup load(const GroupSource& s);
io::PermutationGroup load_permutation_source(std::string_view file);

/// Groups of at most this order get class-data files and count as
/// enumerable for the regular-orbit checks.
inline constexpr unsigned long kEnumerableOrder = 2'000'000;

/// Writes every permutation source, group file and class-data file into dir.
/// Entries whose builder throws are skipped and reported on `log`.
std::vector<std::string> generate(const std::filesystem::path& dir, std::ostream& log);

struct EPCheck {
  const GroupSource* source = nullptr;
  std::optional<action::EPVerdict> verdict;
  std::string error;  // set when loading or checking threw
  double seconds = 0;
  bool matches() const;
};

EPCheck run_ep_check(const GroupSource& s, const action::EPOptions& options = {});

// ---------------------------------------------------------------------------
// Acceptance criteria

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::vector<std::string> details;
};

/// Pinned limits: verdicts are exact booleans; each criterion must finish
/// within its wall-clock budget.
inline constexpr int kCriteria = 9;
double budget_seconds(int id);

CriterionResult run_criterion(int id, std::ostream* progress = nullptr);

}  // namespace exprim::corpus
