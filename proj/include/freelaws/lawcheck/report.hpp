#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace freelaws::lawcheck {

/// Orders cases globally: `item` is the work-partition index, `seq` counts
/// cases inside the item.
struct CaseKey {
  std::size_t item = 0;
  std::size_t seq = 0;
  friend auto operator<=>(const CaseKey&, const CaseKey&) = default;
};

struct Failure {
  std::string law;
  std::string inputs;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Failure&, const Failure&) = default;
};

enum class LawStatus { pass, fail, not_applicable };

struct LawResult {
  std::string name;
  LawStatus status = LawStatus::pass;
  std::size_t checked = 0;
  std::size_t discarded = 0;
  std::size_t failed = 0;
  std::string detail;
  friend bool operator==(const LawResult&, const LawResult&) = default;
};

struct CheckReport {
  std::string suite;
  std::string container;
  std::size_t cases_checked = 0;
  std::size_t cases_discarded = 0;
  std::size_t failure_count = 0;
  std::vector<LawResult> laws;
  /// The first few counterexamples, in case order.
  std::vector<Failure> failures;
  /// Informational lines (e.g. custom-equality witnesses).
  std::vector<std::string> notes;

  bool passed() const { return failure_count == 0; }
  const LawResult* law(const std::string& name) const;
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

std::string_view status_name(LawStatus s);

/// Human-readable multi-line report.
std::string render_text(const CheckReport& r);

/// One `suite<TAB>law<TAB>status<TAB>checked<TAB>discarded<TAB>detail` line per law.
std::string render_tsv(const CheckReport& r);

// ---------------------------------------------------------------------------
// Accumulation. A Tally holds per-law counts plus a bounded, key-ordered
// sample of failures and notes. merge() is associative and commutative, so
// partial tallies from concurrent workers can be combined in any order.

inline constexpr std::size_t kMaxSamples = 5;

struct LawTally {
  std::size_t checked = 0;
  std::size_t discarded = 0;
  std::size_t failed = 0;
  std::vector<std::pair<CaseKey, Failure>> samples;
  std::map<std::string, std::size_t> counters;
};

class Tally {
 public:
  explicit Tally(std::size_t law_count = 0) : laws_(law_count) {}

  LawTally& law(std::size_t i) { return laws_.at(i); }
  const LawTally& law(std::size_t i) const { return laws_.at(i); }
  std::size_t law_count() const { return laws_.size(); }

  void add_failure(std::size_t law, CaseKey key, Failure f);
  void add_note(CaseKey key, std::string note);
  const std::vector<std::pair<CaseKey, std::string>>& notes() const { return notes_; }

  void merge(const Tally& other);

 private:
  std::vector<LawTally> laws_;
  std::vector<std::pair<CaseKey, std::string>> notes_;
};

}  // namespace freelaws::lawcheck
