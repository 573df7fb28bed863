#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "freelaws/container.hpp"
#include "freelaws/effects.hpp"
#include "freelaws/lawcheck/report.hpp"
#include "freelaws/property.hpp"

namespace freelaws::lawcheck {

/// Invalid configuration or suite/effect combination. Not a law failure.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Suite { container_iso, monad_laws, append_assoc, queue_props, oracle_equiv, custom_eq, all };

std::string_view suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
/// Every concrete suite, in reporting order.
const std::vector<Suite>& all_suites();

struct CheckConfig {
  Effect effect = Effect::maybe;
  Suite suite = Suite::all;
  std::size_t max_len = 3;
  std::size_t domain_size = 2;
  std::size_t depth = 1;
  std::size_t state_size = 2;
  std::size_t max_arity = 2;
  std::vector<std::string> errors = {"front: empty queue"};
  /// Cap on Impure layers per generated case. Unset: unbounded for
  /// containers whose shapes have no positions, 1 otherwise.
  std::optional<std::size_t> case_effects;
  std::size_t workers = 1;

  ContainerRef container() const;
  std::size_t effect_budget() const;
  /// Throws ConfigError on invalid bounds.
  void validate() const;
};

/// Is `suite` meaningful for `effect`? custom_eq needs a non-free target
/// monad (state, choice).
bool suite_applicable(Suite suite, Effect effect);

/// Runs one concrete suite. Throws ConfigError for `all` or an inapplicable
/// combination.
CheckReport run_suite(const CheckConfig& cfg);

/// Runs cfg.suite, expanding `all`; inapplicable suites inside `all` are
/// reported as not applicable.
std::vector<CheckReport> run_suites(const CheckConfig& cfg);

// ---------------------------------------------------------------------------
// Execution plans. A suite is a fixed list of laws plus `items` independent
// work items; each item records outcomes into a Tally through a CaseSink.

class CaseSink {
 public:
  CaseSink(Tally& tally, std::size_t item) : tally_(tally), item_(item) {}

  /// Records one case of `law`. `inputs` renders the case and is only
  /// called when the case fails.
  template <class Inputs>
  void record(std::size_t law, const Outcome& o, Inputs&& inputs) {
    const CaseKey key{item_, seq_++};
    auto& t = tally_.law(law);
    switch (o.verdict) {
      case Verdict::holds:
        ++t.checked;
        break;
      case Verdict::discarded:
        ++t.discarded;
        break;
      case Verdict::fails:
        ++t.checked;
        tally_.add_failure(law, key, Failure{{}, inputs(), o.lhs, o.rhs});
        break;
    }
  }

  void count(std::size_t law, const std::string& counter, std::size_t n = 1) {
    tally_.law(law).counters[counter] += n;
  }

  void note(std::string text) { tally_.add_note(CaseKey{item_, seq_++}, std::move(text)); }

 private:
  Tally& tally_;
  std::size_t item_;
  std::size_t seq_ = 0;
};

struct LawSpec {
  std::string name;
  bool applicable = true;
  /// Static detail text, e.g. which front variant was used.
  std::string detail = {};
  /// Counters reported even when they stay at zero.
  std::vector<std::string> counters = {};
};

struct SuitePlan {
  std::vector<LawSpec> laws;
  std::size_t items = 0;
  std::function<void(std::size_t item, CaseSink&)> run;
  /// Optional post-processing on the merged tally (e.g. existence checks).
  std::function<void(Tally&)> finalize;
};

SuitePlan make_plan(const CheckConfig& cfg);

/// Runs items [0, plan.items) on `workers` threads (items dealt round-robin)
/// and merges the per-worker tallies.
Tally execute(const SuitePlan& plan, std::size_t workers);

CheckReport build_report(const CheckConfig& cfg, const SuitePlan& plan, const Tally& tally);

}  // namespace freelaws::lawcheck
