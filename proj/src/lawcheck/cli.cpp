#include "freelaws/lawcheck/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "freelaws/lawcheck/suites.hpp"

namespace freelaws::lawcheck {

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustively checks free-monad, list, and queue laws over builtin containers", "lawcheck"};

  std::string effect_text;
  std::string suite_text;
  std::string tsv_path;
  std::size_t case_effects = 0;
  CheckConfig cfg;

  app.add_option("--effect", effect_text, "identity|maybe|error|state|choice")->required();
  app.add_option("--suite", suite_text,
                 "container_iso|monad_laws|append_assoc|queue_props|oracle_equiv|custom_eq|all")
      ->required();
  app.add_option("--max-len", cfg.max_len, "maximum list length")->capture_default_str();
  app.add_option("--domain-size", cfg.domain_size, "element domain {0..K-1}")->capture_default_str();
  app.add_option("--depth", cfg.depth, "maximum nested impure layers")->capture_default_str();
  app.add_option("--state-size", cfg.state_size, "|S| for the state effect")->capture_default_str();
  app.add_option("--max-arity", cfg.max_arity, "maximum branching for the choice effect")->capture_default_str();
  auto* effects_opt = app.add_option("--case-effects", case_effects,
                                     "cap on impure layers per generated list/queue case");
  app.add_option("--workers", cfg.workers, "worker threads")->capture_default_str();
  app.add_option("--tsv", tsv_path, "also write the line-oriented report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const auto effect = parse_effect(effect_text);
  const auto suite = parse_suite(suite_text);
  if (!effect || !suite) {
    err << "lawcheck: unknown " << (!effect ? "effect '" + effect_text : "suite '" + suite_text) << "'\n"
        << app.help();
    return kExitUsage;
  }
  cfg.effect = *effect;
  cfg.suite = *suite;
  if (effects_opt->count() > 0) cfg.case_effects = case_effects;

  std::vector<CheckReport> reports;
  try {
    reports = run_suites(cfg);
  } catch (const ConfigError& e) {
    err << "lawcheck: configuration error: " << e.what() << '\n';
    return kExitUsage;
  }

  bool passed = true;
  std::string tsv;
  for (const auto& r : reports) {
    out << render_text(r);
    tsv += render_tsv(r);
    passed = passed && r.passed();
  }
  out << (passed ? "ALL PASS" : "FAILURES FOUND") << '\n';

  if (!tsv_path.empty()) {
    std::ofstream file(tsv_path, std::ios::binary);
    if (!file) {
      err << "lawcheck: cannot write " << tsv_path << '\n';
      return kExitUsage;
    }
    file << tsv;
  }
  return passed ? kExitPass : kExitLawFailure;
}

}  // namespace freelaws::lawcheck
