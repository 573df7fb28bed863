#pragma once

// Outcomes of executable properties, QuickCheck style: a case either holds,
// fails (with both sides rendered), or is discarded by a failed premise.

#include <concepts>
#include <string>
#include <utility>

#include "freelaws/effects.hpp"
#include "freelaws/free.hpp"

namespace freelaws {

enum class Verdict { holds, fails, discarded };

struct Outcome {
  Verdict verdict = Verdict::holds;
  std::string lhs;
  std::string rhs;

  static Outcome holds() { return {}; }
  static Outcome discarded() { return {Verdict::discarded, {}, {}}; }
  static Outcome fails(std::string lhs, std::string rhs) {
    return {Verdict::fails, std::move(lhs), std::move(rhs)};
  }
};

template <class A>
Outcome check_equal(const Free<A>& lhs, const Free<A>& rhs) {
  if (eq_free(lhs, rhs)) return Outcome::holds();
  return Outcome::fails(render_free(lhs), render_free(rhs));
}

/// `premise ==> conclusion`: discarded unless the premise is definitely true.
inline Outcome implies(const Free<bool>& premise, const Outcome& conclusion) {
  if (!definitely_true(premise)) return Outcome::discarded();
  return conclusion;
}

template <class F>
  requires std::invocable<F&>
Outcome implies(const Free<bool>& premise, F&& conclusion) {
  if (!definitely_true(premise)) return Outcome::discarded();
  return conclusion();
}

}  // namespace freelaws
