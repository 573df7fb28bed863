#pragma once

// Target monads for the builtin containers, the natural transformations
// into them, interpretation through induce, and custom equality
// ("interpret both sides, compare in the target monad").
//
//   zero   -> Identity     one    -> Maybe      const  -> ErrorV
//   statef -> StateV       choice -> ListV

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "freelaws/container.hpp"
#include "freelaws/free.hpp"

namespace freelaws {

template <class A>
struct Identity {
  A value;
};

template <class A>
struct Maybe {
  std::optional<A> value;

  static Maybe just(A x) { return Maybe{std::move(x)}; }
  static Maybe nothing() { return Maybe{std::nullopt}; }
  bool is_just() const { return value.has_value(); }
};

template <class A>
struct ErrorV {
  std::variant<A, ErrorToken> value;

  static ErrorV ok(A x) { return ErrorV{std::variant<A, ErrorToken>(std::in_place_index<0>, std::move(x))}; }
  static ErrorV err(std::string e) {
    return ErrorV{std::variant<A, ErrorToken>(std::in_place_index<1>, ErrorToken{std::move(e)})};
  }
  bool is_ok() const { return value.index() == 0; }
};

/// A state computation over S = {0..n-1}, tabulated: run[s] = (result, final state).
template <class A>
struct StateV {
  std::vector<std::pair<A, std::size_t>> run;
};

template <class A>
using ListV = std::vector<A>;

// ---------------------------------------------------------------------------

struct IdentityMonad {
  template <class A>
  Identity<A> ret(A x) const {
    return {std::move(x)};
  }
  template <class A>
  Identity<A> join(const Identity<Identity<A>>& m) const {
    return m.value;
  }
  template <class A, class F>
  auto bind(const Identity<A>& m, F&& f) const {
    return f(m.value);
  }
  template <class A, class Eq>
  bool equal(const Identity<A>& x, const Identity<A>& y, Eq&& eq) const {
    return eq(x.value, y.value);
  }
};

struct MaybeMonad {
  template <class A>
  Maybe<A> ret(A x) const {
    return Maybe<A>::just(std::move(x));
  }
  template <class A>
  Maybe<A> join(const Maybe<Maybe<A>>& m) const {
    return m.value ? *m.value : Maybe<A>::nothing();
  }
  template <class A, class F>
  auto bind(const Maybe<A>& m, F&& f) const -> std::invoke_result_t<F&, const A&> {
    if (m.value) return f(*m.value);
    return {std::nullopt};
  }
  template <class A, class Eq>
  bool equal(const Maybe<A>& x, const Maybe<A>& y, Eq&& eq) const {
    if (x.value && y.value) return eq(*x.value, *y.value);
    return x.value.has_value() == y.value.has_value();
  }
};

struct ErrorMonad {
  template <class A>
  ErrorV<A> ret(A x) const {
    return ErrorV<A>::ok(std::move(x));
  }
  template <class A>
  ErrorV<A> join(const ErrorV<ErrorV<A>>& m) const {
    if (const auto* inner = std::get_if<0>(&m.value)) return *inner;
    return ErrorV<A>::err(std::get<1>(m.value).message);
  }
  template <class A, class F>
  auto bind(const ErrorV<A>& m, F&& f) const -> std::invoke_result_t<F&, const A&> {
    using R = std::invoke_result_t<F&, const A&>;
    if (const auto* x = std::get_if<0>(&m.value)) return f(*x);
    return R::err(std::get<1>(m.value).message);
  }
  template <class A, class Eq>
  bool equal(const ErrorV<A>& x, const ErrorV<A>& y, Eq&& eq) const {
    if (x.is_ok() && y.is_ok()) return eq(std::get<0>(x.value), std::get<0>(y.value));
    if (x.is_ok() || y.is_ok()) return false;
    return std::get<1>(x.value) == std::get<1>(y.value);
  }
};

struct StateMonad {
  std::size_t states = 2;

  template <class A>
  StateV<A> ret(A x) const {
    StateV<A> m;
    m.run.reserve(states);
    for (std::size_t s = 0; s < states; ++s) m.run.emplace_back(x, s);
    return m;
  }
  template <class A>
  StateV<A> join(const StateV<StateV<A>>& m) const {
    StateV<A> out;
    out.run.reserve(states);
    for (std::size_t s = 0; s < states; ++s) {
      const auto& [inner, s1] = m.run.at(s);
      out.run.push_back(inner.run.at(s1));
    }
    return out;
  }
  template <class A, class F>
  auto bind(const StateV<A>& m, F&& f) const -> std::invoke_result_t<F&, const A&> {
    std::invoke_result_t<F&, const A&> out;
    out.run.reserve(states);
    for (std::size_t s = 0; s < states; ++s) {
      const auto& [x, s1] = m.run.at(s);
      out.run.push_back(f(x).run.at(s1));
    }
    return out;
  }
  template <class A, class Eq>
  bool equal(const StateV<A>& x, const StateV<A>& y, Eq&& eq) const {
    for (std::size_t s = 0; s < states; ++s) {
      if (x.run.at(s).second != y.run.at(s).second) return false;
      if (!eq(x.run.at(s).first, y.run.at(s).first)) return false;
    }
    return true;
  }
};

struct ListMonad {
  template <class A>
  ListV<A> ret(A x) const {
    return {std::move(x)};
  }
  template <class A>
  ListV<A> join(const ListV<ListV<A>>& m) const {
    ListV<A> out;
    for (const auto& xs : m) out.insert(out.end(), xs.begin(), xs.end());
    return out;
  }
  template <class A, class F>
  auto bind(const ListV<A>& m, F&& f) const -> std::invoke_result_t<F&, const A&> {
    std::invoke_result_t<F&, const A&> out;
    for (const auto& x : m) {
      auto ys = f(x);
      out.insert(out.end(), ys.begin(), ys.end());
    }
    return out;
  }
  template <class A, class Eq>
  bool equal(const ListV<A>& x, const ListV<A>& y, Eq&& eq) const {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!eq(x[i], y[i])) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Natural transformations from the builtin functors.

namespace detail {
[[noreturn]] inline void wrong_functor(std::string_view transform) {
  throw ContainerError(std::string(transform) + ": functor value of the wrong container");
}
}  // namespace detail

struct ZeroToIdentity {
  template <class X>
  Identity<X> operator()(const FunctorValue<X>&) const {
    throw std::logic_error("zero_to_identity: the zero functor has no values");
  }
};

struct OneToMaybe {
  template <class X>
  Maybe<X> operator()(const FunctorValue<X>& v) const {
    if (!std::holds_alternative<UnitToken>(v)) detail::wrong_functor("one_to_maybe");
    return Maybe<X>::nothing();
  }
};

struct ConstToError {
  template <class X>
  ErrorV<X> operator()(const FunctorValue<X>& v) const {
    const auto* e = std::get_if<ErrorToken>(&v);
    if (!e) detail::wrong_functor("const_to_error");
    return ErrorV<X>::err(e->message);
  }
};

/// (σ, payload) ↦ (s ↦ (payload(s), σ(s)))
struct StatefToState {
  std::size_t states = 2;

  template <class X>
  StateV<X> operator()(const FunctorValue<X>& v) const {
    const auto* step = std::get_if<StateStep<X>>(&v);
    if (!step || step->next.size() != states || step->payload.size() != states)
      detail::wrong_functor("statef_to_state");
    StateV<X> m;
    m.run.reserve(states);
    for (std::size_t s = 0; s < states; ++s) m.run.emplace_back(step->payload[s], step->next[s]);
    return m;
  }
};

struct ChoiceToList {
  template <class X>
  ListV<X> operator()(const FunctorValue<X>& v) const {
    const auto* br = std::get_if<Branches<X>>(&v);
    if (!br) detail::wrong_functor("choice_to_list");
    return br->children;
  }
};

// ---------------------------------------------------------------------------

enum class Effect { identity, maybe, error, state, choice };

std::string_view effect_name(Effect e);
std::optional<Effect> parse_effect(std::string_view name);
ContainerKind container_kind_for(Effect e);
Effect effect_for(ContainerKind k);

namespace detail {
inline void require_effect(const ContainerSpec& c, Effect e, std::string_view op) {
  if (c.kind() != container_kind_for(e))
    throw ContainerError(std::string(op) + ": effect " + std::string(effect_name(e)) +
                         " does not match container " + c.describe());
}
}  // namespace detail

template <class A>
Identity<A> interpret_identity(const Free<A>& fx) {
  detail::require_effect(fx.spec(), Effect::identity, "interpret");
  return induce(IdentityMonad{}, ZeroToIdentity{}, fx);
}

template <class A>
Maybe<A> interpret_maybe(const Free<A>& fx) {
  detail::require_effect(fx.spec(), Effect::maybe, "interpret");
  return induce(MaybeMonad{}, OneToMaybe{}, fx);
}

template <class A>
ErrorV<A> interpret_error(const Free<A>& fx) {
  detail::require_effect(fx.spec(), Effect::error, "interpret");
  return induce(ErrorMonad{}, ConstToError{}, fx);
}

template <class A>
StateV<A> interpret_state(const Free<A>& fx) {
  detail::require_effect(fx.spec(), Effect::state, "interpret");
  const auto n = fx.spec().state_count();
  return induce(StateMonad{n}, StatefToState{n}, fx);
}

template <class A>
ListV<A> interpret_list(const Free<A>& fx) {
  detail::require_effect(fx.spec(), Effect::choice, "interpret");
  return induce(ListMonad{}, ChoiceToList{}, fx);
}

/// Calls `k(monad, interpretation)` with the target monad matching `effect`.
template <class A, class K>
decltype(auto) with_interpretation(Effect effect, const Free<A>& fx, K&& k) {
  switch (effect) {
    case Effect::identity:
      return k(IdentityMonad{}, interpret_identity(fx));
    case Effect::maybe:
      return k(MaybeMonad{}, interpret_maybe(fx));
    case Effect::error:
      return k(ErrorMonad{}, interpret_error(fx));
    case Effect::state:
      return k(StateMonad{fx.spec().state_count()}, interpret_state(fx));
    case Effect::choice:
      return k(ListMonad{}, interpret_list(fx));
  }
  throw std::logic_error("unknown effect");
}

template <class A, class Eq>
bool eq_via_induce(Effect effect, const Free<A>& fx, const Free<A>& fy, Eq&& eq) {
  require_same_container(fx.spec(), fy.spec(), "eq_via_induce");
  detail::require_effect(fx.spec(), effect, "eq_via_induce");
  switch (effect) {
    case Effect::identity:
      return IdentityMonad{}.equal(interpret_identity(fx), interpret_identity(fy), eq);
    case Effect::maybe:
      return MaybeMonad{}.equal(interpret_maybe(fx), interpret_maybe(fy), eq);
    case Effect::error:
      return ErrorMonad{}.equal(interpret_error(fx), interpret_error(fy), eq);
    case Effect::state:
      return StateMonad{fx.spec().state_count()}.equal(interpret_state(fx), interpret_state(fy), eq);
    case Effect::choice:
      return ListMonad{}.equal(interpret_list(fx), interpret_list(fy), eq);
  }
  throw std::logic_error("unknown effect");
}

template <class A>
bool eq_via_induce(Effect effect, const Free<A>& fx, const Free<A>& fy) {
  return eq_via_induce(effect, fx, fy, std::equal_to<>{});
}

// Rendering of target-monad values, for reports.

template <class A>
std::string show_target(const Identity<A>& m) {
  return "id " + show_atom(m.value);
}

template <class A>
std::string show_target(const Maybe<A>& m) {
  return m.value ? "just " + show_atom(*m.value) : "nothing";
}

template <class A>
std::string show_target(const ErrorV<A>& m) {
  if (m.is_ok()) return "ok " + show_atom(std::get<0>(m.value));
  return "err \"" + std::get<1>(m.value).message + "\"";
}

template <class A>
std::string show_target(const StateV<A>& m) {
  std::string out = "{";
  for (std::size_t s = 0; s < m.run.size(); ++s) {
    if (s > 0) out += ", ";
    out += std::to_string(s) + "↦(" + show_atom(m.run[s].first) + "," + std::to_string(m.run[s].second) + ")";
  }
  return out + "}";
}

template <class A>
std::string show_target(const ListV<A>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ",";
    out += show_atom(A(xs[i]));
  }
  return out + "]";
}

/// True iff every outcome of the interpreted computation is a definite
/// `true`: just/ok true, true from every start state, or a nonempty list of
/// trues.
bool definitely_true(const Free<bool>& fb);

}  // namespace freelaws
