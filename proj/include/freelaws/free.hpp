#pragma once

// The free monad over a container.
//
//   Free A = Pure A | Impure (Ext (Free A))
//
// Every value carries the container that governs its Impure layers, so
// combining values built over different containers is reported as a
// ContainerError instead of silently producing nonsense.
//
// Recursion is direct. Values are immutable and share structure through
// shared_ptr, so copies are cheap and values may be used from any thread.

#include <concepts>
#include <functional>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>

#include "freelaws/container.hpp"

namespace freelaws {

template <class A>
class Free {
 public:
  using value_type = A;

  static Free pure(ContainerRef c, A x) {
    return Free(std::move(c), std::make_shared<const Node>(Node{std::move(x)}));
  }

  static Free impure(ContainerRef c, Ext<Free> e) {
    check_ext(*c, e);
    for (const auto& child : e.payload) require_same_container(*c, child.spec(), "impure_");
    return Free(std::move(c), std::make_shared<const Node>(Node{std::move(e)}));
  }

  bool is_pure() const { return node_->v.index() == 0; }
  bool is_impure() const { return !is_pure(); }

  /// Null unless this is a Pure value.
  const A* pure_value() const { return std::get_if<0>(&node_->v); }
  /// Null unless this is an Impure value.
  const Ext<Free>* layer() const { return std::get_if<1>(&node_->v); }

  const ContainerRef& container() const { return container_; }
  const ContainerSpec& spec() const { return *container_; }

 private:
  struct Node {
    std::variant<A, Ext<Free>> v;
  };

  Free(ContainerRef c, std::shared_ptr<const Node> n) : container_(std::move(c)), node_(std::move(n)) {}

  ContainerRef container_;
  std::shared_ptr<const Node> node_;
};

template <class T>
struct is_free : std::false_type {};
template <class A>
struct is_free<Free<A>> : std::true_type {};

template <class A>
Free<std::decay_t<A>> pure_(ContainerRef c, A&& x) {
  return Free<std::decay_t<A>>::pure(std::move(c), std::forward<A>(x));
}

template <class A>
Free<A> impure_(ContainerRef c, Ext<Free<A>> e) {
  return Free<A>::impure(std::move(c), std::move(e));
}

/// The undefined value of the partiality effect.
template <class A>
Free<A> nothing_(const ContainerRef& c) {
  if (c->kind() != ContainerKind::one)
    throw ContainerError("nothing_ requires the one container, got " + c->describe());
  return impure_(c, Ext<Free<A>>{Shape{0}, {}});
}

/// Raises `message` in the error effect; `message` must be in the error universe.
template <class A>
Free<A> fail_(const ContainerRef& c, std::string_view message) {
  if (c->kind() != ContainerKind::constant)
    throw ContainerError("fail_ requires the const container, got " + c->describe());
  return impure_(c, Ext<Free<A>>{c->error_shape(message), {}});
}

template <class A, class Pur, class Imp>
auto fold_free(Pur&& pur, Imp&& imp, const Free<A>& fx)
    -> std::decay_t<std::invoke_result_t<Pur&, const A&>> {
  if (const auto* x = fx.pure_value()) return pur(*x);
  const auto& c = fx.spec();
  auto folded = cmap([&](const Free<A>& child) { return fold_free(pur, imp, child); }, *fx.layer());
  return imp(to_functor(c, folded));
}

template <class A, class F>
auto bind(const Free<A>& fx, F&& f) -> std::decay_t<std::invoke_result_t<F&, const A&>> {
  using FB = std::decay_t<std::invoke_result_t<F&, const A&>>;
  static_assert(is_free<FB>::value, "bind continuation must return a Free value");
  if (const auto* x = fx.pure_value()) {
    FB r = f(*x);
    require_same_container(fx.spec(), r.spec(), "bind");
    return r;
  }
  const auto& e = *fx.layer();
  return FB::impure(fx.container(), cmap([&](const Free<A>& child) { return bind(child, f); }, e));
}

template <class A, class F>
auto fmap(F&& f, const Free<A>& fx) {
  return bind(fx, [&](const A& x) { return pure_(fx.container(), f(x)); });
}

/// Monad homomorphism out of Free, generated by a natural transformation
/// `nt : FunctorValue<X> -> M<X>` into a target monad providing ret and join.
template <class Monad, class NT, class A>
auto induce(const Monad& m, NT&& nt, const Free<A>& fx) {
  return fold_free([&](const A& x) { return m.ret(x); },
                   [&](const auto& fv) { return m.join(nt(fv)); }, fx);
}

template <class A, class Eq>
bool eq_free(const Free<A>& fx, const Free<A>& fy, Eq&& eq) {
  require_same_container(fx.spec(), fy.spec(), "eq_free");
  const auto* x = fx.pure_value();
  const auto* y = fy.pure_value();
  if (x && y) return eq(*x, *y);
  if (x || y) return false;
  return ext_equal(fx.spec(), *fx.layer(), *fy.layer(),
                   [&](const Free<A>& a, const Free<A>& b) { return eq_free(a, b, eq); });
}

template <class A>
bool eq_free(const Free<A>& fx, const Free<A>& fy) {
  return eq_free(fx, fy, std::equal_to<>{});
}

template <class A>
bool operator==(const Free<A>& fx, const Free<A>& fy) {
  return eq_free(fx, fy);
}

/// Lifts a predicate on A to Free A: every reachable Pure payload satisfies it.
template <class A, class P>
bool for_free(P&& pred, const Free<A>& fx) {
  if (const auto* x = fx.pure_value()) return pred(*x);
  for (const auto& child : fx.layer()->payload)
    if (!for_free(pred, child)) return false;
  return true;
}

/// Largest number of nested Impure layers.
template <class A>
std::size_t impure_depth(const Free<A>& fx) {
  if (fx.is_pure()) return 0;
  std::size_t d = 0;
  for (const auto& child : fx.layer()->payload) d = std::max(d, impure_depth(child));
  return d + 1;
}

// ---------------------------------------------------------------------------
// Rendering
//
//   freeval := "pure " atom | "impure(" shape ";" [" " binding {", " binding}] ")"
//   binding := pos "→" freeval

inline std::string show_atom(bool b) { return b ? "true" : "false"; }

template <std::integral T>
  requires(!std::same_as<T, bool>)
std::string show_atom(T x) {
  return std::to_string(x);
}

inline std::string show_atom(const std::string& s) { return '"' + s + '"'; }

struct ShowAtom {
  template <class T>
  std::string operator()(const T& x) const {
    return show_atom(x);
  }
};

template <class A, class Show>
std::string render_free(const Free<A>& fx, Show&& show) {
  if (const auto* x = fx.pure_value()) return "pure " + show(*x);
  const auto& e = *fx.layer();
  std::string out = "impure(" + fx.spec().shape_label(e.shape) + ";";
  for (Position p = 0; p < e.payload.size(); ++p) {
    out += p == 0 ? " " : ", ";
    out += std::to_string(p) + "→" + render_free(e.payload[p], show);
  }
  return out + ")";
}

template <class A>
std::string render_free(const Free<A>& fx) {
  return render_free(fx, ShowAtom{});
}

}  // namespace freelaws
