#pragma once

// Lists whose element slots and spine tails are both effectful:
//
//   MList A = Nil | Cons (Free A) (Free (MList A))
//
// append is one recursive definition: bind the spine, then copy the
// defined prefix while rebinding each tail. Effects in the spine of the
// first argument are kept in place; the second argument is shared.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "freelaws/free.hpp"

namespace freelaws {

template <class A>
class MList {
 public:
  using element_type = A;

  static MList nil() { return MList{}; }
  static MList cons(Free<A> head, Free<MList> tail) {
    MList l;
    l.cell_.emplace(std::move(head), std::move(tail));
    return l;
  }

  bool is_nil() const { return !cell_; }
  const Free<A>& head() const { return cell_->first; }
  const Free<MList>& tail() const { return cell_->second; }

 private:
  std::optional<std::pair<Free<A>, Free<MList>>> cell_;
};

template <class A>
bool operator==(const MList<A>& x, const MList<A>& y) {
  if (x.is_nil() || y.is_nil()) return x.is_nil() == y.is_nil();
  return eq_free(x.head(), y.head()) && eq_free(x.tail(), y.tail());
}

template <class A>
std::string show_atom(const MList<A>& xs) {
  if (xs.is_nil()) return "nil";
  return "cons(" + render_free(xs.head()) + ", " + render_free(xs.tail()) + ")";
}

template <class A>
Free<MList<A>> nil_(const ContainerRef& c) {
  return Free<MList<A>>::pure(c, MList<A>::nil());
}

template <class A>
Free<MList<A>> cons_(const Free<A>& fx, const Free<MList<A>>& fxs) {
  require_same_container(fx.spec(), fxs.spec(), "cons_");
  return Free<MList<A>>::pure(fx.container(), MList<A>::cons(fx, fxs));
}

template <class A>
Free<MList<A>> append(const Free<MList<A>>& fxs, const Free<MList<A>>& fys) {
  require_same_container(fxs.spec(), fys.spec(), "append");
  return bind(fxs, [&](const MList<A>& xs) -> Free<MList<A>> {
    if (xs.is_nil()) return fys;
    return cons_(xs.head(), append(xs.tail(), fys));
  });
}

namespace detail {
template <class A>
Free<MList<A>> reverse_onto(const Free<MList<A>>& fxs, const Free<MList<A>>& acc) {
  return bind(fxs, [&](const MList<A>& xs) -> Free<MList<A>> {
    if (xs.is_nil()) return acc;
    return reverse_onto(xs.tail(), cons_(xs.head(), acc));
  });
}
}  // namespace detail

template <class A>
Free<MList<A>> reverse_(const Free<MList<A>>& fxs) {
  return detail::reverse_onto(fxs, nil_<A>(fxs.container()));
}

template <class A>
Free<bool> null_(const Free<MList<A>>& fxs) {
  return bind(fxs, [&](const MList<A>& xs) { return pure_(fxs.container(), xs.is_nil()); });
}

/// The spine is a chain of Pure conses ending in Pure Nil. Elements are not inspected.
template <class A>
bool total_list(const Free<MList<A>>& fxs) {
  const auto* xs = fxs.pure_value();
  while (xs && !xs->is_nil()) xs = xs->tail().pure_value();
  return xs != nullptr;
}

template <class A>
Free<MList<A>> from_plain(const ContainerRef& c, std::span<const A> xs) {
  auto out = nil_<A>(c);
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) out = cons_(pure_(c, *it), out);
  return out;
}

template <class A>
Free<MList<A>> from_plain(const ContainerRef& c, const std::vector<A>& xs) {
  return from_plain(c, std::span<const A>(xs));
}

/// The underlying sequence, or nullopt if the spine or any element is effectful.
template <class A>
std::optional<std::vector<A>> to_plain(const Free<MList<A>>& fxs) {
  std::vector<A> out;
  const auto* xs = fxs.pure_value();
  while (xs && !xs->is_nil()) {
    const auto* x = xs->head().pure_value();
    if (!x) return std::nullopt;
    out.push_back(*x);
    xs = xs->tail().pure_value();
  }
  if (!xs) return std::nullopt;
  return out;
}

/// Recursion scheme over MList, threading through the Free layers of the spine.
template <class A, class B, class ConsCase>
Free<B> fold_list(const B& nil_case, ConsCase&& cons_case, const Free<MList<A>>& fxs) {
  if (const auto* xs = fxs.pure_value()) {
    if (xs->is_nil()) return pure_(fxs.container(), nil_case);
    return pure_(fxs.container(), B(cons_case(xs->head(), fold_list(nil_case, cons_case, xs->tail()))));
  }
  return Free<B>::impure(fxs.container(),
                         cmap([&](const Free<MList<A>>& child) { return fold_list(nil_case, cons_case, child); },
                              *fxs.layer()));
}

}  // namespace freelaws
