#pragma once

// Two queue implementations over effectful lists and the properties that
// relate them:
//
//   Queue  A = MList A                  single list, add appends at the end
//   QueueI A = PairM (MList A) (MList A) front list and reversed back list
//
// toQueue (f, b) = f ++ reverse b relates the two. front/frontI are the only
// partial operations; they raise the effect of the governing container
// (Nothing for "one", an error message for "const").

#include <string>
#include <string_view>
#include <utility>

#include "freelaws/effects.hpp"
#include "freelaws/free.hpp"
#include "freelaws/mlist.hpp"
#include "freelaws/property.hpp"

namespace freelaws {

inline constexpr std::string_view kFrontEmptyMessage = "front: empty queue";

template <class A, class B>
struct PairM {
  Free<A> first;
  Free<B> second;
};

template <class A, class B>
bool operator==(const PairM<A, B>& x, const PairM<A, B>& y) {
  return eq_free(x.first, y.first) && eq_free(x.second, y.second);
}

template <class A, class B>
std::string show_atom(const PairM<A, B>& p) {
  return "pair(" + render_free(p.first) + ", " + render_free(p.second) + ")";
}

template <class A>
using Queue = MList<A>;

template <class A>
using QueueI = PairM<MList<A>, MList<A>>;

template <class A, class B>
Free<PairM<A, B>> pair_(const Free<A>& fa, const Free<B>& fb) {
  require_same_container(fa.spec(), fb.spec(), "pair_");
  return Free<PairM<A, B>>::pure(fa.container(), PairM<A, B>{fa, fb});
}

template <class A, class B>
Free<A> fst_(const Free<PairM<A, B>>& fp) {
  return bind(fp, [](const PairM<A, B>& p) { return p.first; });
}

template <class A, class B>
Free<B> snd_(const Free<PairM<A, B>>& fp) {
  return bind(fp, [](const PairM<A, B>& p) { return p.second; });
}

// ---------------------------------------------------------------------------
// Lifted booleans. The left operand's effect always runs first; and_/or_
// only demand the right operand when the left one does not decide.

inline Free<bool> not_(const Free<bool>& fb) {
  return fmap([](bool b) { return !b; }, fb);
}

inline Free<bool> and_(const Free<bool>& fa, const Free<bool>& fb) {
  return bind(fa, [&](bool a) { return a ? fb : pure_(fa.container(), false); });
}

inline Free<bool> or_(const Free<bool>& fa, const Free<bool>& fb) {
  return bind(fa, [&](bool a) { return a ? pure_(fa.container(), true) : fb; });
}

// ---------------------------------------------------------------------------
// Single-list queue

namespace detail {
/// The effect raised by front on an empty queue.
template <class A>
Free<A> empty_front(const ContainerRef& c) {
  switch (c->kind()) {
    case ContainerKind::one:
      return nothing_<A>(c);
    case ContainerKind::constant:
      return fail_<A>(c, kFrontEmptyMessage);
    default:
      throw ContainerError("front is only defined for the one and const containers, got " +
                           c->describe());
  }
}
}  // namespace detail

/// "nothing" or "error \"front: empty queue\"", depending on the container.
std::string front_variant(const ContainerSpec& c);

template <class A>
Free<MList<A>> empty_(const ContainerRef& c) {
  return nil_<A>(c);
}

template <class A>
Free<bool> isEmpty_(const Free<MList<A>>& fq) {
  return null_(fq);
}

template <class A>
Free<A> front_(const Free<MList<A>>& fq) {
  return bind(fq, [&](const MList<A>& q) -> Free<A> {
    if (q.is_nil()) return detail::empty_front<A>(fq.container());
    return q.head();
  });
}

template <class A>
Free<MList<A>> add_(const Free<A>& fx, const Free<MList<A>>& fq) {
  return append(fq, cons_(fx, nil_<A>(fq.container())));
}

// ---------------------------------------------------------------------------
// Two-list queue

template <class A>
Free<QueueI<A>> emptyI_(const ContainerRef& c) {
  return pair_(nil_<A>(c), nil_<A>(c));
}

template <class A>
Free<bool> isEmptyI_(const Free<QueueI<A>>& fqi) {
  return null_(fst_(fqi));
}

template <class A>
Free<QueueI<A>> flipQ_(const Free<QueueI<A>>& fqi) {
  const auto& c = fqi.container();
  return bind(fqi, [&](const QueueI<A>& q) {
    return bind(q.first, [&](const MList<A>& f) {
      if (f.is_nil()) return pair_(reverse_(q.second), nil_<A>(c));
      return pair_(pure_(c, f), q.second);
    });
  });
}

template <class A>
Free<QueueI<A>> addI_(const Free<A>& fx, const Free<QueueI<A>>& fqi) {
  return bind(fqi, [&](const QueueI<A>& q) { return flipQ_(pair_(q.first, cons_(fx, q.second))); });
}

template <class A>
Free<A> frontI_(const Free<QueueI<A>>& fqi) {
  const auto& c = fqi.container();
  return bind(fqi, [&](const QueueI<A>& q) {
    return bind(q.first, [&](const MList<A>& f) -> Free<A> {
      if (f.is_nil()) return detail::empty_front<A>(c);
      return f.head();
    });
  });
}

template <class A>
Free<MList<A>> toQueue(const Free<QueueI<A>>& fqi) {
  return bind(fqi, [](const QueueI<A>& q) { return append(q.first, reverse_(q.second)); });
}

/// null b || not (null f)
template <class A>
Free<bool> invariant_(const Free<QueueI<A>>& fqi) {
  return or_(null_(snd_(fqi)), not_(null_(fst_(fqi))));
}

template <class A>
bool total_queue(const Free<QueueI<A>>& fqi) {
  const auto* q = fqi.pure_value();
  return q && total_list(q->first) && total_list(q->second);
}

// ---------------------------------------------------------------------------
// Properties relating the two implementations

template <class A>
Outcome prop_isEmpty(const Free<QueueI<A>>& fqi) {
  if (!total_queue(fqi)) return Outcome::discarded();
  return implies(invariant_(fqi), [&] { return check_equal(isEmptyI_(fqi), isEmpty_(toQueue(fqi))); });
}

template <class A>
Outcome prop_add(const Free<A>& fa, const Free<QueueI<A>>& fqi) {
  return check_equal(toQueue(addI_(fa, fqi)), add_(fa, toQueue(fqi)));
}

/// Only meaningful under the one and const containers.
template <class A>
Outcome prop_front(const Free<QueueI<A>>& fqi) {
  if (!total_queue(fqi)) return Outcome::discarded();
  return implies(and_(invariant_(fqi), not_(isEmptyI_(fqi))),
                 [&] { return check_equal(frontI_(fqi), front_(toQueue(fqi))); });
}

}  // namespace freelaws
