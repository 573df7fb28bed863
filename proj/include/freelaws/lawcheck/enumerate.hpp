#pragma once

// Exhaustive generators.
//
// Values are produced together with the number of Impure layers they
// contain ("effects"), so callers can bound the total number of injected
// effect layers per test case. Generation is deterministic: Pure values
// first (in leaf order), then Impure layers by ascending shape, payload
// tuples in lexicographic order of the child enumeration.

#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "freelaws/free.hpp"
#include "freelaws/mlist.hpp"
#include "freelaws/queue.hpp"

namespace freelaws::lawcheck {

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max() / 4;

template <class T>
struct Graded {
  T value;
  std::size_t effects = 0;
};

namespace detail {

template <class T, class Emit>
void for_each_tuple(std::span<const Graded<Free<T>>> pool, std::size_t arity, std::size_t budget,
                    std::vector<Free<T>>& current, std::size_t used, Emit& emit) {
  if (current.size() == arity) {
    emit(current, used);
    return;
  }
  for (const auto& g : pool) {
    if (used + g.effects > budget) continue;
    current.push_back(g.value);
    for_each_tuple(pool, arity, budget, current, used + g.effects, emit);
    current.pop_back();
  }
}

}  // namespace detail

/// All Free values over `leaves` with at most `depth` nested Impure layers
/// and at most `budget` effects in total (leaf effects included).
template <class T>
std::vector<Graded<Free<T>>> graded_free(const ContainerRef& c, std::span<const Graded<T>> leaves,
                                         std::size_t depth, std::size_t budget = kUnbounded) {
  std::vector<Graded<Free<T>>> level;
  for (const auto& leaf : leaves)
    if (leaf.effects <= budget) level.push_back({pure_(c, leaf.value), leaf.effects});

  for (std::size_t d = 0; d < depth && budget > 0; ++d) {
    std::vector<Graded<Free<T>>> next;
    for (const auto& leaf : leaves)
      if (leaf.effects <= budget) next.push_back({pure_(c, leaf.value), leaf.effects});
    for (const auto s : c->shapes()) {
      std::vector<Free<T>> current;
      auto emit = [&](const std::vector<Free<T>>& children, std::size_t used) {
        next.push_back({impure_(c, Ext<Free<T>>{s, children}), used + 1});
      };
      detail::for_each_tuple<T>(level, c->arity(s), budget - 1, current, 0, emit);
    }
    level = std::move(next);
  }
  return level;
}

template <class T>
std::vector<Free<T>> values_of(const std::vector<Graded<Free<T>>>& graded) {
  std::vector<Free<T>> out;
  out.reserve(graded.size());
  for (const auto& g : graded) out.push_back(g.value);
  return out;
}

/// {0, 1, ..., size-1}
inline std::vector<int> int_domain(std::size_t size) {
  std::vector<int> d(size);
  std::iota(d.begin(), d.end(), 0);
  return d;
}

template <class A>
std::vector<Graded<A>> pure_leaves(std::span<const A> domain) {
  std::vector<Graded<A>> out;
  for (const auto& x : domain) out.push_back({x, 0});
  return out;
}

template <class A>
std::vector<Free<A>> enum_free(const ContainerRef& c, std::span<const A> domain, std::size_t depth) {
  const auto leaves = pure_leaves(domain);
  return values_of(graded_free<A>(c, leaves, depth));
}

template <class A>
std::vector<Free<A>> enum_free(const ContainerRef& c, const std::vector<A>& domain, std::size_t depth) {
  return enum_free(c, std::span<const A>(domain), depth);
}

/// Lists with at most `max_len` conses. Every element slot and every spine
/// slot independently ranges over Pure and up to `depth` nested Impure
/// layers; `budget` caps the total number of Impure layers per list.
template <class A>
std::vector<Graded<Free<MList<A>>>> enum_mlist_graded(const ContainerRef& c, std::span<const A> domain,
                                                      std::size_t max_len, std::size_t depth,
                                                      std::size_t budget = kUnbounded) {
  const auto leaves = pure_leaves(domain);
  const auto elements = graded_free<A>(c, leaves, depth, budget);

  // spines[n]: spine values with at most n conses.
  std::vector<Graded<Free<MList<A>>>> spine;
  for (std::size_t n = 0; n <= max_len; ++n) {
    std::vector<Graded<MList<A>>> nodes{{MList<A>::nil(), 0}};
    if (n > 0)
      for (const auto& e : elements)
        for (const auto& t : spine)
          if (e.effects + t.effects <= budget)
            nodes.push_back({MList<A>::cons(e.value, t.value), e.effects + t.effects});
    spine = graded_free<MList<A>>(c, nodes, depth, budget);
  }
  return spine;
}

template <class A>
std::vector<Free<MList<A>>> enum_mlist(const ContainerRef& c, const std::vector<A>& domain,
                                       std::size_t max_len, std::size_t depth,
                                       std::size_t budget = kUnbounded) {
  return values_of(enum_mlist_graded(c, std::span<const A>(domain), max_len, depth, budget));
}

/// Two-list queues: both component lists from enum_mlist_graded, and the
/// outer pair slot itself ranging over Pure and up to `depth` Impure layers.
template <class A>
std::vector<Graded<Free<QueueI<A>>>> enum_queue_graded(const ContainerRef& c, std::span<const A> domain,
                                                       std::size_t max_len, std::size_t depth,
                                                       std::size_t budget = kUnbounded) {
  const auto lists = enum_mlist_graded(c, domain, max_len, depth, budget);
  std::vector<Graded<QueueI<A>>> pairs;
  for (const auto& f : lists)
    for (const auto& b : lists)
      if (f.effects + b.effects <= budget) pairs.push_back({QueueI<A>{f.value, b.value}, f.effects + b.effects});
  return graded_free<QueueI<A>>(c, pairs, depth, budget);
}

/// Does the spine (not the elements) pass through an Impure layer with at least two positions?
template <class A>
bool has_branching_spine(const Free<MList<A>>& fxs) {
  if (const auto* e = fxs.layer()) {
    if (e->payload.size() >= 2) return true;
    for (const auto& child : e->payload)
      if (has_branching_spine(child)) return true;
    return false;
  }
  const auto& xs = *fxs.pure_value();
  return !xs.is_nil() && has_branching_spine(xs.tail());
}

}  // namespace freelaws::lawcheck
