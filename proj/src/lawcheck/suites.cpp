#include "freelaws/lawcheck/suites.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "freelaws/lawcheck/enumerate.hpp"
#include "freelaws/mlist.hpp"
#include "freelaws/queue.hpp"

namespace freelaws::lawcheck {

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::container_iso:
      return "container_iso";
    case Suite::monad_laws:
      return "monad_laws";
    case Suite::append_assoc:
      return "append_assoc";
    case Suite::queue_props:
      return "queue_props";
    case Suite::oracle_equiv:
      return "oracle_equiv";
    case Suite::custom_eq:
      return "custom_eq";
    case Suite::all:
      return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (auto s : all_suites())
    if (suite_name(s) == name) return s;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{Suite::container_iso, Suite::monad_laws, Suite::append_assoc,
                                         Suite::queue_props,   Suite::oracle_equiv, Suite::custom_eq};
  return suites;
}

ContainerRef CheckConfig::container() const {
  ContainerParams params;
  params.errors = errors;
  params.states = state_size;
  params.max_arity = max_arity;
  try {
    return builtin_container(container_kind_for(effect), params);
  } catch (const ContainerError& e) {
    throw ConfigError(e.what());
  }
}

std::size_t CheckConfig::effect_budget() const {
  if (case_effects) return *case_effects;
  return container()->max_shape_arity() == 0 ? kUnbounded : 1;
}

void CheckConfig::validate() const {
  if (effect == Effect::state && state_size == 0) throw ConfigError("--state-size must be at least 1");
  if (effect == Effect::error && errors.empty()) throw ConfigError("the error universe must be nonempty");
  if (workers == 0) throw ConfigError("--workers must be at least 1");
  container();
}

bool suite_applicable(Suite suite, Effect effect) {
  if (suite == Suite::custom_eq) return effect == Effect::state || effect == Effect::choice;
  return true;
}

namespace {

using IntFree = Free<int>;
using IntList = Free<MList<int>>;
using IntQueue = Free<QueueI<int>>;

std::string show_plain(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "]";
}

/// Calls f(tuple) for every tuple in {0..base-1}^len, lexicographically.
template <class F>
void for_each_index_tuple(std::size_t base, std::size_t len, F&& f) {
  std::vector<std::size_t> t(len, 0);
  if (len > 0 && base == 0) return;
  while (true) {
    f(t);
    std::size_t i = len;
    while (i > 0) {
      if (++t[i - 1] < base) break;
      t[--i] = 0;
    }
    if (i == 0) return;
  }
}

std::string render_ext(const ContainerSpec& c, const Ext<int>& e) {
  std::string out = "ext(" + c.shape_label(e.shape) + ";";
  for (Position p = 0; p < e.payload.size(); ++p)
    out += (p ? ", " : " ") + std::to_string(p) + "→" + std::to_string(e.payload[p]);
  return out + ")";
}

std::string render_functor(const FunctorValue<int>& v) {
  struct {
    std::string operator()(const UnitToken&) const { return "unit"; }
    std::string operator()(const ErrorToken& e) const { return "const \"" + e.message + "\""; }
    std::string operator()(const StateStep<int>& s) const {
      std::string out = "state(";
      for (std::size_t i = 0; i < s.next.size(); ++i)
        out += (i ? ", " : "") + std::to_string(i) + "↦(" + std::to_string(s.payload[i]) + "," +
               std::to_string(s.next[i]) + ")";
      return out + ")";
    }
    std::string operator()(const Branches<int>& b) const { return "choice" + show_plain(b.children); }
  } visitor;
  return std::visit(visitor, v);
}

/// Functor values of a builtin container, enumerated directly from the
/// functor's own description rather than through its shapes.
std::vector<FunctorValue<int>> enum_functor_values(const ContainerSpec& c, const std::vector<int>& dom) {
  std::vector<FunctorValue<int>> out;
  switch (c.kind()) {
    case ContainerKind::zero:
      break;
    case ContainerKind::one:
      out.emplace_back(UnitToken{});
      break;
    case ContainerKind::constant:
      for (const auto& e : c.errors()) out.emplace_back(ErrorToken{e});
      break;
    case ContainerKind::statef: {
      const auto n = c.state_count();
      for_each_index_tuple(n, n, [&](const std::vector<std::size_t>& next) {
        for_each_index_tuple(dom.size(), n, [&](const std::vector<std::size_t>& idx) {
          StateStep<int> step{next, {}};
          for (auto i : idx) step.payload.push_back(dom[i]);
          out.emplace_back(std::move(step));
        });
      });
      break;
    }
    case ContainerKind::choice:
      for (std::size_t len = 0; len <= c.max_arity(); ++len)
        for_each_index_tuple(dom.size(), len, [&](const std::vector<std::size_t>& idx) {
          Branches<int> b;
          for (auto i : idx) b.children.push_back(dom[i]);
          out.emplace_back(std::move(b));
        });
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------

SuitePlan container_iso_plan(const CheckConfig& cfg) {
  enum { from_to, to_from, cmap_identity, cmap_composition };
  const auto c = cfg.container();
  const auto dom = int_domain(cfg.domain_size);

  SuitePlan plan;
  plan.laws = {{"from_to"}, {"to_from"}, {"cmap_identity"}, {"cmap_composition"}};
  plan.items = c->shape_count() + 1;
  plan.run = [c, dom](std::size_t item, CaseSink& sink) {
    const auto& spec = *c;
    auto same = [&](const Ext<int>& a, const Ext<int>& b) {
      if (ext_equal(spec, a, b, std::equal_to<>{})) return Outcome::holds();
      return Outcome::fails(render_ext(spec, a), render_ext(spec, b));
    };
    if (item < spec.shape_count()) {
      const Shape s{item};
      for_each_index_tuple(dom.size(), spec.arity(s), [&](const std::vector<std::size_t>& idx) {
        const auto e = make_ext(spec, s, [&](Position p) { return dom[idx[p]]; });
        auto inputs = [&] { return render_ext(spec, e); };
        sink.record(from_to, same(from_functor(spec, to_functor(spec, e)), e), inputs);
        sink.record(cmap_identity, same(cmap([](int x) { return x; }, e), e), inputs);
        auto f = [](int x) { return x + 1; };
        auto g = [](int x) { return 2 * x; };
        sink.record(cmap_composition, same(cmap([&](int x) { return g(f(x)); }, e), cmap(g, cmap(f, e))),
                    inputs);
      });
      return;
    }
    for (const auto& v : enum_functor_values(spec, dom)) {
      const auto back = to_functor(spec, from_functor(spec, v));
      sink.record(to_from, back == v ? Outcome::holds() : Outcome::fails(render_functor(back), render_functor(v)),
                  [&] { return render_functor(v); });
    }
  };
  return plan;
}

// ---------------------------------------------------------------------------

struct FreeFn {
  std::vector<IntFree> image;
  std::size_t depth = 0;

  const IntFree& operator()(int x) const { return image.at(static_cast<std::size_t>(x)); }
};

std::string render_fn(const FreeFn& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.image.size(); ++i)
    out += (i ? ", " : "") + std::to_string(i) + "↦" + render_free(f.image[i]);
  return out + "}";
}

/// Every function {0..|dom|-1} -> codomain.
std::vector<FreeFn> enum_functions(const std::vector<IntFree>& codomain, std::size_t dom_size) {
  std::vector<FreeFn> out;
  for_each_index_tuple(codomain.size(), dom_size, [&](const std::vector<std::size_t>& idx) {
    FreeFn f;
    for (auto i : idx) {
      f.image.push_back(codomain[i]);
      f.depth = std::max(f.depth, impure_depth(codomain[i]));
    }
    out.push_back(std::move(f));
  });
  return out;
}

template <class Monad, class Interp>
Outcome homomorphism_case(const Monad& m, Interp&& interp, const IntFree& fx, const FreeFn& f) {
  const auto lhs = interp(bind(fx, f));
  const auto rhs = m.bind(interp(fx), [&](int x) { return interp(f(x)); });
  if (m.equal(lhs, rhs, std::equal_to<>{})) return Outcome::holds();
  return Outcome::fails(show_target(lhs), show_target(rhs));
}

Outcome homomorphism_case(Effect effect, const IntFree& fx, const FreeFn& f) {
  switch (effect) {
    case Effect::identity:
      return homomorphism_case(IdentityMonad{}, [](const IntFree& v) { return interpret_identity(v); }, fx, f);
    case Effect::maybe:
      return homomorphism_case(MaybeMonad{}, [](const IntFree& v) { return interpret_maybe(v); }, fx, f);
    case Effect::error:
      return homomorphism_case(ErrorMonad{}, [](const IntFree& v) { return interpret_error(v); }, fx, f);
    case Effect::state:
      return homomorphism_case(StateMonad{fx.spec().state_count()},
                               [](const IntFree& v) { return interpret_state(v); }, fx, f);
    case Effect::choice:
      return homomorphism_case(ListMonad{}, [](const IntFree& v) { return interpret_list(v); }, fx, f);
  }
  throw std::logic_error("unknown effect");
}

SuitePlan monad_laws_plan(const CheckConfig& cfg) {
  enum { left_identity, right_identity, associativity, fold_fusion, induce_hom, for_free_stable, eq_equivalence };
  const auto c = cfg.container();
  const auto dom = int_domain(cfg.domain_size);
  const auto depth = cfg.depth;
  const auto effect = cfg.effect;

  auto values = std::make_shared<std::vector<IntFree>>(enum_free(c, dom, depth));
  auto small = std::make_shared<std::vector<IntFree>>(enum_free(c, dom, std::min<std::size_t>(depth, 1)));
  auto fns = std::make_shared<std::vector<FreeFn>>(enum_functions(*small, dom.size()));

  SuitePlan plan;
  plan.laws = {{"left_identity"},       {"right_identity"},     {"associativity"}, {"fold_fusion"},
               {"induce_homomorphism"}, {"for_free_stability"}, {"eq_equivalence"}};
  const auto n_values = values->size();
  const auto n_small = small->size();
  plan.items = n_values + n_small + dom.size();
  plan.run = [=](std::size_t item, CaseSink& sink) {
    auto ret = [&](int x) { return pure_(c, x); };

    if (item < n_values) {
      const auto& m = (*values)[item];
      const auto dm = impure_depth(m);
      auto shown = [&] { return "m=" + render_free(m); };

      sink.record(right_identity, check_equal(bind(m, ret), m), shown);

      auto rebuilt = fold_free(ret, [&](const FunctorValue<IntFree>& v) { return impure_(c, from_functor(*c, v)); }, m);
      sink.record(fold_fusion, check_equal(rebuilt, m), shown);

      for (auto [name, pred] : {std::pair<const char*, bool (*)(int)>{"even", [](int x) { return x % 2 == 0; }},
                                {"zero", [](int x) { return x == 0; }}}) {
        if (!for_free(pred, m)) {
          sink.record(for_free_stable, Outcome::discarded(), shown);
          continue;
        }
        const bool kept = for_free(pred, bind(m, ret));
        sink.record(for_free_stable, kept ? Outcome::holds() : Outcome::fails("false", "true"),
                    [&] { return shown() + " P=" + name; });
      }

      sink.record(eq_equivalence, eq_free(m, m) ? Outcome::holds() : Outcome::fails("m ≠ m", "m = m"), shown);

      for (const auto& f : *fns) {
        if (dm + f.depth > depth) continue;
        sink.record(induce_hom, homomorphism_case(effect, m, f),
                    [&] { return shown() + " f=" + render_fn(f); });
        for (const auto& g : *fns) {
          if (dm + f.depth + g.depth > depth) continue;
          const auto lhs = bind(bind(m, f), g);
          const auto rhs = bind(m, [&](int x) { return bind(f(x), g); });
          sink.record(associativity, check_equal(lhs, rhs),
                      [&] { return shown() + " f=" + render_fn(f) + " g=" + render_fn(g); });
        }
      }
      return;
    }

    if (item < n_values + n_small) {
      // Symmetry and transitivity over the shallow values.
      const auto& x = (*small)[item - n_values];
      for (const auto& y : *small) {
        const bool xy = eq_free(x, y);
        sink.record(eq_equivalence, xy == eq_free(y, x) ? Outcome::holds() : Outcome::fails("asymmetric", "symmetric"),
                    [&] { return "x=" + render_free(x) + " y=" + render_free(y); });
        for (const auto& z : *small) {
          const bool ok = !(xy && eq_free(y, z)) || eq_free(x, z);
          sink.record(eq_equivalence, ok ? Outcome::holds() : Outcome::fails("intransitive", "transitive"),
                      [&] { return "x=" + render_free(x) + " y=" + render_free(y) + " z=" + render_free(z); });
        }
      }
      return;
    }

    const int x = dom[item - n_values - n_small];
    for (const auto& f : *fns)
      sink.record(left_identity, check_equal(bind(ret(x), f), f(x)),
                  [&] { return "x=" + std::to_string(x) + " f=" + render_fn(f); });
  };
  return plan;
}

// ---------------------------------------------------------------------------

/// Indices of `graded` ordered by ascending effect count (stable), plus
/// upto[r] = how many of them have at most r effects.
template <class T>
struct EffectIndex {
  std::vector<std::size_t> order;
  std::vector<std::size_t> upto;

  explicit EffectIndex(const std::vector<Graded<T>>& graded) {
    order.resize(graded.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return graded[a].effects < graded[b].effects; });
    std::size_t max_effects = 0;
    for (const auto& g : graded) max_effects = std::max(max_effects, g.effects);
    upto.assign(max_effects + 1, 0);
    for (const auto& g : graded) ++upto[g.effects];
    for (std::size_t r = 1; r < upto.size(); ++r) upto[r] += upto[r - 1];
  }

  /// Iterates the indices whose effect count is at most `remaining`.
  template <class F>
  void each_within(std::size_t remaining, F&& f) const {
    if (upto.empty()) return;
    const auto n = upto[std::min(remaining, upto.size() - 1)];
    for (std::size_t i = 0; i < n; ++i) f(order[i]);
  }
};

SuitePlan append_assoc_plan(const CheckConfig& cfg) {
  enum { assoc, nil_left, nil_right, total_preserved };
  const auto c = cfg.container();
  const auto dom = int_domain(cfg.domain_size);
  const auto budget = cfg.effect_budget();

  auto lists = std::make_shared<std::vector<Graded<IntList>>>(
      enum_mlist_graded(c, std::span<const int>(dom), cfg.max_len, cfg.depth, budget));
  auto index = std::make_shared<EffectIndex<IntList>>(*lists);
  auto branching = std::make_shared<std::vector<bool>>();
  for (const auto& l : *lists) branching->push_back(has_branching_spine(l.value));

  SuitePlan plan;
  plan.laws = {{"append_assoc", true, "", {"impure_cases", "branching_spine_cases"}},
               {"nil_left_identity"}, {"nil_right_identity"}, {"total_preserved"}};
  plan.items = lists->size();
  plan.run = [=](std::size_t item, CaseSink& sink) {
    const auto& xs = (*lists)[item];
    const auto nil = nil_<int>(c);
    auto shown1 = [&] { return "xs=" + render_free(xs.value); };
    sink.record(nil_left, check_equal(append(nil, xs.value), xs.value), shown1);
    sink.record(nil_right, check_equal(append(xs.value, nil), xs.value), shown1);

    index->each_within(budget - xs.effects, [&](std::size_t j) {
      const auto& ys = (*lists)[j];
      auto shown2 = [&] { return shown1() + " ys=" + render_free(ys.value); };
      if (total_list(xs.value) && total_list(ys.value))
        sink.record(total_preserved,
                    total_list(append(xs.value, ys.value)) ? Outcome::holds() : Outcome::fails("partial", "total"),
                    shown2);
      else
        sink.record(total_preserved, Outcome::discarded(), shown2);

      const auto xy = append(xs.value, ys.value);
      index->each_within(budget - xs.effects - ys.effects, [&](std::size_t k) {
        const auto& zs = (*lists)[k];
        const auto lhs = append(xs.value, append(ys.value, zs.value));
        const auto rhs = append(xy, zs.value);
        sink.record(assoc, check_equal(lhs, rhs), [&] { return shown2() + " zs=" + render_free(zs.value); });
        if (xs.effects + ys.effects + zs.effects > 0) sink.count(assoc, "impure_cases");
        if ((*branching)[item] || (*branching)[j] || (*branching)[k]) sink.count(assoc, "branching_spine_cases");
      });
    });
  };
  return plan;
}

// ---------------------------------------------------------------------------

SuitePlan queue_props_plan(const CheckConfig& cfg) {
  enum { is_empty, add, front, add_invariant, flip_idempotent };
  const auto c = cfg.container();
  const auto dom = int_domain(cfg.domain_size);
  const auto budget = cfg.effect_budget();
  const bool front_applies = c->kind() == ContainerKind::one || c->kind() == ContainerKind::constant;
  if (c->kind() == ContainerKind::constant) {
    const auto& errs = c->errors();
    if (std::find(errs.begin(), errs.end(), kFrontEmptyMessage) == errs.end())
      throw ConfigError("queue_props under error needs \"" + std::string(kFrontEmptyMessage) +
                        "\" in the error universe");
  }

  const auto leaves = pure_leaves(std::span<const int>(dom));
  auto queues = std::make_shared<std::vector<Graded<IntQueue>>>(
      enum_queue_graded(c, std::span<const int>(dom), cfg.max_len, cfg.depth, budget));
  auto elements = std::make_shared<std::vector<Graded<IntFree>>>(graded_free<int>(c, leaves, cfg.depth, budget));
  auto element_index = std::make_shared<EffectIndex<IntFree>>(*elements);

  SuitePlan plan;
  plan.laws = {{"prop_isEmpty"},
               {"prop_add"},
               {"prop_front", front_applies,
                front_applies ? "front=" + front_variant(*c) : "front needs the one or const container"},
               {"add_preserves_invariant"},
               {"flipQ_idempotent"}};
  plan.items = queues->size();
  plan.run = [=](std::size_t item, CaseSink& sink) {
    const auto& q = (*queues)[item];
    auto shown = [&] { return "fqi=" + render_free(q.value); };
    sink.record(is_empty, prop_isEmpty(q.value), shown);
    if (front_applies) sink.record(front, prop_front(q.value), shown);

    const bool total = total_queue(q.value);
    const bool invariant_holds = total && definitely_true(invariant_(q.value));
    element_index->each_within(budget - q.effects, [&](std::size_t i) {
      const auto& fa = (*elements)[i].value;
      auto shown_fa = [&] { return "fa=" + render_free(fa) + " " + shown(); };
      sink.record(add, prop_add(fa, q.value), shown_fa);
      if (!invariant_holds) {
        sink.record(add_invariant, Outcome::discarded(), shown_fa);
        return;
      }
      const auto after = invariant_(addI_(fa, q.value));
      sink.record(add_invariant, definitely_true(after) ? Outcome::holds() : Outcome::fails(render_free(after), "pure true"),
                  shown_fa);
    });

    if (!total) {
      sink.record(flip_idempotent, Outcome::discarded(), shown);
    } else {
      const auto once = flipQ_(q.value);
      sink.record(flip_idempotent, check_equal(flipQ_(once), once), shown);
    }
  };
  return plan;
}

// ---------------------------------------------------------------------------

SuitePlan oracle_equiv_plan(const CheckConfig& cfg) {
  enum { append_oracle, reverse_oracle, to_queue_oracle };
  const auto c = cfg.container();
  const auto dom = int_domain(cfg.domain_size);

  auto plain = std::make_shared<std::vector<std::vector<int>>>();
  for (std::size_t len = 0; len <= cfg.max_len; ++len)
    for_each_index_tuple(dom.size(), len, [&](const std::vector<std::size_t>& idx) {
      std::vector<int> xs;
      for (auto i : idx) xs.push_back(dom[i]);
      plain->push_back(std::move(xs));
    });

  SuitePlan plan;
  plan.laws = {{"append_oracle"}, {"reverse_oracle"}, {"toQueue_oracle"}};
  plan.items = plain->size();
  plan.run = [=](std::size_t item, CaseSink& sink) {
    const auto& xs = (*plain)[item];
    auto compare = [](const std::optional<std::vector<int>>& got, const std::vector<int>& want) {
      if (got && *got == want) return Outcome::holds();
      return Outcome::fails(got ? show_plain(*got) : "non-total", show_plain(want));
    };
    const auto fxs = from_plain(c, xs);

    auto want_rev = xs;
    std::reverse(want_rev.begin(), want_rev.end());
    sink.record(reverse_oracle, compare(to_plain(reverse_(fxs)), want_rev), [&] { return "xs=" + show_plain(xs); });

    for (const auto& ys : *plain) {
      const auto fys = from_plain(c, ys);
      auto shown = [&] { return "xs=" + show_plain(xs) + " ys=" + show_plain(ys); };

      auto want_app = xs;
      want_app.insert(want_app.end(), ys.begin(), ys.end());
      sink.record(append_oracle, compare(to_plain(append(fxs, fys)), want_app), shown);

      auto want_queue = xs;
      want_queue.insert(want_queue.end(), ys.rbegin(), ys.rend());
      sink.record(to_queue_oracle, compare(to_plain(toQueue(pair_(fxs, fys))), want_queue), shown);
    }
  };
  return plan;
}

// ---------------------------------------------------------------------------

template <class Monad, class Interp>
SuitePlan custom_eq_plan_for(const CheckConfig& cfg, Monad monad, Interp interp) {
  enum { refinement, witness, specific };
  const auto c = cfg.container();
  const auto dom = int_domain(cfg.domain_size);
  const auto effect = cfg.effect;

  auto values = std::make_shared<std::vector<IntFree>>(enum_free(c, dom, cfg.depth));
  using Target = decltype(interp(std::declval<const IntFree&>()));
  auto targets = std::make_shared<std::vector<Target>>();
  for (const auto& v : *values) targets->push_back(interp(v));

  SuitePlan plan;
  plan.laws = {{"refinement"},
               {"witness", true, "", {"pairs"}},
               {effect == Effect::state ? "identity_shape" : "branch_assoc"}};
  plan.items = values->size();
  plan.run = [=](std::size_t item, CaseSink& sink) {
    const auto& fx = (*values)[item];
    for (std::size_t j = 0; j < values->size(); ++j) {
      const auto& fy = (*values)[j];
      const bool structural = eq_free(fx, fy);
      const bool custom = monad.equal((*targets)[item], (*targets)[j], std::equal_to<>{});
      auto shown = [&] { return "fx=" + render_free(fx) + " fy=" + render_free(fy); };
      sink.record(refinement,
                  !structural || custom ? Outcome::holds()
                                        : Outcome::fails(show_target((*targets)[item]), show_target((*targets)[j])),
                  shown);
      if (custom && !structural) {
        sink.count(witness, "pairs");
        sink.note("witness: " + render_free(fx) + " ≡ " + render_free(fy) + " (both " +
                  show_target((*targets)[item]) + ")");
      }
    }
    if (item != 0) return;

    // The canonical pairs: same interpretation, different structure.
    auto expect_custom_only = [&](const IntFree& a, const IntFree& b) {
      const bool custom = eq_via_induce(effect, a, b);
      const bool structural = eq_free(a, b);
      if (custom && !structural) return Outcome::holds();
      return Outcome::fails(std::string("eq_via_induce=") + (custom ? "true" : "false") +
                                " eq_free=" + (structural ? "true" : "false"),
                            "eq_via_induce=true eq_free=false");
    };
    if (effect == Effect::state) {
      const auto id = c->identity_state_shape();
      for (int x : dom) {
        const auto lhs = impure_(c, make_ext(*c, id, [&](Position) { return pure_(c, x); }));
        const auto rhs = pure_(c, x);
        sink.record(specific, expect_custom_only(lhs, rhs),
                    [&] { return render_free(lhs) + " vs " + render_free(rhs); });
      }
    } else if (c->max_arity() >= 2) {
      const auto two = c->branch_shape(2);
      auto branch = [&](IntFree l, IntFree r) { return impure_(c, Ext<IntFree>{two, {std::move(l), std::move(r)}}); };
      for (int a : dom)
        for (int b : dom)
          for (int d : dom) {
            const auto lhs = branch(branch(pure_(c, a), pure_(c, b)), pure_(c, d));
            const auto rhs = branch(pure_(c, a), branch(pure_(c, b), pure_(c, d)));
            sink.record(specific, expect_custom_only(lhs, rhs),
                        [&] { return render_free(lhs) + " vs " + render_free(rhs); });
          }
    }
  };
  plan.finalize = [](Tally& t) {
    auto& w = t.law(witness);
    w.checked = 1;
    if (w.counters["pairs"] == 0)
      t.add_failure(witness, CaseKey{0, 0},
                    Failure{{}, "all enumerated pairs", "no pair equal under eq_via_induce but not eq_free",
                            "at least one such pair"});
  };
  return plan;
}

SuitePlan custom_eq_plan(const CheckConfig& cfg) {
  if (cfg.effect == Effect::state) {
    const auto n = cfg.state_size;
    return custom_eq_plan_for(cfg, StateMonad{n}, [](const IntFree& v) { return interpret_state(v); });
  }
  if (cfg.effect == Effect::choice)
    return custom_eq_plan_for(cfg, ListMonad{}, [](const IntFree& v) { return interpret_list(v); });
  throw ConfigError("custom_eq requires a non-free target monad (--effect state or choice)");
}

CheckReport not_applicable_report(const CheckConfig& cfg) {
  CheckReport r;
  r.suite = std::string(suite_name(cfg.suite));
  r.container = cfg.container()->describe();
  r.laws.push_back(LawResult{r.suite, LawStatus::not_applicable, 0, 0, 0,
                             "requires a non-free target monad (state, choice)"});
  return r;
}

}  // namespace

SuitePlan make_plan(const CheckConfig& cfg) {
  switch (cfg.suite) {
    case Suite::container_iso:
      return container_iso_plan(cfg);
    case Suite::monad_laws:
      return monad_laws_plan(cfg);
    case Suite::append_assoc:
      return append_assoc_plan(cfg);
    case Suite::queue_props:
      return queue_props_plan(cfg);
    case Suite::oracle_equiv:
      return oracle_equiv_plan(cfg);
    case Suite::custom_eq:
      return custom_eq_plan(cfg);
    case Suite::all:
      break;
  }
  throw ConfigError("make_plan needs a concrete suite");
}

Tally execute(const SuitePlan& plan, std::size_t workers) {
  const auto law_count = plan.laws.size();
  auto run_share = [&](std::size_t first, std::size_t stride) {
    Tally t(law_count);
    for (std::size_t i = first; i < plan.items; i += stride) {
      CaseSink sink(t, i);
      plan.run(i, sink);
    }
    return t;
  };
  if (workers <= 1 || plan.items <= 1) return run_share(0, 1);

  std::vector<Tally> partial(workers, Tally(law_count));
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        try {
          partial[w] = run_share(w, workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  Tally merged(law_count);
  for (const auto& t : partial) merged.merge(t);
  return merged;
}

CheckReport build_report(const CheckConfig& cfg, const SuitePlan& plan, const Tally& tally) {
  CheckReport r;
  r.suite = std::string(suite_name(cfg.suite));
  r.container = cfg.container()->describe();

  std::vector<std::pair<CaseKey, Failure>> samples;
  for (std::size_t i = 0; i < plan.laws.size(); ++i) {
    const auto& spec = plan.laws[i];
    const auto& t = tally.law(i);
    LawResult l;
    l.name = spec.name;
    if (!spec.applicable) {
      l.status = LawStatus::not_applicable;
      l.detail = spec.detail;
      r.laws.push_back(std::move(l));
      continue;
    }
    l.checked = t.checked;
    l.discarded = t.discarded;
    l.failed = t.failed;
    l.status = t.failed > 0 ? LawStatus::fail : LawStatus::pass;

    auto counters = t.counters;
    for (const auto& name : spec.counters) counters[name] += 0;
    std::ostringstream detail;
    detail << spec.detail;
    for (const auto& [k, v] : counters) detail << (detail.tellp() > 0 ? " " : "") << k << '=' << v;
    if (!t.samples.empty())
      detail << (detail.tellp() > 0 ? " " : "") << "first counterexample: " << t.samples.front().second.inputs;
    l.detail = detail.str();

    r.cases_checked += t.checked;
    r.cases_discarded += t.discarded;
    r.failure_count += t.failed;
    for (auto [key, f] : t.samples) {
      f.law = spec.name;
      samples.emplace_back(key, std::move(f));
    }
    r.laws.push_back(std::move(l));
  }
  std::stable_sort(samples.begin(), samples.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < samples.size() && i < kMaxSamples; ++i) r.failures.push_back(samples[i].second);
  for (const auto& [key, note] : tally.notes()) r.notes.push_back(note);
  return r;
}

CheckReport run_suite(const CheckConfig& cfg) {
  cfg.validate();
  if (cfg.suite == Suite::all) throw ConfigError("run_suite needs a concrete suite; use run_suites for all");
  if (!suite_applicable(cfg.suite, cfg.effect))
    throw ConfigError(std::string(suite_name(cfg.suite)) + " is not applicable to --effect " +
                      std::string(effect_name(cfg.effect)));
  const auto plan = make_plan(cfg);
  auto tally = execute(plan, cfg.workers);
  if (plan.finalize) plan.finalize(tally);
  return build_report(cfg, plan, tally);
}

std::vector<CheckReport> run_suites(const CheckConfig& cfg) {
  cfg.validate();
  if (cfg.suite != Suite::all) return {run_suite(cfg)};
  std::vector<CheckReport> out;
  for (auto s : all_suites()) {
    auto one = cfg;
    one.suite = s;
    out.push_back(suite_applicable(s, cfg.effect) ? run_suite(one) : not_applicable_report(one));
  }
  return out;
}

}  // namespace freelaws::lawcheck
