#include <doctest.h>

#include "freelaws/effects.hpp"
#include "freelaws/lawcheck/enumerate.hpp"

using namespace freelaws;

namespace {

const ContainerRef kOne = ContainerSpec::one();
const ContainerRef kConst = ContainerSpec::constant({"e", "f"});
const ContainerRef kChoice = ContainerSpec::choice(2);
const ContainerRef kState = ContainerSpec::statef(2);

Free<int> br(std::vector<Free<int>> kids) {
  const Shape s = kChoice->branch_shape(kids.size());
  return impure_(kChoice, Ext<Free<int>>{s, std::move(kids)});
}
Free<int> p(int x) { return pure_(kChoice, x); }

Free<int> state_layer(std::vector<std::size_t> next, int x) {
  return impure_(kState, make_ext(*kState, kState->state_shape(next), [&](Position) { return pure_(kState, x); }));
}

}  // namespace

TEST_CASE("natural transformations") {
  CHECK_FALSE(OneToMaybe{}(FunctorValue<int>{UnitToken{}}).is_just());

  auto e = ConstToError{}(FunctorValue<int>{ErrorToken{"e"}});
  REQUIRE_FALSE(e.is_ok());
  CHECK(std::get<ErrorToken>(e.value).message == "e");

  CHECK(ChoiceToList{}(FunctorValue<char>{Branches<char>{{'a', 'b'}}}) == ListV<char>{'a', 'b'});

  auto st = StatefToState{2}(FunctorValue<int>{StateStep<int>{{1, 1}, {7, 8}}});
  CHECK(st.run == std::vector<std::pair<int, std::size_t>>{{7, 1}, {8, 1}});

  CHECK_THROWS(ZeroToIdentity{}(FunctorValue<int>{UnitToken{}}));
  CHECK_THROWS_AS(OneToMaybe{}(FunctorValue<int>{Branches<int>{}}), ContainerError);
}

TEST_CASE("interpret") {
  CHECK(interpret_identity(pure_(ContainerSpec::zero(), 4)).value == 4);
  CHECK(*interpret_maybe(pure_(kOne, 5)).value == 5);
  CHECK_FALSE(interpret_maybe(nothing_<int>(kOne)).is_just());
  CHECK(std::get<ErrorToken>(interpret_error(fail_<int>(kConst, "f")).value).message == "f");

  // join = concatenation, unfolded twice.
  CHECK(interpret_list(br({p(1), br({p(2), p(3)})})) == ListV<int>{1, 2, 3});
  CHECK(interpret_list(br({})).empty());

  std::vector<std::size_t> swap{1, 0};
  auto fx = impure_(kState, make_ext(*kState, kState->state_shape(swap), [](Position s) { return pure_(kState, int(s)); }));
  CHECK(interpret_state(fx).run == std::vector<std::pair<int, std::size_t>>{{0, 1}, {1, 0}});

  CHECK_THROWS_AS(interpret_maybe(p(1)), ContainerError);
  CHECK_THROWS_AS(interpret_list(pure_(kOne, 1)), ContainerError);
}

TEST_CASE("show_target") {
  CHECK(show_target(interpret_maybe(pure_(kOne, 5))) == "just 5");
  CHECK(show_target(interpret_maybe(nothing_<int>(kOne))) == "nothing");
  CHECK(show_target(interpret_error(fail_<int>(kConst, "e"))) == "err \"e\"");
  CHECK(show_target(interpret_list(br({p(1), p(2)}))) == "[1,2]");
}

TEST_CASE("eq_via_induce") {
  CHECK(eq_via_induce(Effect::maybe, nothing_<int>(kOne), nothing_<int>(kOne)));

  auto left = br({br({p(0), p(1)}), p(2)});
  auto right = br({p(0), br({p(1), p(2)})});
  CHECK(eq_via_induce(Effect::choice, left, right));
  CHECK_FALSE(eq_free(left, right));

  auto id_layer = state_layer({0, 1}, 7);
  CHECK(eq_via_induce(Effect::state, id_layer, pure_(kState, 7)));
  CHECK_FALSE(eq_free(id_layer, pure_(kState, 7)));
  CHECK_FALSE(eq_via_induce(Effect::state, state_layer({1, 0}, 7), pure_(kState, 7)));

  CHECK_THROWS_AS(eq_via_induce(Effect::maybe, p(1), p(1)), ContainerError);
}

TEST_CASE("definitely_true") {
  auto one = ContainerSpec::one();
  CHECK(definitely_true(pure_(one, true)));
  CHECK_FALSE(definitely_true(pure_(one, false)));
  CHECK_FALSE(definitely_true(nothing_<bool>(one)));

  auto ch = ContainerSpec::choice(2);
  auto t = pure_(ch, true);
  CHECK(definitely_true(impure_(ch, Ext<Free<bool>>{Shape{2}, {t, t}})));
  CHECK_FALSE(definitely_true(impure_(ch, Ext<Free<bool>>{Shape{2}, {t, pure_(ch, false)}})));
  CHECK_FALSE(definitely_true(impure_(ch, Ext<Free<bool>>{Shape{0}, {}})));
}

TEST_CASE("effect names roundtrip") {
  for (auto e : {Effect::identity, Effect::maybe, Effect::error, Effect::state, Effect::choice}) {
    CHECK(parse_effect(effect_name(e)) == e);
    CHECK(effect_for(container_kind_for(e)) == e);
  }
  CHECK_FALSE(parse_effect("nosuch").has_value());
}

namespace {

template <class Monad, class Interp>
void check_homomorphism_and_refinement(const ContainerRef& c, Effect effect, Monad m, Interp interp) {
  auto ms = lawcheck::enum_free(c, std::vector<int>{0, 1}, 2);
  auto small = lawcheck::enum_free(c, std::vector<int>{0, 1}, 1);
  auto eq = std::equal_to<>{};
  for (std::size_t fi = 0; fi < small.size(); ++fi) {
    auto f = [&](int x) { return small[(fi + std::size_t(x)) % small.size()]; };
    for (const auto& mv : ms) {
      if (impure_depth(mv) + 1 > 2) continue;
      auto lhs = interp(bind(mv, f));
      auto rhs = m.bind(interp(mv), [&](int x) { return interp(f(x)); });
      CHECK(m.equal(lhs, rhs, eq));
    }
  }
  for (const auto& a : small)
    for (const auto& b : small)
      if (eq_free(a, b)) CHECK(eq_via_induce(effect, a, b));
}

}  // namespace

TEST_CASE("interpretation is a monad homomorphism and refines eq_free") {
  check_homomorphism_and_refinement(kOne, Effect::maybe, MaybeMonad{},
                                    [](const Free<int>& x) { return interpret_maybe(x); });
  check_homomorphism_and_refinement(kConst, Effect::error, ErrorMonad{},
                                    [](const Free<int>& x) { return interpret_error(x); });
  check_homomorphism_and_refinement(kState, Effect::state, StateMonad{2},
                                    [](const Free<int>& x) { return interpret_state(x); });
  check_homomorphism_and_refinement(kChoice, Effect::choice, ListMonad{},
                                    [](const Free<int>& x) { return interpret_list(x); });
}
