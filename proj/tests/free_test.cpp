#include <doctest.h>

#include "freelaws/effects.hpp"
#include "freelaws/free.hpp"
#include "freelaws/lawcheck/enumerate.hpp"

using namespace freelaws;

namespace {

const ContainerRef kZero = ContainerSpec::zero();
const ContainerRef kOne = ContainerSpec::one();
const ContainerRef kChoice = ContainerSpec::choice(2);
const ContainerRef kState = ContainerSpec::statef(2);
const ContainerRef kConst = ContainerSpec::constant({"front: empty queue", "boom"});

Free<int> branch(std::vector<Free<int>> kids) {
  const Shape s = kChoice->branch_shape(kids.size());
  return impure_(kChoice, Ext<Free<int>>{s, std::move(kids)});
}

Shape swap_shape() {
  const std::vector<std::size_t> m{1, 0};
  return kState->state_shape(m);
}

}  // namespace

TEST_CASE("constructors") {
  auto p = pure_(kOne, 5);
  REQUIRE(p.is_pure());
  CHECK(*p.pure_value() == 5);

  auto n = nothing_<int>(kOne);
  CHECK(n.is_impure());
  CHECK(n.layer()->payload.empty());
  CHECK(n == nothing_<int>(kOne));
  CHECK_FALSE(n == p);

  auto b = branch({pure_(kChoice, 1), pure_(kChoice, 2)});
  CHECK(b.layer()->shape == Shape{2});

  auto f = fail_<int>(kConst, "front: empty queue");
  CHECK(kConst->error_of(f.layer()->shape) == "front: empty queue");
  CHECK_FALSE(f == fail_<int>(kConst, "boom"));
}

TEST_CASE("constructor errors") {
  CHECK_THROWS_AS(nothing_<int>(kChoice), ContainerError);
  CHECK_THROWS_AS(fail_<int>(kOne, "x"), ContainerError);
  CHECK_THROWS_AS(fail_<int>(kConst, "not in universe"), ContainerError);
  CHECK_THROWS_AS(impure_(kOne, Ext<Free<int>>{Shape{3}, {}}), ContainerError);
  // Payload arity must match the shape.
  CHECK_THROWS_AS(impure_(kChoice, Ext<Free<int>>{Shape{2}, {pure_(kChoice, 1)}}), ContainerError);
  // Children must share the governing container.
  CHECK_THROWS_AS(impure_(kChoice, Ext<Free<int>>{Shape{1}, {pure_(kOne, 1)}}), ContainerError);
  CHECK_THROWS_AS(eq_free(pure_(kOne, 1), pure_(kChoice, 1)), ContainerError);
  CHECK_THROWS_AS(bind(pure_(kOne, 1), [](int x) { return pure_(kChoice, x); }), ContainerError);
}

TEST_CASE("fold_free") {
  auto absurd = [](const auto&) -> int { throw std::logic_error("unreachable"); };
  CHECK(fold_free([](int x) { return x; }, absurd, pure_(kZero, 3)) == 3);

  auto none = fold_free([](int x) { return std::to_string(x); },
                        [](const FunctorValue<std::string>&) { return std::string("none"); }, nothing_<int>(kOne));
  CHECK(none == "none");

  // Hand unfolding: imp(to_functor(cmap(fold, e))) with fold(pure x) = [x].
  auto concat = [](const FunctorValue<std::vector<int>>& v) {
    std::vector<int> out;
    for (const auto& xs : std::get<Branches<std::vector<int>>>(v).children) out.insert(out.end(), xs.begin(), xs.end());
    return out;
  };
  auto flat = fold_free([](int x) { return std::vector<int>{x}; }, concat,
                        branch({pure_(kChoice, 1), pure_(kChoice, 2)}));
  CHECK(flat == std::vector<int>{1, 2});
}

TEST_CASE("bind") {
  auto inc = [](int x) { return pure_(kChoice, x + 1); };
  CHECK(bind(pure_(kChoice, 1), inc) == pure_(kChoice, 2));

  auto f = [](int x) { return pure_(kOne, x * 100); };
  CHECK(bind(nothing_<int>(kOne), f) == nothing_<int>(kOne));

  auto ten = [](int x) { return pure_(kChoice, 10 * x); };
  CHECK(bind(branch({pure_(kChoice, 1), pure_(kChoice, 2)}), ten) ==
        branch({pure_(kChoice, 10), pure_(kChoice, 20)}));

  CHECK(fmap([](int x) { return x * 3; }, branch({pure_(kChoice, 1)})) == branch({pure_(kChoice, 3)}));
}

TEST_CASE("induce") {
  MaybeMonad mm;
  auto m5 = induce(mm, OneToMaybe{}, pure_(kOne, 5));
  REQUIRE(m5.is_just());
  CHECK(*m5.value == 5);
  CHECK_FALSE(induce(mm, OneToMaybe{}, nothing_<int>(kOne)).is_just());

  auto swap = swap_shape();
  auto fx = impure_(kState, make_ext(*kState, swap, [](Position s) { return pure_(kState, int(s)); }));
  auto st = induce(StateMonad{2}, StatefToState{2}, fx);
  // s ↦ (payload(s), σ(s)) with payload(s) = s, σ = swap.
  REQUIRE(st.run.size() == 2);
  CHECK(st.run[0] == std::pair<int, std::size_t>{0, 1});
  CHECK(st.run[1] == std::pair<int, std::size_t>{1, 0});
}

TEST_CASE("eq_free") {
  CHECK(eq_free(pure_(kOne, 1), pure_(kOne, 1)));
  CHECK_FALSE(eq_free(nothing_<int>(kOne), pure_(kOne, 1)));
  CHECK_FALSE(eq_free(branch({pure_(kChoice, 1), pure_(kChoice, 2)}), branch({pure_(kChoice, 1), pure_(kChoice, 3)})));
  CHECK_FALSE(eq_free(branch({pure_(kChoice, 1)}), branch({pure_(kChoice, 1), pure_(kChoice, 1)})));
  // A custom element equality is honoured.
  auto mod2 = [](int a, int b) { return a % 2 == b % 2; };
  CHECK(eq_free(branch({pure_(kChoice, 1)}), branch({pure_(kChoice, 3)}), mod2));
}

TEST_CASE("for_free") {
  auto even = [](int x) { return x % 2 == 0; };
  CHECK(for_free(even, pure_(kOne, 2)));
  CHECK(for_free(even, nothing_<int>(kOne)));
  CHECK_FALSE(for_free(even, branch({pure_(kChoice, 2), pure_(kChoice, 3)})));
  CHECK(for_free(even, branch({pure_(kChoice, 2), branch({})})));
}

TEST_CASE("render_free") {
  CHECK(render_free(pure_(kOne, 3)) == "pure 3");
  CHECK(render_free(nothing_<int>(kOne)) == "impure(tt;)");
  CHECK(render_free(branch({pure_(kChoice, 1), branch({})})) == "impure(2; 0→pure 1, 1→impure(0;))");
  CHECK(render_free(fail_<int>(kConst, "boom")) == "impure(boom;)");
  CHECK(render_free(pure_(kOne, true)) == "pure true");
  auto fx = impure_(kState, make_ext(*kState, swap_shape(), [](Position s) { return pure_(kState, int(s)); }));
  CHECK(render_free(fx) == "impure(σ{0↦1,1↦0}; 0→pure 0, 1→pure 1)");
}

TEST_CASE("render_free is injective on distinguishable values") {
  for (auto c : {kOne, kChoice, kState, kConst}) {
    auto vals = lawcheck::enum_free(c, std::vector<int>{0, 1}, 1);
    for (std::size_t i = 0; i < vals.size(); ++i)
      for (std::size_t j = 0; j < vals.size(); ++j)
        CHECK((render_free(vals[i]) == render_free(vals[j])) == eq_free(vals[i], vals[j]));
  }
}

TEST_CASE("impure_depth") {
  CHECK(impure_depth(pure_(kChoice, 0)) == 0);
  CHECK(impure_depth(branch({})) == 1);
  CHECK(impure_depth(branch({pure_(kChoice, 1), branch({branch({})})})) == 3);
}

TEST_CASE("monad laws hold on every enumerated value (depth 2, domain {0,1})") {
  for (auto c : {kZero, kOne, kConst, kChoice, kState}) {
    CAPTURE(c->describe());
    auto ms = lawcheck::enum_free(c, std::vector<int>{0, 1}, 2);
    auto small = lawcheck::enum_free(c, std::vector<int>{0, 1}, 1);
    auto ret = [&](int x) { return pure_(c, x); };
    // f and g pick a fixed value per input, from two ends of the small enumeration.
    auto f = [&](int x) { return small[std::size_t(x) % small.size()]; };
    auto g = [&](int x) { return small[small.size() - 1 - std::size_t(x) % small.size()]; };
    for (int x : {0, 1}) CHECK(bind(ret(x), f) == f(x));
    for (const auto& m : ms) {
      CHECK(bind(m, ret) == m);
      CHECK(bind(bind(m, f), g) == bind(m, [&](int x) { return bind(f(x), g); }));
      auto rebuilt = fold_free([&](int x) { return pure_(c, x); },
                               [&](const FunctorValue<Free<int>>& v) { return impure_(c, from_functor(*c, v)); }, m);
      CHECK(rebuilt == m);
    }
  }
}

TEST_CASE("eq_free is an equivalence on enumerated values") {
  for (auto c : {kOne, kConst, kChoice}) {
    auto vals = lawcheck::enum_free(c, std::vector<int>{0, 1}, 1);
    for (const auto& a : vals) {
      CHECK(a == a);
      for (const auto& b : vals) {
        CHECK((a == b) == (b == a));
        if (a == b)
          for (const auto& d : vals)
            if (b == d) CHECK(a == d);
      }
    }
  }
}
