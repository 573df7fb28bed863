#include <doctest.h>

#include <set>
#include <string>

#include "freelaws/lawcheck/enumerate.hpp"

using namespace freelaws;
using namespace freelaws::lawcheck;

// Reference enumerator, written against the rendering grammar only: it
// produces the textual form of every value directly from the container's
// (label, arity) table, without touching Free, Ext or the generators.
namespace oracle {

struct ShapeInfo {
  std::string label;
  std::size_t arity;
};

std::vector<ShapeInfo> table(const ContainerSpec& c) {
  std::vector<ShapeInfo> out;
  for (auto s : c.shapes()) out.push_back({c.shape_label(s), c.arity(s)});
  return out;
}

constexpr std::size_t kNoBudget = std::size_t(-1);

std::size_t impure_layers(const std::string& s) {
  std::size_t n = 0;
  for (auto pos = s.find("impure("); pos != std::string::npos; pos = s.find("impure(", pos + 1)) ++n;
  return n;
}

// All words over `pool` of length n whose total impure-layer count stays within budget.
std::vector<std::vector<std::string>> words(const std::vector<std::string>& pool, std::size_t n, std::size_t budget) {
  std::vector<std::pair<std::vector<std::string>, std::size_t>> out{{{}, 0}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<std::vector<std::string>, std::size_t>> next;
    for (const auto& [w, used] : out)
      for (const auto& x : pool) {
        const auto k = used + impure_layers(x);
        if (k > budget) continue;
        auto v = w;
        v.push_back(x);
        next.push_back({v, k});
      }
    out = std::move(next);
  }
  std::vector<std::vector<std::string>> ws;
  for (auto& [w, used] : out) ws.push_back(std::move(w));
  return ws;
}

std::vector<std::string> free_over(const std::vector<ShapeInfo>& shapes, const std::vector<std::string>& atoms,
                                   std::size_t depth, std::size_t budget = kNoBudget) {
  std::vector<std::string> out;
  for (const auto& a : atoms)
    if (impure_layers(a) <= budget) out.push_back("pure " + a);
  if (depth == 0 || budget == 0) return out;
  const auto inner = free_over(shapes, atoms, depth - 1, budget - 1);
  for (const auto& s : shapes)
    for (const auto& w : words(inner, s.arity, budget - 1)) {
      std::string v = "impure(" + s.label + ";";
      for (std::size_t p = 0; p < w.size(); ++p) v += (p ? ", " : " ") + std::to_string(p) + "→" + w[p];
      out.push_back(v + ")");
    }
  return out;
}

std::vector<std::string> mlists(const std::vector<ShapeInfo>& shapes, const std::vector<std::string>& atoms,
                                std::size_t max_len, std::size_t depth, std::size_t budget = kNoBudget) {
  const auto elems = free_over(shapes, atoms, depth, budget);
  std::vector<std::string> spines = free_over(shapes, {"nil"}, depth, budget);
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<std::string> nodes{"nil"};
    for (const auto& e : elems)
      for (const auto& t : spines)
        if (impure_layers(e) + impure_layers(t) <= budget) nodes.push_back("cons(" + e + ", " + t + ")");
    spines = free_over(shapes, nodes, depth, budget);
  }
  return spines;
}

}  // namespace oracle

namespace {

template <class T>
std::multiset<std::string> rendered(const std::vector<Free<T>>& xs) {
  std::multiset<std::string> out;
  for (const auto& x : xs) out.insert(render_free(x));
  return out;
}

std::multiset<std::string> as_multiset(const std::vector<std::string>& xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("oracle counts match the hand-derived values") {
  auto one = oracle::table(*ContainerSpec::one());
  auto ch = oracle::table(*ContainerSpec::choice(2));
  CHECK(oracle::free_over(one, {"0", "1"}, 1).size() == 3);
  CHECK(oracle::free_over(ch, {"0"}, 1).size() == 4);
  CHECK(oracle::mlists(one, {"0"}, 1, 1).size() == 6);
  CHECK(oracle::mlists(oracle::table(*ContainerSpec::zero()), {"0"}, 2, 1).size() == 3);
}

TEST_CASE("enum_free counts") {
  CHECK(enum_free(ContainerSpec::one(), std::vector<int>{0, 1}, 1).size() == 3);
  CHECK(enum_free(ContainerSpec::choice(2), std::vector<int>{0}, 1).size() == 4);
  for (std::size_t d : {0, 1, 3}) CHECK(enum_free(ContainerSpec::zero(), std::vector<int>{0}, d).size() == 1);

  auto ch = enum_free(ContainerSpec::choice(2), std::vector<int>{0}, 1);
  std::vector<std::string> text;
  for (const auto& v : ch) text.push_back(render_free(v));
  CHECK(text == std::vector<std::string>{"pure 0", "impure(0;)", "impure(1; 0→pure 0)",
                                         "impure(2; 0→pure 0, 1→pure 0)"});
}

TEST_CASE("enum_mlist counts") {
  CHECK(enum_mlist(ContainerSpec::one(), std::vector<int>{0}, 1, 1).size() == 6);
  auto z = enum_mlist(ContainerSpec::zero(), std::vector<int>{0}, 2, 1);
  CHECK(rendered(z) == std::multiset<std::string>{"pure nil", "pure cons(pure 0, pure nil)",
                                                  "pure cons(pure 0, pure cons(pure 0, pure nil))"});
  // No conses allowed: pure nil plus one impure spine per zero-position shape.
  for (auto c : {ContainerSpec::one(), ContainerSpec::constant({"a", "b", "c"})})
    CHECK(enum_mlist(c, std::vector<int>{0, 1}, 0, 1).size() == 1 + c->shape_count());
}

TEST_CASE("generators agree with the reference enumerator") {
  const std::vector<int> dom{0, 1};
  const std::vector<std::string> atoms{"0", "1"};
  for (auto c : {ContainerSpec::zero(), ContainerSpec::one(), ContainerSpec::constant({"a", "b"}),
                 ContainerSpec::choice(2), ContainerSpec::statef(2)}) {
    CAPTURE(c->describe());
    const auto tab = oracle::table(*c);
    for (std::size_t d = 0; d <= 2; ++d) {
      auto got = rendered(enum_free(c, dom, d));
      CHECK(got == as_multiset(oracle::free_over(tab, atoms, d)));
    }
    // Unbounded lists grow doubly exponentially once shapes carry positions.
    const std::size_t max_n = c->max_shape_arity() == 0 ? 2 : c->kind() == ContainerKind::choice ? 1 : 0;
    for (std::size_t n = 0; n <= max_n; ++n)
      CHECK(rendered(enum_mlist(c, dom, n, 1)) == as_multiset(oracle::mlists(tab, atoms, n, 1)));
  }
}

TEST_CASE("the effect budget filters exactly by impure-layer count") {
  const std::vector<std::string> atoms{"0", "1"};
  // Pruning while building agrees with filtering afterwards.
  const auto one = oracle::table(*ContainerSpec::one());
  const auto all = oracle::mlists(one, atoms, 2, 1);
  for (std::size_t budget : {0, 1, 2, 3}) {
    std::vector<std::string> kept;
    for (const auto& s : all)
      if (oracle::impure_layers(s) <= budget) kept.push_back(s);
    CHECK(as_multiset(kept) == as_multiset(oracle::mlists(one, atoms, 2, 1, budget)));
  }

  const std::vector<int> dom{0, 1};
  for (auto c : {ContainerSpec::choice(2), ContainerSpec::statef(2), ContainerSpec::one()}) {
    CAPTURE(c->describe());
    for (std::size_t budget : {0, 1, 2}) {
      const auto want = oracle::mlists(oracle::table(*c), atoms, 2, 1, budget);
      auto got = enum_mlist_graded(c, std::span<const int>(dom), 2, 1, budget);
      CHECK(rendered(values_of(got)) == as_multiset(want));
      for (const auto& g : got) CHECK(g.effects == oracle::impure_layers(render_free(g.value)));
    }
  }
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
  auto c = ContainerSpec::choice(2);
  auto a = enum_mlist(c, std::vector<int>{0, 1}, 2, 1, 1);
  auto b = enum_mlist(c, std::vector<int>{0, 1}, 2, 1, 1);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(render_free(a[i]) == render_free(b[i]));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) CHECK_FALSE(a[i] == a[j]);
}

TEST_CASE("branching spines are detected on the spine only") {
  auto c = ContainerSpec::choice(2);
  auto elem_branch = impure_(c, Ext<Free<int>>{Shape{2}, {pure_(c, 0), pure_(c, 1)}});
  CHECK_FALSE(has_branching_spine(cons_(elem_branch, nil_<int>(c))));
  auto spine = impure_(c, Ext<Free<MList<int>>>{Shape{2}, {nil_<int>(c), nil_<int>(c)}});
  CHECK(has_branching_spine(spine));
  CHECK(has_branching_spine(cons_(pure_(c, 0), spine)));
}
