#pragma once

// Containers: a finite universe of shapes, and per shape a finite, ordered
// universe of positions. One layer of a container applied to a payload type
// is an Ext: a shape plus one payload value per position.
//
// Positions are always the indices 0..arity(shape)-1, so an Ext payload is
// stored as a position-indexed table. Every container here is finitely
// enumerable; that is what makes equality on Ext (and on everything built
// from it) decidable by plain pointwise comparison.

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace freelaws {

class ContainerError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ContainerKind { zero, one, constant, statef, choice };

std::string_view kind_name(ContainerKind kind);

struct Shape {
  std::size_t index = 0;
  friend bool operator==(Shape, Shape) = default;
  friend auto operator<=>(Shape, Shape) = default;
};

using Position = std::size_t;

struct ContainerParams {
  /// Error universe for "const". Must be nonempty.
  std::vector<std::string> errors = {"front: empty queue"};
  /// |S| for "statef". Must be nonzero.
  std::size_t states = 2;
  /// Largest branching degree for "choice".
  std::size_t max_arity = 2;
};

class ContainerSpec;
using ContainerRef = std::shared_ptr<const ContainerSpec>;

class ContainerSpec {
 public:
  static ContainerRef zero();
  static ContainerRef one();
  static ContainerRef constant(std::vector<std::string> errors);
  static ContainerRef statef(std::size_t states);
  static ContainerRef choice(std::size_t max_arity);

  ContainerKind kind() const { return kind_; }
  std::string_view name() const { return kind_name(kind_); }
  /// Name plus instance parameters, e.g. "statef(S=2)".
  std::string describe() const;

  std::size_t shape_count() const { return shape_count_; }
  std::vector<Shape> shapes() const;
  bool has_shape(Shape s) const { return s.index < shape_count_; }

  std::size_t arity(Shape s) const;
  std::vector<Position> positions(Shape s) const;
  std::size_t max_shape_arity() const;

  bool shape_eq(Shape a, Shape b) const { return a.index == b.index; }

  /// Shape text used by the rendering grammar.
  std::string shape_label(Shape s) const;

  const std::vector<std::string>& errors() const { return errors_; }
  std::size_t state_count() const { return states_; }
  std::size_t max_arity() const { return max_arity_; }

  // "const": shapes are the error messages, in order.
  Shape error_shape(std::string_view message) const;
  const std::string& error_of(Shape s) const;

  // "statef": shapes are the total maps S -> S, encoded base |S| with the
  // image of state 0 as the least significant digit.
  std::vector<std::size_t> state_map(Shape s) const;
  Shape state_shape(std::span<const std::size_t> map) const;
  Shape identity_state_shape() const;

  // "choice": shape n has n positions.
  Shape branch_shape(std::size_t arity) const;

  friend bool operator==(const ContainerSpec& a, const ContainerSpec& b);

 private:
  ContainerSpec(ContainerKind kind, std::size_t shape_count)
      : kind_(kind), shape_count_(shape_count) {}

  void require_kind(ContainerKind expected, std::string_view op) const;
  void require_shape(Shape s) const;

  ContainerKind kind_;
  std::size_t shape_count_;
  std::vector<std::string> errors_;
  std::size_t states_ = 0;
  std::size_t max_arity_ = 0;
};

ContainerRef builtin_container(ContainerKind kind, const ContainerParams& params = {});

/// Throws ContainerError unless both refer to equal container descriptors.
void require_same_container(const ContainerSpec& a, const ContainerSpec& b, std::string_view op);

// ---------------------------------------------------------------------------
// Ext

template <class A>
struct Ext {
  Shape shape;
  std::vector<A> payload;

  const A& at(Position p) const { return payload.at(p); }
};

/// Tabulates `f` over the positions of `s`.
template <class F>
auto make_ext(const ContainerSpec& c, Shape s, F&& f) {
  using A = std::decay_t<std::invoke_result_t<F&, Position>>;
  Ext<A> e{s, {}};
  const auto n = c.arity(s);
  e.payload.reserve(n);
  for (Position p = 0; p < n; ++p) e.payload.push_back(f(p));
  return e;
}

template <class A>
void check_ext(const ContainerSpec& c, const Ext<A>& e) {
  if (!c.has_shape(e.shape))
    throw ContainerError("shape " + std::to_string(e.shape.index) + " is foreign to container " +
                         c.describe());
  if (e.payload.size() != c.arity(e.shape))
    throw ContainerError("payload of size " + std::to_string(e.payload.size()) +
                         " does not cover the positions of shape " + c.shape_label(e.shape));
}

template <class F, class A>
auto cmap(F&& f, const Ext<A>& e) {
  using B = std::decay_t<std::invoke_result_t<F&, const A&>>;
  Ext<B> out{e.shape, {}};
  out.payload.reserve(e.payload.size());
  for (const auto& a : e.payload) out.payload.push_back(f(a));
  return out;
}

template <class A, class Eq>
bool ext_equal(const ContainerSpec& c, const Ext<A>& x, const Ext<A>& y, Eq&& eq) {
  if (!c.shape_eq(x.shape, y.shape)) return false;
  for (Position p = 0; p < x.payload.size(); ++p)
    if (!eq(x.payload[p], y.payload[p])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Concrete functor representations of the builtin containers.

struct UnitToken {
  friend bool operator==(UnitToken, UnitToken) = default;
};

struct ErrorToken {
  std::string message;
  friend bool operator==(const ErrorToken&, const ErrorToken&) = default;
};

/// The state functor: a successor-state map paired with a per-state payload.
template <class A>
struct StateStep {
  std::vector<std::size_t> next;
  std::vector<A> payload;
  friend bool operator==(const StateStep&, const StateStep&) = default;
};

template <class A>
struct Branches {
  std::vector<A> children;
  friend bool operator==(const Branches&, const Branches&) = default;
};

// "zero" has no inhabitants and therefore no alternative.
template <class A>
using FunctorValue = std::variant<UnitToken, ErrorToken, StateStep<A>, Branches<A>>;

template <class A>
FunctorValue<A> to_functor(const ContainerSpec& c, const Ext<A>& e) {
  check_ext(c, e);
  switch (c.kind()) {
    case ContainerKind::zero:
      throw std::logic_error("the zero container has no extensions");
    case ContainerKind::one:
      return UnitToken{};
    case ContainerKind::constant:
      return ErrorToken{c.error_of(e.shape)};
    case ContainerKind::statef:
      return StateStep<A>{c.state_map(e.shape), e.payload};
    case ContainerKind::choice:
      return Branches<A>{e.payload};
  }
  throw std::logic_error("unknown container kind");
}

template <class A>
Ext<A> from_functor(const ContainerSpec& c, const FunctorValue<A>& v) {
  auto mismatch = [&] {
    return ContainerError("functor value does not belong to container " + c.describe());
  };
  switch (c.kind()) {
    case ContainerKind::zero:
      throw mismatch();
    case ContainerKind::one:
      if (!std::holds_alternative<UnitToken>(v)) throw mismatch();
      return Ext<A>{Shape{0}, {}};
    case ContainerKind::constant:
      if (auto* err = std::get_if<ErrorToken>(&v)) return Ext<A>{c.error_shape(err->message), {}};
      throw mismatch();
    case ContainerKind::statef:
      if (auto* step = std::get_if<StateStep<A>>(&v)) {
        if (step->payload.size() != c.state_count()) throw mismatch();
        return Ext<A>{c.state_shape(step->next), step->payload};
      }
      throw mismatch();
    case ContainerKind::choice:
      if (auto* br = std::get_if<Branches<A>>(&v)) {
        if (br->children.size() > c.max_arity())
          throw ContainerError("choice of arity " + std::to_string(br->children.size()) +
                               " exceeds the maximum arity " + std::to_string(c.max_arity()));
        return Ext<A>{Shape{br->children.size()}, br->children};
      }
      throw mismatch();
  }
  throw std::logic_error("unknown container kind");
}

}  // namespace freelaws
