#include "freelaws/container.hpp"

#include <numeric>
#include <sstream>

namespace freelaws {

std::string_view kind_name(ContainerKind kind) {
  switch (kind) {
    case ContainerKind::zero:
      return "zero";
    case ContainerKind::one:
      return "one";
    case ContainerKind::constant:
      return "const";
    case ContainerKind::statef:
      return "statef";
    case ContainerKind::choice:
      return "choice";
  }
  return "?";
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > std::size_t{1} << 24) throw ContainerError("statef shape universe is too large");
    r *= base;
  }
  return r;
}

}  // namespace

ContainerRef ContainerSpec::zero() {
  return ContainerRef(new ContainerSpec(ContainerKind::zero, 0));
}

ContainerRef ContainerSpec::one() {
  return ContainerRef(new ContainerSpec(ContainerKind::one, 1));
}

ContainerRef ContainerSpec::constant(std::vector<std::string> errors) {
  if (errors.empty()) throw ContainerError("const container needs a nonempty error universe");
  for (std::size_t i = 0; i < errors.size(); ++i)
    for (std::size_t j = i + 1; j < errors.size(); ++j)
      if (errors[i] == errors[j]) throw ContainerError("duplicate error message: " + errors[i]);
  auto* c = new ContainerSpec(ContainerKind::constant, errors.size());
  c->errors_ = std::move(errors);
  return ContainerRef(c);
}

ContainerRef ContainerSpec::statef(std::size_t states) {
  if (states == 0) throw ContainerError("statef container needs a nonempty state universe");
  auto* c = new ContainerSpec(ContainerKind::statef, checked_power(states, states));
  c->states_ = states;
  return ContainerRef(c);
}

ContainerRef ContainerSpec::choice(std::size_t max_arity) {
  auto* c = new ContainerSpec(ContainerKind::choice, max_arity + 1);
  c->max_arity_ = max_arity;
  return ContainerRef(c);
}

ContainerRef builtin_container(ContainerKind kind, const ContainerParams& params) {
  switch (kind) {
    case ContainerKind::zero:
      return ContainerSpec::zero();
    case ContainerKind::one:
      return ContainerSpec::one();
    case ContainerKind::constant:
      return ContainerSpec::constant(params.errors);
    case ContainerKind::statef:
      return ContainerSpec::statef(params.states);
    case ContainerKind::choice:
      return ContainerSpec::choice(params.max_arity);
  }
  throw ContainerError("unknown container kind");
}

std::string ContainerSpec::describe() const {
  std::ostringstream os;
  os << name();
  switch (kind_) {
    case ContainerKind::constant:
      os << "(E=" << errors_.size() << ')';
      break;
    case ContainerKind::statef:
      os << "(S=" << states_ << ')';
      break;
    case ContainerKind::choice:
      os << "(k=" << max_arity_ << ')';
      break;
    default:
      break;
  }
  return os.str();
}

std::vector<Shape> ContainerSpec::shapes() const {
  std::vector<Shape> out(shape_count_);
  for (std::size_t i = 0; i < shape_count_; ++i) out[i] = Shape{i};
  return out;
}

void ContainerSpec::require_shape(Shape s) const {
  if (!has_shape(s))
    throw ContainerError("shape " + std::to_string(s.index) + " is foreign to container " +
                         describe());
}

void ContainerSpec::require_kind(ContainerKind expected, std::string_view op) const {
  if (kind_ != expected)
    throw ContainerError(std::string(op) + " requires a " + std::string(kind_name(expected)) +
                         " container, got " + describe());
}

std::size_t ContainerSpec::arity(Shape s) const {
  require_shape(s);
  switch (kind_) {
    case ContainerKind::statef:
      return states_;
    case ContainerKind::choice:
      return s.index;
    default:
      return 0;
  }
}

std::vector<Position> ContainerSpec::positions(Shape s) const {
  std::vector<Position> out(arity(s));
  std::iota(out.begin(), out.end(), Position{0});
  return out;
}

std::size_t ContainerSpec::max_shape_arity() const {
  switch (kind_) {
    case ContainerKind::statef:
      return states_;
    case ContainerKind::choice:
      return max_arity_;
    default:
      return 0;
  }
}

std::string ContainerSpec::shape_label(Shape s) const {
  require_shape(s);
  switch (kind_) {
    case ContainerKind::one:
      return "tt";
    case ContainerKind::constant:
      return errors_[s.index];
    case ContainerKind::statef: {
      std::string out = "σ{";
      auto map = state_map(s);
      for (std::size_t i = 0; i < map.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(i) + "↦" + std::to_string(map[i]);
      }
      return out + '}';
    }
    case ContainerKind::choice:
      return std::to_string(s.index);
    case ContainerKind::zero:
      break;
  }
  throw std::logic_error("zero has no shapes");
}

Shape ContainerSpec::error_shape(std::string_view message) const {
  require_kind(ContainerKind::constant, "error_shape");
  for (std::size_t i = 0; i < errors_.size(); ++i)
    if (errors_[i] == message) return Shape{i};
  throw ContainerError("message \"" + std::string(message) + "\" is not in the error universe");
}

const std::string& ContainerSpec::error_of(Shape s) const {
  require_kind(ContainerKind::constant, "error_of");
  require_shape(s);
  return errors_[s.index];
}

std::vector<std::size_t> ContainerSpec::state_map(Shape s) const {
  require_kind(ContainerKind::statef, "state_map");
  require_shape(s);
  std::vector<std::size_t> map(states_);
  auto code = s.index;
  for (auto& image : map) {
    image = code % states_;
    code /= states_;
  }
  return map;
}

Shape ContainerSpec::state_shape(std::span<const std::size_t> map) const {
  require_kind(ContainerKind::statef, "state_shape");
  if (map.size() != states_) throw ContainerError("state map has the wrong domain size");
  std::size_t code = 0;
  for (std::size_t i = map.size(); i-- > 0;) {
    if (map[i] >= states_) throw ContainerError("state map leaves the state universe");
    code = code * states_ + map[i];
  }
  return Shape{code};
}

Shape ContainerSpec::identity_state_shape() const {
  require_kind(ContainerKind::statef, "identity_state_shape");
  std::vector<std::size_t> id(states_);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return state_shape(id);
}

Shape ContainerSpec::branch_shape(std::size_t n) const {
  require_kind(ContainerKind::choice, "branch_shape");
  if (n > max_arity_) throw ContainerError("arity exceeds the choice container's maximum");
  return Shape{n};
}

bool operator==(const ContainerSpec& a, const ContainerSpec& b) {
  return a.kind_ == b.kind_ && a.errors_ == b.errors_ && a.states_ == b.states_ &&
         a.max_arity_ == b.max_arity_;
}

void require_same_container(const ContainerSpec& a, const ContainerSpec& b, std::string_view op) {
  if (&a != &b && !(a == b))
    throw ContainerError(std::string(op) + ": values are governed by different containers (" +
                         a.describe() + " vs " + b.describe() + ")");
}

}  // namespace freelaws
