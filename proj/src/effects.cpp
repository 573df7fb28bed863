#include "freelaws/effects.hpp"

#include <algorithm>

namespace freelaws {

std::string_view effect_name(Effect e) {
  switch (e) {
    case Effect::identity:
      return "identity";
    case Effect::maybe:
      return "maybe";
    case Effect::error:
      return "error";
    case Effect::state:
      return "state";
    case Effect::choice:
      return "choice";
  }
  return "?";
}

std::optional<Effect> parse_effect(std::string_view name) {
  for (auto e : {Effect::identity, Effect::maybe, Effect::error, Effect::state, Effect::choice})
    if (effect_name(e) == name) return e;
  return std::nullopt;
}

ContainerKind container_kind_for(Effect e) {
  switch (e) {
    case Effect::identity:
      return ContainerKind::zero;
    case Effect::maybe:
      return ContainerKind::one;
    case Effect::error:
      return ContainerKind::constant;
    case Effect::state:
      return ContainerKind::statef;
    case Effect::choice:
      return ContainerKind::choice;
  }
  throw std::logic_error("unknown effect");
}

Effect effect_for(ContainerKind k) {
  switch (k) {
    case ContainerKind::zero:
      return Effect::identity;
    case ContainerKind::one:
      return Effect::maybe;
    case ContainerKind::constant:
      return Effect::error;
    case ContainerKind::statef:
      return Effect::state;
    case ContainerKind::choice:
      return Effect::choice;
  }
  throw std::logic_error("unknown container kind");
}

bool definitely_true(const Free<bool>& fb) {
  switch (fb.spec().kind()) {
    case ContainerKind::zero:
      return interpret_identity(fb).value;
    case ContainerKind::one: {
      auto m = interpret_maybe(fb);
      return m.value && *m.value;
    }
    case ContainerKind::constant: {
      auto m = interpret_error(fb);
      return m.is_ok() && std::get<0>(m.value);
    }
    case ContainerKind::statef: {
      auto m = interpret_state(fb);
      return std::all_of(m.run.begin(), m.run.end(), [](const auto& r) { return r.first; });
    }
    case ContainerKind::choice: {
      auto xs = interpret_list(fb);
      return !xs.empty() && std::all_of(xs.begin(), xs.end(), [](bool b) { return b; });
    }
  }
  return false;
}

}  // namespace freelaws
