#include "freelaws/queue.hpp"

namespace freelaws {

std::string front_variant(const ContainerSpec& c) {
  switch (c.kind()) {
    case ContainerKind::one:
      return "nothing";
    case ContainerKind::constant:
      return "error \"" + std::string(kFrontEmptyMessage) + "\"";
    default:
      return "n/a";
  }
}

}  // namespace freelaws
