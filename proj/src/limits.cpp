#include "coleman/limits.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace coleman {

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("COLEMAN_MAX_ORDER"); raw != nullptr) {
    try {
      const long long value = std::stoll(raw);
      if (value > 0) {
        const auto cap = static_cast<std::size_t>(value);
        limits.automorphism = cap;
        limits.isomorphism = cap;
        limits.subgroup_search = std::max(limits.subgroup_search, cap);
      }
    } catch (const std::exception&) {
      // unparsable values are ignored
    }
  }
  return limits;
}

const Limits& Limits::defaults() {
  static const Limits limits = from_env();
  return limits;
}

}  // namespace coleman
