#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace coleman {

using Element = std::uint32_t;

namespace detail {

// Lazily computed, immutable-once-set data attached to a group. Stores plain
// member lists rather than handles so nothing here refers back to the group.
struct GroupCache {
  std::mutex mutex;
  std::map<std::uint64_t, std::vector<Element>> sylow;
  std::optional<std::vector<std::vector<Element>>> normal_subgroups;
  std::optional<std::vector<Element>> center;
};

}  // namespace detail
}  // namespace coleman
