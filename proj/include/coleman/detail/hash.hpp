#pragma once

#include <cstddef>
#include <vector>

#include "coleman/finite_group.hpp"

namespace coleman::detail {

struct ElementVectorHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Element e : v) h = (h ^ e) * 1099511628211ULL;
    return h;
  }
};

}  // namespace coleman::detail
