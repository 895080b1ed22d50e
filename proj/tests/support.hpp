#pragma once

#include <stdexcept>
#include <string>

#include "coleman/constructors.hpp"

namespace testing {

inline coleman::GroupSpec catalog_spec(const std::string& name) {
  for (auto& e : coleman::standard_catalog(1'000'000)) {
    if (e.name == name) return e.spec;
  }
  throw std::runtime_error("no catalog entry " + name);
}

inline coleman::FiniteGroup catalog_group(const std::string& name) {
  return coleman::build(catalog_spec(name)).group;
}

}  // namespace testing
