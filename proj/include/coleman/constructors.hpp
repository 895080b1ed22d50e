#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coleman/spec.hpp"
#include "coleman/subgroup.hpp"

namespace coleman {

struct BuiltGroup {
  FiniteGroup group;
  /// Canonical generators; semidirect action lists refer to these.
  std::vector<Element> generators;
  /// Set for semidirect, wreath and holomorph builds.
  std::optional<SubgroupHandle> base;
  std::optional<SubgroupHandle> acting;
  /// Direct products: factor i element e -> group element. Wreath products:
  /// coordinate k (an element index of the top group) of the base power.
  std::vector<std::vector<Element>> coordinate_embeddings;
};

/// Throws InvalidSpec, InvalidAction, InvalidPermutation, OrderCapExceeded.
BuiltGroup build(const GroupSpec& spec, const Limits& limits = Limits::defaults());

/// Direct product of already built groups, first factor varying fastest.
FiniteGroup direct_product(const std::vector<FiniteGroup>& factors,
                           const Limits& limits = Limits::defaults());

/// Order of the group the spec describes. Avoids building where the order
/// follows arithmetically; saturates at UINT64_MAX.
std::uint64_t spec_order(const GroupSpec& spec, const Limits& limits = Limits::defaults());

struct CatalogEntry {
  std::string name;
  GroupSpec spec;
  std::uint64_t order;
};

/// Regression corpus, in a fixed order, restricted to order <= max_order.
std::vector<CatalogEntry> standard_catalog(std::uint64_t max_order);

/// The quaternion group of order 8 as a regular permutation group.
GroupSpec quaternion_spec();

}  // namespace coleman
