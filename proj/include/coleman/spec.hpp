#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "coleman/permutation.hpp"

namespace coleman {

struct GroupSpec;

namespace spec {

struct Perm {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};
struct Cyclic {
  std::uint64_t n = 1;
};
struct Abelian {
  std::vector<std::uint64_t> invariants;
};
struct Symmetric {
  std::uint64_t n = 1;
};
struct Alternating {
  std::uint64_t n = 1;
};
/// n is the total order.
struct Dihedral {
  std::uint64_t n = 2;
};
struct Direct {
  std::vector<GroupSpec> factors;
};
/// action[j] lists the images (as base element indices) of the base
/// generators under the j-th acting generator.
struct Semidirect {
  std::shared_ptr<const GroupSpec> base;
  std::shared_ptr<const GroupSpec> acting;
  std::vector<std::vector<std::uint32_t>> action;
};
struct Wreath {
  std::shared_ptr<const GroupSpec> base;
  std::shared_ptr<const GroupSpec> top;
};
struct Holomorph {
  std::shared_ptr<const GroupSpec> base;
};

}  // namespace spec

/// A serializable construction recipe.
struct GroupSpec {
  using Node = std::variant<spec::Perm, spec::Cyclic, spec::Abelian, spec::Symmetric,
                            spec::Alternating, spec::Dihedral, spec::Direct, spec::Semidirect,
                            spec::Wreath, spec::Holomorph>;
  Node node;

  std::string construct() const;

  static GroupSpec perm(std::size_t degree, std::vector<Permutation> generators);
  static GroupSpec cyclic(std::uint64_t n);
  static GroupSpec abelian(std::vector<std::uint64_t> invariants);
  static GroupSpec symmetric(std::uint64_t n);
  static GroupSpec alternating(std::uint64_t n);
  static GroupSpec dihedral(std::uint64_t n);
  static GroupSpec direct(std::vector<GroupSpec> factors);
  static GroupSpec semidirect(GroupSpec base, GroupSpec acting,
                              std::vector<std::vector<std::uint32_t>> action);
  static GroupSpec wreath(GroupSpec base, GroupSpec top);
  static GroupSpec holomorph(GroupSpec base);
};

nlohmann::json spec_to_json(const GroupSpec& spec);
/// Throws GroupError(InvalidSpec) on malformed input.
GroupSpec spec_from_json(const nlohmann::json& j);
GroupSpec load_spec(const std::string& path);

}  // namespace coleman
