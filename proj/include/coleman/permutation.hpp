#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coleman/finite_group.hpp"

namespace coleman {

/// Image list: point i maps to perm[i].
using Permutation = std::vector<std::uint32_t>;

/// Products read left to right: (a*b)(i) = b(a(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation invert(const Permutation& a);
std::string cycle_notation(const Permutation& p);

/// A permutation group closure together with the permutation behind every
/// element index.
struct PermutationClosure {
  FiniteGroup group;
  std::vector<Permutation> elements;
  std::vector<Element> generator_indices;  // index of each input generator
};

/// Closure of the generators, indexed in BFS discovery order from the
/// identity with generators applied (on the right) in input order.
PermutationClosure permutation_closure(std::size_t degree,
                                       std::span<const Permutation> generators,
                                       const Limits& limits = Limits::defaults());

FiniteGroup group_from_permutations(std::size_t degree,
                                    std::span<const Permutation> generators,
                                    const Limits& limits = Limits::defaults());

/// Order of the generated group, without building its multiplication.
std::size_t permutation_group_order(std::size_t degree,
                                    std::span<const Permutation> generators,
                                    const Limits& limits = Limits::defaults());

}  // namespace coleman
