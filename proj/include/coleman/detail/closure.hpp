#pragma once

#include <span>
#include <vector>

#include "coleman/finite_group.hpp"

namespace coleman::detail {

/// A subgroup under construction: members in discovery order plus a
/// membership mask over the parent's indices.
struct Closure {
  std::vector<Element> members;
  std::vector<char> mask;

  std::size_t size() const { return members.size(); }
  bool contains(Element e) const { return mask[e] != 0; }
};

Closure trivial_closure(const FiniteGroup& group);
Closure close(const FiniteGroup& group, std::span<const Element> seeds);

/// Extends a subgroup generated by `all_gens` minus `new_gens` so that it is
/// closed under every element of `all_gens`.
void extend_closure(const FiniteGroup& group, Closure& closure,
                    std::span<const Element> all_gens,
                    std::span<const Element> new_gens);

/// Greedy generating sequence for the subgroup with the given members,
/// drawing candidates from `pool` (ascending). Each step takes the candidate
/// that maximizes the generated order, lowest index on ties. Above 1024
/// members the first candidate outside the current subgroup is taken.
std::vector<Element> greedy_generators(const FiniteGroup& group,
                                       std::size_t target_order,
                                       std::span<const Element> pool);

}  // namespace coleman::detail
