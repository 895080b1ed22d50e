#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coleman/subgroup.hpp"

namespace coleman {

/// Every normal subgroup, ordered by (order, members). Found as normal
/// closures of single classes, then closed under joins. Throws
/// OrderCapExceeded above Limits::subgroup_search.
std::vector<SubgroupHandle> normal_subgroups(const FiniteGroup& group,
                                             const Limits& limits = Limits::defaults());

std::vector<SubgroupHandle> minimal_normal_subgroups(const FiniteGroup& group,
                                                     const Limits& limits = Limits::defaults());

/// One chief series 1 = M_0 < M_1 < ... < M_r = G through the normal lattice.
std::vector<SubgroupHandle> chief_series(const FiniteGroup& group,
                                         const Limits& limits = Limits::defaults());

struct CoreSubgroups {
  SubgroupHandle o_p;
  SubgroupHandle o_p_prime;
  SubgroupHandle fitting;
};

/// O_p, O_p' and F(G). Primes not dividing |G| give O_p = 1, O_p' = G.
CoreSubgroups core_subgroups(const FiniteGroup& group, std::uint64_t p,
                             const Limits& limits = Limits::defaults());
SubgroupHandle fitting_subgroup(const FiniteGroup& group, const Limits& limits = Limits::defaults());

/// E(G): the product of the subnormal quasisimple subgroups.
SubgroupHandle layer(const FiniteGroup& group, const Limits& limits = Limits::defaults());

/// Components (subnormal quasisimple subgroups), sorted by members.
std::vector<SubgroupHandle> components(const FiniteGroup& group,
                                       const Limits& limits = Limits::defaults());

bool is_abelian(const FiniteGroup& group);
bool is_nilpotent(const FiniteGroup& group);
bool is_perfect(const FiniteGroup& group);
bool is_simple(const FiniteGroup& group, const Limits& limits = Limits::defaults());
bool is_quasisimple(const FiniteGroup& group, const Limits& limits = Limits::defaults());
bool is_p_group(const FiniteGroup& group, std::uint64_t p);

struct GroupFlags {
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_simple = false;
  /// The prime when |G| is a non-trivial prime power.
  std::optional<std::uint64_t> p_group_prime;

  bool is_p_group(std::uint64_t p) const { return !p_group_prime || *p_group_prime == p; }
};

GroupFlags classify(const FiniteGroup& group, const Limits& limits = Limits::defaults());

/// Subgroup handles are groups in their own right; these apply the
/// predicates above to the induced group.
bool is_nilpotent(const SubgroupHandle& subgroup);
bool is_abelian(const SubgroupHandle& subgroup);

}  // namespace coleman
