#include "coleman/normal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coleman/error.hpp"
#include "coleman/numeric.hpp"

namespace coleman {

namespace {

bool members_less(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                      b.members().begin(), b.members().end());
}

// Product of two normal subgroups.
SubgroupHandle normal_product(const SubgroupHandle& a, const SubgroupHandle& b) {
  return join(a, b);
}

}  // namespace

std::vector<SubgroupHandle> normal_subgroups(const FiniteGroup& group, const Limits& limits) {
  if (group.order() > limits.subgroup_search) {
    throw GroupError(ErrorKind::OrderCapExceeded,
                     "normal subgroup search on order " + std::to_string(group.order()) +
                         " exceeds cap " + std::to_string(limits.subgroup_search));
  }
  auto& cache = group.cache();
  {
    std::lock_guard lock(cache.mutex);
    if (cache.normal_subgroups) {
      std::vector<SubgroupHandle> out;
      for (const auto& m : *cache.normal_subgroups) out.push_back(SubgroupHandle::trusted(group, m));
      return out;
    }
  }

  std::set<std::vector<Element>> seen;
  std::vector<SubgroupHandle> found;
  auto add = [&](SubgroupHandle h) {
    std::vector<Element> key(h.members().begin(), h.members().end());
    if (seen.insert(std::move(key)).second) {
      found.push_back(std::move(h));
      return true;
    }
    return false;
  };
  add(trivial_subgroup(group));
  for (const auto& cls : group.conjugacy_classes()) {
    if (cls.front() == kIdentity) continue;
    add(subgroup_generated(group, cls));
  }
  // Close under products; every normal subgroup is a product of class closures.
  const std::size_t minimal_count = found.size();
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 1; j < minimal_count; ++j) {
      add(normal_product(found[i], found[j]));
    }
  }
  std::sort(found.begin(), found.end(), members_less);

  std::lock_guard lock(cache.mutex);
  std::vector<std::vector<Element>> stored;
  for (const auto& h : found) stored.emplace_back(h.members().begin(), h.members().end());
  cache.normal_subgroups = std::move(stored);
  return found;
}

std::vector<SubgroupHandle> minimal_normal_subgroups(const FiniteGroup& group,
                                                     const Limits& limits) {
  const auto all = normal_subgroups(group, limits);
  std::vector<SubgroupHandle> minimal;
  for (const auto& n : all) {
    if (n.is_trivial()) continue;
    const bool has_smaller = std::any_of(all.begin(), all.end(), [&](const SubgroupHandle& m) {
      return !m.is_trivial() && m.order() < n.order() && m.is_subset_of(n);
    });
    if (!has_smaller) minimal.push_back(n);
  }
  return minimal;
}

std::vector<SubgroupHandle> chief_series(const FiniteGroup& group, const Limits& limits) {
  const auto all = normal_subgroups(group, limits);  // sorted by order
  std::vector<SubgroupHandle> series{all.front()};
  while (!series.back().is_whole()) {
    const auto& current = series.back();
    // The first strictly larger normal subgroup containing current is minimal
    // over it, since the list is sorted by order.
    for (const auto& n : all) {
      if (n.order() > current.order() && current.is_subset_of(n)) {
        series.push_back(n);
        break;
      }
    }
  }
  return series;
}

CoreSubgroups core_subgroups(const FiniteGroup& group, std::uint64_t p, const Limits& limits) {
  const auto all = normal_subgroups(group, limits);
  const SubgroupHandle* o_p = &all.front();
  const SubgroupHandle* o_p_prime = &all.front();
  for (const auto& n : all) {
    if (prime_power_exponent(n.order(), p) && n.order() > o_p->order()) o_p = &n;
    if (n.order() % p != 0 && n.order() > o_p_prime->order()) o_p_prime = &n;
  }
  return CoreSubgroups{*o_p, *o_p_prime, fitting_subgroup(group, limits)};
}

SubgroupHandle fitting_subgroup(const FiniteGroup& group, const Limits& limits) {
  const auto all = normal_subgroups(group, limits);
  SubgroupHandle fitting = trivial_subgroup(group);
  for (std::uint64_t q : group.prime_set()) {
    const SubgroupHandle* o_q = &all.front();
    for (const auto& n : all) {
      if (prime_power_exponent(n.order(), q) && n.order() > o_q->order()) o_q = &n;
    }
    fitting = join(fitting, *o_q);
  }
  return fitting;
}

bool is_abelian(const FiniteGroup& group) {
  const auto& gens = group.generating_sequence();
  for (Element a : gens) {
    for (Element b : gens) {
      if (group.multiply(a, b) != group.multiply(b, a)) return false;
    }
  }
  return true;
}

bool is_nilpotent(const FiniteGroup& group) {
  for (std::uint64_t p : group.prime_set()) {
    if (!is_normal(sylow_subgroup(group, p))) return false;
  }
  return true;
}

bool is_perfect(const FiniteGroup& group) { return derived_subgroup(group).is_whole(); }

bool is_simple(const FiniteGroup& group, const Limits& limits) {
  if (group.order() == 1) return false;
  if (is_prime(group.order())) return true;
  return normal_subgroups(group, limits).size() == 2;
}

bool is_quasisimple(const FiniteGroup& group, const Limits& limits) {
  if (group.order() == 1 || !is_perfect(group)) return false;
  const auto z = center(group);
  return is_simple(quotient_group(z).quotient, limits);
}

bool is_p_group(const FiniteGroup& group, std::uint64_t p) {
  return prime_power_exponent(group.order(), p).has_value();
}

GroupFlags classify(const FiniteGroup& group, const Limits& limits) {
  GroupFlags flags;
  flags.is_abelian = is_abelian(group);
  flags.is_nilpotent = flags.is_abelian || is_nilpotent(group);
  flags.is_simple = is_simple(group, limits);
  if (group.order() > 1) flags.p_group_prime = prime_of_prime_power(group.order());
  return flags;
}

bool is_nilpotent(const SubgroupHandle& subgroup) {
  return is_nilpotent(induced_group(subgroup).group);
}

bool is_abelian(const SubgroupHandle& subgroup) {
  const auto& g = subgroup.parent();
  const auto gens = generators_of(subgroup);
  for (Element a : gens) {
    for (Element b : gens) {
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
    }
  }
  return true;
}

namespace {

// Components of the subgroup `h` (members in the ambient group), memoized
// by member list. A component of H other than H itself lies in a maximal
// normal subgroup of H, so recursion through maximal normal subgroups finds
// them all.
void collect_components(const SubgroupHandle& h, const Limits& limits,
                        std::map<std::vector<Element>, bool>& visited,
                        std::set<std::vector<Element>>& out) {
  std::vector<Element> key(h.members().begin(), h.members().end());
  if (!visited.emplace(key, true).second) return;
  if (h.is_trivial()) return;
  const auto induced = induced_group(h);
  if (is_quasisimple(induced.group, limits)) {
    out.insert(std::move(key));
    return;
  }
  const auto normals = normal_subgroups(induced.group, limits);
  for (const auto& m : normals) {
    if (m.is_whole() || m.is_trivial()) continue;
    const bool maximal = std::none_of(normals.begin(), normals.end(), [&](const SubgroupHandle& k) {
      return !k.is_whole() && k.order() > m.order() && m.is_subset_of(k);
    });
    if (!maximal) continue;
    collect_components(induced.lift(m, h.parent()), limits, visited, out);
  }
}

}  // namespace

std::vector<SubgroupHandle> components(const FiniteGroup& group, const Limits& limits) {
  if (group.order() > limits.subgroup_search) {
    throw GroupError(ErrorKind::OrderCapExceeded, "layer search exceeds subgroup-search cap");
  }
  std::map<std::vector<Element>, bool> visited;
  std::set<std::vector<Element>> found;
  collect_components(whole_group(group), limits, visited, found);
  std::vector<SubgroupHandle> out;
  for (const auto& m : found) out.push_back(SubgroupHandle::trusted(group, m));
  return out;
}

SubgroupHandle layer(const FiniteGroup& group, const Limits& limits) {
  SubgroupHandle result = trivial_subgroup(group);
  for (const auto& c : components(group, limits)) result = join(result, c);
  return result;
}

}  // namespace coleman
