#include "coleman/subgroup.hpp"

#include <algorithm>
#include <set>

#include "coleman/detail/closure.hpp"
#include "coleman/error.hpp"
#include "coleman/numeric.hpp"

namespace coleman {

namespace {

std::vector<Element> sorted(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

SubgroupHandle from_closure(const FiniteGroup& group, detail::Closure closure) {
  return SubgroupHandle::trusted(group, sorted(std::move(closure.members)));
}

// Lowest-index-first generating set: cheap, used for internal bookkeeping.
std::vector<Element> first_fit_generators(const FiniteGroup& group,
                                          std::span<const Element> members) {
  std::vector<Element> gens;
  detail::Closure closure = detail::trivial_closure(group);
  for (Element m : members) {
    if (closure.contains(m)) continue;
    gens.push_back(m);
    const Element fresh[] = {m};
    detail::extend_closure(group, closure, gens, fresh);
    if (closure.size() == members.size()) break;
  }
  return gens;
}

}  // namespace

SubgroupHandle::SubgroupHandle(FiniteGroup parent, std::vector<Element> members)
    : SubgroupHandle(Trusted{}, std::move(parent), sorted(std::move(members))) {
  if (members_.empty() || members_.front() != kIdentity) {
    throw GroupError(ErrorKind::NotASubgroup, "subgroup must contain the identity");
  }
  for (Element a : members_) {
    for (Element b : members_) {
      if (!contains(parent_.multiply(a, b))) {
        throw GroupError(ErrorKind::NotASubgroup, "element set is not closed under multiplication");
      }
    }
  }
}

SubgroupHandle::SubgroupHandle(Trusted, FiniteGroup parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_.order(), 0) {
  for (Element m : members_) {
    if (m >= parent_.order()) {
      throw GroupError(ErrorKind::NotASubgroup, "member index out of range");
    }
    mask_[m] = 1;
  }
}

SubgroupHandle SubgroupHandle::trusted(FiniteGroup parent, std::vector<Element> members) {
  return SubgroupHandle(Trusted{}, std::move(parent), sorted(std::move(members)));
}

bool SubgroupHandle::is_subset_of(const SubgroupHandle& other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element m) { return other.contains(m); });
}

bool GroupHom::is_homomorphism() const {
  if (images.size() != source.order() || images[kIdentity] != kIdentity) return false;
  for (Element a = 0; a < source.order(); ++a) {
    for (Element b = 0; b < source.order(); ++b) {
      if (images[source.multiply(a, b)] != target.multiply(images[a], images[b])) return false;
    }
  }
  return true;
}

SubgroupHandle GroupHom::kernel() const {
  std::vector<Element> members;
  for (Element a = 0; a < source.order(); ++a) {
    if (images[a] == kIdentity) members.push_back(a);
  }
  return SubgroupHandle::trusted(source, std::move(members));
}

SubgroupHandle GroupHom::image() const {
  return SubgroupHandle::trusted(target, sorted(images));
}

SubgroupHandle InducedGroup::lift(const SubgroupHandle& local_subgroup,
                                  const FiniteGroup& parent) const {
  std::vector<Element> members;
  members.reserve(local_subgroup.order());
  for (Element m : local_subgroup.members()) members.push_back(embedding[m]);
  return SubgroupHandle::trusted(parent, std::move(members));
}

SubgroupHandle trivial_subgroup(const FiniteGroup& group) {
  return SubgroupHandle::trusted(group, {kIdentity});
}

SubgroupHandle whole_group(const FiniteGroup& group) {
  std::vector<Element> all(group.order());
  for (Element i = 0; i < group.order(); ++i) all[i] = i;
  return SubgroupHandle::trusted(group, std::move(all));
}

SubgroupHandle subgroup_generated(const FiniteGroup& group, std::span<const Element> seeds) {
  for (Element s : seeds) {
    if (s >= group.order()) throw GroupError(ErrorKind::InvalidParams, "seed index out of range");
  }
  return from_closure(group, detail::close(group, seeds));
}

std::vector<Element> generators_of(const SubgroupHandle& subgroup) {
  return first_fit_generators(subgroup.parent(), subgroup.members());
}

SubgroupHandle join(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.is_subset_of(b)) return b;
  if (b.is_subset_of(a)) return a;
  const auto& group = a.parent();
  detail::Closure closure = detail::trivial_closure(group);
  auto gens = generators_of(a);
  detail::extend_closure(group, closure, gens, gens);
  const auto extra = generators_of(b);
  gens.insert(gens.end(), extra.begin(), extra.end());
  detail::extend_closure(group, closure, gens, extra);
  return from_closure(group, std::move(closure));
}

SubgroupHandle intersection(const SubgroupHandle& a, const SubgroupHandle& b) {
  std::vector<Element> members;
  for (Element m : a.members()) {
    if (b.contains(m)) members.push_back(m);
  }
  return SubgroupHandle::trusted(a.parent(), std::move(members));
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& group) {
  return group.conjugacy_classes();
}

SubgroupHandle centralizer(const FiniteGroup& group, std::span<const Element> elements) {
  std::vector<Element> members;
  for (Element g = 0; g < group.order(); ++g) {
    const bool commutes = std::all_of(elements.begin(), elements.end(), [&](Element x) {
      return group.multiply(g, x) == group.multiply(x, g);
    });
    if (commutes) members.push_back(g);
  }
  return SubgroupHandle::trusted(group, std::move(members));
}

SubgroupHandle center(const FiniteGroup& group) {
  auto& cache = group.cache();
  {
    std::lock_guard lock(cache.mutex);
    if (cache.center) return SubgroupHandle::trusted(group, *cache.center);
  }
  const auto& gens = group.generating_sequence();
  auto z = centralizer(group, gens);
  std::lock_guard lock(cache.mutex);
  cache.center = std::vector<Element>(z.members().begin(), z.members().end());
  return z;
}

SubgroupHandle normalizer(const SubgroupHandle& subgroup) {
  const auto& group = subgroup.parent();
  const auto gens = generators_of(subgroup);
  std::vector<Element> members;
  for (Element g = 0; g < group.order(); ++g) {
    const bool normalizes = std::all_of(gens.begin(), gens.end(), [&](Element s) {
      return subgroup.contains(group.conjugate(s, g));
    });
    if (normalizes) members.push_back(g);
  }
  return SubgroupHandle::trusted(group, std::move(members));
}

SubgroupHandle normal_closure(const FiniteGroup& group, std::span<const Element> seeds) {
  std::vector<Element> conjugates;
  std::vector<char> seen(group.order(), 0);
  for (Element s : seeds) {
    for (Element g = 0; g < group.order(); ++g) {
      const Element c = group.conjugate(s, g);
      if (!seen[c]) {
        seen[c] = 1;
        conjugates.push_back(c);
      }
    }
  }
  return subgroup_generated(group, conjugates);
}

SubgroupHandle derived_subgroup(const FiniteGroup& group) {
  const auto& gens = group.generating_sequence();
  std::vector<Element> commutators;
  for (Element a : gens) {
    for (Element b : gens) commutators.push_back(group.commutator(a, b));
  }
  return normal_closure(group, commutators);
}

SubgroupHandle conjugate_subgroup(const SubgroupHandle& subgroup, Element g) {
  const auto& group = subgroup.parent();
  std::vector<Element> members;
  members.reserve(subgroup.order());
  for (Element m : subgroup.members()) members.push_back(group.conjugate(m, g));
  return SubgroupHandle::trusted(group, std::move(members));
}

bool is_normal(const SubgroupHandle& subgroup) {
  const auto& group = subgroup.parent();
  const auto sub_gens = generators_of(subgroup);
  for (Element g : group.generating_sequence()) {
    for (Element s : sub_gens) {
      if (!subgroup.contains(group.conjugate(s, g))) return false;
    }
  }
  return true;
}

SubgroupHandle sylow_subgroup(const FiniteGroup& group, std::uint64_t p) {
  const auto& primes = group.prime_set();
  if (std::find(primes.begin(), primes.end(), p) == primes.end()) {
    throw GroupError(ErrorKind::NotADivisor,
                     std::to_string(p) + " does not divide |G| = " + std::to_string(group.order()));
  }
  auto& cache = group.cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.sylow.find(p); it != cache.sylow.end()) {
      return SubgroupHandle::trusted(group, it->second);
    }
  }
  const std::size_t target = p_part(group.order(), p);
  detail::Closure current = detail::trivial_closure(group);
  std::vector<Element> gens;
  while (current.size() < target) {
    // Lowest-index g in N_G(P) \ P with g^p in P; <P, g> has order p|P|.
    std::optional<Element> chosen;
    for (Element g = 0; g < group.order() && !chosen; ++g) {
      if (current.contains(g)) continue;
      if (!current.contains(group.power(g, static_cast<std::int64_t>(p)))) continue;
      const bool normalizes = std::all_of(gens.begin(), gens.end(), [&](Element s) {
        return current.contains(group.conjugate(s, g));
      });
      if (normalizes) chosen = g;
    }
    if (!chosen) throw std::logic_error("sylow_subgroup: no extension found");
    gens.push_back(*chosen);
    const Element fresh[] = {*chosen};
    detail::extend_closure(group, current, gens, fresh);
  }
  auto members = sorted(std::move(current.members));
  {
    std::lock_guard lock(cache.mutex);
    cache.sylow.emplace(p, members);
  }
  return SubgroupHandle::trusted(group, std::move(members));
}

std::vector<SubgroupHandle> all_sylow_subgroups(const FiniteGroup& group, std::uint64_t p) {
  const auto canonical = sylow_subgroup(group, p);
  std::set<std::vector<Element>> seen;
  for (Element g = 0; g < group.order(); ++g) {
    const auto conj = conjugate_subgroup(canonical, g);
    seen.emplace(conj.members().begin(), conj.members().end());
  }
  std::vector<SubgroupHandle> result;
  result.reserve(seen.size());
  for (const auto& members : seen) result.push_back(SubgroupHandle::trusted(group, members));
  return result;
}

Element p_part_of(const FiniteGroup& group, Element x, std::uint64_t p) {
  const std::uint64_t ord = group.element_order(x);
  const std::uint64_t pa = p_part(ord, p);
  if (pa == 1) return kIdentity;
  const std::uint64_t m = ord / pa;
  const std::uint64_t inv = pa == 1 ? 0 : mod_inverse(static_cast<std::int64_t>(m % pa),
                                                       static_cast<std::int64_t>(pa));
  const std::uint64_t exponent = (m * inv) % ord;
  return group.power(x, static_cast<std::int64_t>(exponent));
}

PrimaryDecomposition primary_decomposition(const FiniteGroup& group, Element x) {
  PrimaryDecomposition result{x, {}};
  for (const auto& [p, e] : factorize(group.element_order(x))) {
    result.parts.emplace(p, p_part_of(group, x, p));
  }
  return result;
}

QuotientResult quotient_group(const SubgroupHandle& normal) {
  if (!is_normal(normal)) throw GroupError(ErrorKind::NotNormal, "subgroup is not normal");
  const auto& group = normal.parent();
  const std::size_t n = group.order();
  std::vector<Element> coset_of(n, UINT32_MAX);
  std::vector<Element> reps;
  for (Element g = 0; g < n; ++g) {
    if (coset_of[g] != UINT32_MAX) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(g);
    for (Element m : normal.members()) coset_of[group.multiply(g, m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      table[a * q + b] = coset_of[group.multiply(reps[a], reps[b])];
    }
  }
  std::vector<std::string> labels;
  if (group.has_labels()) {
    for (Element r : reps) labels.push_back("[" + group.label(r) + "]");
  }
  auto quotient = FiniteGroup::from_table(q, std::move(table), std::move(labels));
  return QuotientResult{quotient, GroupHom{group, quotient, std::move(coset_of)}, std::move(reps)};
}

InducedGroup induced_group(const SubgroupHandle& subgroup) {
  const auto& parent = subgroup.parent();
  const std::size_t n = subgroup.order();
  std::vector<Element> embedding(subgroup.members().begin(), subgroup.members().end());
  std::vector<std::uint32_t> local(parent.order(), UINT32_MAX);
  for (std::size_t i = 0; i < n; ++i) local[embedding[i]] = static_cast<std::uint32_t>(i);
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = local[parent.multiply(embedding[a], embedding[b])];
    }
  }
  std::vector<std::string> labels;
  if (parent.has_labels()) {
    for (Element e : embedding) labels.push_back(parent.label(e));
  }
  return InducedGroup{FiniteGroup::from_table(n, std::move(table), std::move(labels)),
                      std::move(embedding), std::move(local)};
}

}  // namespace coleman
