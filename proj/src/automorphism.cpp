#include "coleman/automorphism.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "coleman/abelian.hpp"
#include "coleman/detail/closure.hpp"
#include "coleman/detail/hash.hpp"
#include "coleman/error.hpp"
#include "coleman/isomorphism.hpp"
#include "coleman/normal.hpp"
#include "coleman/numeric.hpp"

namespace coleman {

Automorphism::Automorphism(FiniteGroup group, std::vector<Element> images)
    : group_(std::move(group)), images_(std::move(images)) {}

Automorphism Automorphism::identity(const FiniteGroup& group) {
  std::vector<Element> images(group.order());
  for (Element x = 0; x < group.order(); ++x) images[x] = x;
  return Automorphism(group, std::move(images));
}

Automorphism Automorphism::conjugation(const FiniteGroup& group, Element g) {
  std::vector<Element> images(group.order());
  for (Element x = 0; x < group.order(); ++x) images[x] = group.conjugate(x, g);
  return Automorphism(group, std::move(images));
}

bool Automorphism::is_identity() const {
  for (Element x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Automorphism Automorphism::inverse() const {
  std::vector<Element> inv(images_.size());
  for (Element x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  return Automorphism(group_, std::move(inv));
}

std::size_t Automorphism::order() const {
  std::size_t k = 1;
  Automorphism cur = *this;
  while (!cur.is_identity()) {
    cur = compose(cur, *this);
    ++k;
  }
  return k;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  std::vector<Element> images(b.images().size());
  for (Element x = 0; x < images.size(); ++x) images[x] = a(b(x));
  return Automorphism(a.group(), std::move(images));
}

bool is_automorphism(const FiniteGroup& group, std::span<const Element> images) {
  const std::size_t n = group.order();
  if (images.size() != n || images[kIdentity] != kIdentity) return false;
  std::vector<char> hit(n, 0);
  for (Element e : images) {
    if (e >= n || hit[e]) return false;
    hit[e] = 1;
  }
  // A bijection respecting multiplication by a generating set on the right
  // is a homomorphism: check a*g for every a and generator g.
  for (Element g : group.generating_sequence()) {
    for (Element a = 0; a < n; ++a) {
      if (images[group.multiply(a, g)] != group.multiply(images[a], images[g])) return false;
    }
  }
  return true;
}

Automorphism make_automorphism(const FiniteGroup& group, std::vector<Element> images) {
  if (!is_automorphism(group, images)) {
    throw GroupError(ErrorKind::NotAnAutomorphism, "map is not a bijective homomorphism");
  }
  return Automorphism(group, std::move(images));
}

namespace {

void require_cap(const FiniteGroup& group, const Limits& limits) {
  if (group.order() > limits.automorphism) {
    throw GroupError(ErrorKind::OrderCapExceeded,
                     "automorphism search on order " + std::to_string(group.order()) +
                         " exceeds cap " + std::to_string(limits.automorphism));
  }
}

std::vector<Automorphism> run_search(const FiniteGroup& group, std::vector<Element> generators,
                                     std::vector<std::vector<Element>> candidates,
                                     const std::function<bool(const Automorphism&)>& keep) {
  HomSearchProblem problem{group, group, std::move(generators), std::move(candidates), true};
  std::vector<Automorphism> found;
  search_homomorphisms(problem, [&](const std::vector<Element>& images) {
    Automorphism sigma(group, images);
    if (!keep || keep(sigma)) found.push_back(std::move(sigma));
    return true;
  });
  std::sort(found.begin(), found.end());
  return found;
}

// Sylow generators per prime, shared by all Coleman checks on one group.
class ColemanTester {
 public:
  explicit ColemanTester(const FiniteGroup& group) : group_(group) {
    for (std::uint64_t p : group.prime_set()) {
      sylow_gens_.emplace_back(p, generators_of(sylow_subgroup(group, p)));
    }
  }

  ColemanCheck check(const Automorphism& sigma) const {
    ColemanCheck result;
    for (const auto& [p, gens] : sylow_gens_) {
      auto g = witness(sigma, gens);
      if (!g) {
        result.coleman = false;
        result.failing_prime = p;
        return result;
      }
      result.witnesses[p] = *g;
    }
    return result;
  }

  std::optional<Element> witness(const Automorphism& sigma, std::span<const Element> gens) const {
    for (Element g = 0; g < group_.order(); ++g) {
      bool ok = true;
      for (Element s : gens) {
        if (sigma(s) != group_.conjugate(s, g)) {
          ok = false;
          break;
        }
      }
      if (ok) return g;
    }
    return std::nullopt;
  }

 private:
  FiniteGroup group_;
  std::vector<std::pair<std::uint64_t, std::vector<Element>>> sylow_gens_;
};

std::vector<Element> class_of(const FiniteGroup& group, Element x) {
  return group.conjugacy_classes()[group.class_index(x)];
}

// Generators of prime-power order together with their classes as candidates.
std::pair<std::vector<Element>, std::vector<std::vector<Element>>> coleman_search_space(
    const FiniteGroup& group) {
  std::vector<Element> pool;
  for (Element x = 1; x < group.order(); ++x) {
    if (prime_of_prime_power(group.element_order(x))) pool.push_back(x);
  }
  auto gens = detail::greedy_generators(group, group.order(), pool);
  std::vector<std::vector<Element>> cands;
  for (Element g : gens) cands.push_back(class_of(group, g));
  return {std::move(gens), std::move(cands)};
}

}  // namespace

std::vector<Automorphism> automorphism_group(const FiniteGroup& group, const Limits& limits) {
  require_cap(group, limits);
  const auto prints = element_fingerprints(group);
  std::vector<Element> gens = group.generating_sequence();
  std::vector<std::vector<Element>> cands;
  for (Element g : gens) {
    std::vector<Element> c;
    for (Element y = 0; y < group.order(); ++y) {
      if (prints[y] == prints[g]) c.push_back(y);
    }
    cands.push_back(std::move(c));
  }
  return run_search(group, std::move(gens), std::move(cands), {});
}

std::vector<Automorphism> inner_automorphisms(const FiniteGroup& group) {
  std::vector<Automorphism> out;
  std::unordered_set<std::vector<Element>, detail::ElementVectorHash> seen;
  const auto z = center(group);
  for (Element g = 0; g < group.order(); ++g) {
    auto a = Automorphism::conjugation(group, g);
    if (seen.insert(a.images()).second) out.push_back(std::move(a));
    if (out.size() * z.order() == group.order()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Element> inner_witness(const Automorphism& sigma) {
  const auto& gens = sigma.group().generating_sequence();
  const auto& group = sigma.group();
  for (Element g = 0; g < group.order(); ++g) {
    bool ok = true;
    for (Element s : gens) {
      if (sigma(s) != group.conjugate(s, g)) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return std::nullopt;
}

bool is_inner(const Automorphism& sigma) { return inner_witness(sigma).has_value(); }

bool is_class_preserving(const Automorphism& sigma) {
  const auto& group = sigma.group();
  for (Element x = 0; x < group.order(); ++x) {
    if (group.class_index(sigma(x)) != group.class_index(x)) return false;
  }
  return true;
}

std::optional<Element> conjugation_witness(const Automorphism& sigma,
                                           const SubgroupHandle& subgroup) {
  const auto gens = generators_of(subgroup);
  const auto& group = sigma.group();
  for (Element g = 0; g < group.order(); ++g) {
    bool ok = true;
    for (Element s : gens) {
      if (sigma(s) != group.conjugate(s, g)) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return std::nullopt;
}

ColemanCheck coleman_check(const Automorphism& sigma) {
  return ColemanTester(sigma.group()).check(sigma);
}

bool is_coleman(const Automorphism& sigma) { return coleman_check(sigma).coleman; }

bool is_p_central(const Automorphism& sigma, std::uint64_t p) {
  for (const auto& sylow : all_sylow_subgroups(sigma.group(), p)) {
    bool fixed = true;
    for (Element x : sylow.members()) {
      if (sigma(x) != x) {
        fixed = false;
        break;
      }
    }
    if (fixed) return true;
  }
  return false;
}

AutomorphismFlags classify_automorphism(const Automorphism& sigma) {
  AutomorphismFlags flags;
  flags.inner_witness = inner_witness(sigma);
  flags.class_preserving = is_class_preserving(sigma);
  flags.coleman = coleman_check(sigma);
  for (std::uint64_t p : sigma.group().prime_set()) {
    if (is_p_central(sigma, p)) flags.p_central_primes.push_back(p);
  }
  return flags;
}

std::vector<Automorphism> aut_col(const FiniteGroup& group, const Limits& limits) {
  require_cap(group, limits);
  if (group.order() == 1) return {Automorphism::identity(group)};
  auto [gens, cands] = coleman_search_space(group);
  const ColemanTester tester(group);
  return run_search(group, std::move(gens), std::move(cands),
                    [&](const Automorphism& s) { return tester.check(s).coleman; });
}

std::vector<Automorphism> aut_c(const FiniteGroup& group, const Limits& limits) {
  require_cap(group, limits);
  std::vector<Element> gens = group.generating_sequence();
  std::vector<std::vector<Element>> cands;
  for (Element g : gens) cands.push_back(class_of(group, g));
  return run_search(group, std::move(gens), std::move(cands),
                    [](const Automorphism& s) { return is_class_preserving(s); });
}

std::vector<Automorphism> aut_c_cap_col(const FiniteGroup& group, const Limits& limits) {
  require_cap(group, limits);
  if (group.order() == 1) return {Automorphism::identity(group)};
  auto [gens, cands] = coleman_search_space(group);
  const ColemanTester tester(group);
  return run_search(group, std::move(gens), std::move(cands), [&](const Automorphism& s) {
    return is_class_preserving(s) && tester.check(s).coleman;
  });
}

OuterQuotient outer_quotient(std::vector<Automorphism> ambient) {
  if (ambient.empty()) throw std::invalid_argument("outer_quotient: empty ambient set");
  std::sort(ambient.begin(), ambient.end());
  const FiniteGroup group = ambient.front().group();
  std::unordered_map<std::vector<Element>, std::size_t, detail::ElementVectorHash> index;
  for (std::size_t i = 0; i < ambient.size(); ++i) index.emplace(ambient[i].images(), i);
  auto lookup = [&](const Automorphism& a) {
    auto it = index.find(a.images());
    if (it == index.end()) {
      throw std::logic_error("outer_quotient: ambient set is not a group containing Inn(G)");
    }
    return it->second;
  };

  const auto inner = inner_automorphisms(group);
  OuterQuotient result;
  constexpr std::size_t kUnassigned = SIZE_MAX;
  result.coset_of.assign(ambient.size(), kUnassigned);
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    if (result.coset_of[i] != kUnassigned) continue;
    const std::size_t coset = result.representatives.size();
    result.representatives.push_back(ambient[i]);
    for (const auto& iota : inner) result.coset_of[lookup(compose(ambient[i], iota))] = coset;
  }
  const std::size_t m = result.representatives.size();
  if (m * inner.size() != ambient.size()) {
    throw std::logic_error("outer_quotient: cosets do not partition the ambient set");
  }
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto prod = compose(result.representatives[a], result.representatives[b]);
      table[a * m + b] = static_cast<Element>(result.coset_of[lookup(prod)]);
    }
  }
  result.group = FiniteGroup::from_table(m, std::move(table));
  if (is_abelian(result.group)) result.abelian_invariants = abelian_invariants(result.group);
  result.ambient = std::move(ambient);
  return result;
}

OuterQuotient out_col(const FiniteGroup& group, const Limits& limits) {
  return outer_quotient(aut_col(group, limits));
}

OuterQuotient out_c(const FiniteGroup& group, const Limits& limits) {
  return outer_quotient(aut_c(group, limits));
}

OuterQuotient out_c_cap_out_col(const FiniteGroup& group, const Limits& limits) {
  return outer_quotient(aut_c_cap_col(group, limits));
}

OuterQuotient out(const FiniteGroup& group, const Limits& limits) {
  return outer_quotient(automorphism_group(group, limits));
}

FiniteGroup automorphisms_as_group(const std::vector<Automorphism>& auts) {
  const std::size_t m = auts.size();
  std::unordered_map<std::vector<Element>, Element, detail::ElementVectorHash> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(auts[i].images(), static_cast<Element>(i));
  if (m == 0 || !auts[0].is_identity()) {
    throw std::invalid_argument("automorphisms_as_group: identity must come first");
  }
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto it = index.find(compose(auts[a], auts[b]).images());
      if (it == index.end()) throw std::invalid_argument("automorphisms_as_group: set not closed");
      table[a * m + b] = it->second;
    }
  }
  return FiniteGroup::from_table(m, std::move(table));
}

SubgroupHandle image_of(const Automorphism& sigma, const SubgroupHandle& subgroup) {
  std::vector<Element> members;
  for (Element x : subgroup.members()) members.push_back(sigma(x));
  std::sort(members.begin(), members.end());
  return SubgroupHandle::trusted(subgroup.parent(), std::move(members));
}

bool is_invariant(const SubgroupHandle& subgroup, std::span<const Automorphism> auts) {
  const auto gens = generators_of(subgroup);
  for (const auto& sigma : auts) {
    for (Element g : gens) {
      if (!subgroup.contains(sigma(g))) return false;
    }
  }
  return true;
}

std::vector<SubgroupHandle> characteristic_subgroups(const FiniteGroup& group,
                                                     std::span<const Automorphism> auts,
                                                     const Limits& limits) {
  std::vector<SubgroupHandle> out;
  for (const auto& n : normal_subgroups(group, limits)) {
    if (is_invariant(n, auts)) out.push_back(n);
  }
  return out;
}

std::vector<SubgroupHandle> minimal_characteristic_subgroups(const FiniteGroup& group,
                                                             std::span<const Automorphism> auts,
                                                             const Limits& limits) {
  const auto chars = characteristic_subgroups(group, auts, limits);
  std::vector<SubgroupHandle> out;
  for (const auto& c : chars) {
    if (c.is_trivial()) continue;
    bool minimal = true;
    for (const auto& d : chars) {
      if (!d.is_trivial() && d.order() < c.order() && d.is_subset_of(c)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

}  // namespace coleman
