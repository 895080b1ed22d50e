#include "coleman/coleman_structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "coleman/abelian.hpp"
#include "coleman/detail/hash.hpp"
#include "coleman/error.hpp"
#include "coleman/normal.hpp"
#include "coleman/numeric.hpp"

namespace coleman {

std::uint64_t NilpotentByCyclicPresentation::quotient_order() const { return ipow(p, n); }

namespace {

bool agrees_with_conjugation(const FiniteGroup& g, std::span<const Element> gens, Element a,
                             Element b) {
  for (Element s : gens) {
    if (g.conjugate(s, a) != g.conjugate(s, b)) return false;
  }
  return true;
}

SubgroupHandle elements_of_prime_power_order(const SubgroupHandle& nilpotent, std::uint64_t q) {
  const auto& g = nilpotent.parent();
  std::vector<Element> members;
  for (Element a : nilpotent.members()) {
    const auto ord = g.element_order(a);
    if (ord == 1 || prime_of_prime_power(ord) == q) members.push_back(a);
  }
  return SubgroupHandle::trusted(g, std::move(members));
}

}  // namespace

NilpotentByCyclicPresentation presentation_from(const SubgroupHandle& normal) {
  const FiniteGroup& g = normal.parent();
  if (!is_normal(normal)) throw GroupError(ErrorKind::NotNormal, "N is not normal in G");
  if (!is_nilpotent(normal)) throw GroupError(ErrorKind::NotNilpotent, "N is not nilpotent");
  const auto quotient = quotient_group(normal);
  const std::size_t qn = quotient.quotient.order();
  const auto p = prime_of_prime_power(qn);
  if (qn == 1 || !p) {
    throw GroupError(ErrorKind::QuotientNotCyclicPrimePower,
                     "G/N has order " + std::to_string(qn) + ", not a non-trivial prime power");
  }
  std::optional<Element> generator;
  for (Element q = 0; q < qn; ++q) {
    if (quotient.quotient.element_order(q) == qn) {
      generator = q;
      break;
    }
  }
  if (!generator) {
    throw GroupError(ErrorKind::QuotientNotCyclicPrimePower, "G/N is not cyclic");
  }

  NilpotentByCyclicPresentation pres{g, normal, kIdentity, *p,
                                     *prime_power_exponent(qn, *p), {}, {}, {}, {}, {}};
  pres.x = p_part_of(g, quotient.representatives[*generator], *p);
  const std::size_t ord_x = g.element_order(pres.x);

  struct Entry {
    SubgroupHandle sylow;
    std::uint64_t prime;
    std::uint64_t r;
    Element h;
  };
  std::vector<Entry> entries;
  for (std::uint64_t q : prime_divisors(normal.order())) {
    auto sylow = elements_of_prime_power_order(normal, q);
    const auto gens = generators_of(sylow);
    std::optional<Entry> found;
    Element xr = kIdentity;
    for (std::uint64_t r = 1; r <= ord_x && !found; ++r) {
      xr = g.multiply(xr, pres.x);
      for (Element h : sylow.members()) {
        if (agrees_with_conjugation(g, gens, xr, h)) {
          found = Entry{sylow, q, r, h};
          break;
        }
      }
    }
    entries.push_back(std::move(*found));
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.r != b.r) return a.r < b.r;
    if (a.sylow.order() != b.sylow.order()) return a.sylow.order() < b.sylow.order();
    return a.sylow.members()[1] < b.sylow.members()[1];
  });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].prime == *p) pres.p_position = i;
    pres.sylows.push_back(entries[i].sylow);
    pres.sylow_primes.push_back(entries[i].prime);
    pres.r.push_back(entries[i].r);
    pres.h.push_back(entries[i].h);
  }
  return pres;
}

namespace {

struct TwistContext {
  Element x_pn;
  std::vector<Element> x_powers;  // x^1 .. x^ord(x)
  SubgroupHandle centralizer_of_normal;
};

TwistContext twist_context(const NilpotentByCyclicPresentation& pres) {
  const auto& g = pres.group;
  TwistContext ctx{g.power(pres.x, static_cast<std::int64_t>(pres.quotient_order())), {},
                   centralizer(g, generators_of(pres.normal))};
  Element cur = kIdentity;
  for (std::size_t t = 0; t < g.element_order(pres.x); ++t) {
    cur = g.multiply(cur, pres.x);
    ctx.x_powers.push_back(cur);
  }
  return ctx;
}

bool admissible(const FiniteGroup& g, const TwistContext& ctx, Element w) {
  if (g.commutator(ctx.x_pn, w) != kIdentity) return false;
  const Element w_inv = g.inverse(w);
  for (Element xt : ctx.x_powers) {
    if (!ctx.centralizer_of_normal.contains(g.commutator(xt, w_inv))) return false;
  }
  return true;
}

}  // namespace

bool twist_admissible(const NilpotentByCyclicPresentation& pres, std::size_t i, Element w) {
  if (!pres.sylows.at(i).contains(w)) return false;
  return admissible(pres.group, twist_context(pres), w);
}

Automorphism phi_automorphism(const NilpotentByCyclicPresentation& pres, const PhiSpec& spec) {
  const auto& g = pres.group;
  const std::size_t k = pres.sylows.size();
  if (spec.exponents.size() != k || spec.twists.size() != k) {
    throw GroupError(ErrorKind::InvalidTwist, "expected " + std::to_string(k) +
                                                  " exponents and twists");
  }
  const auto ctx = twist_context(pres);
  std::vector<Element> conjugators(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Element w = spec.twists[i];
    if (w >= g.order() || !pres.sylows[i].contains(w)) {
      throw GroupError(ErrorKind::InvalidTwist,
                       "twist " + std::to_string(i) + " is not in the Sylow subgroup");
    }
    if (!admissible(g, ctx, w)) {
      throw GroupError(ErrorKind::InvalidTwist, "twist " + g.label(w) + " at position " +
                                                    std::to_string(i) +
                                                    " violates the commutator conditions");
    }
    conjugators[i] = g.multiply(w, g.power(pres.x, static_cast<std::int64_t>(spec.exponents[i])));
  }

  // Every element is a x^j with a in N and 0 <= j < p^n.
  const std::uint64_t pn = pres.quotient_order();
  std::vector<Element> x_pow(pn);
  x_pow[0] = kIdentity;
  for (std::uint64_t j = 1; j < pn; ++j) x_pow[j] = g.multiply(x_pow[j - 1], pres.x);
  std::vector<Element> images(g.order(), UINT32_MAX);
  for (std::uint64_t j = 0; j < pn; ++j) {
    for (Element a : pres.normal.members()) {
      const Element element = g.multiply(a, x_pow[j]);
      Element image = kIdentity;
      for (std::size_t i = 0; i < k; ++i) {
        const Element part = p_part_of(g, a, pres.sylow_primes[i]);
        image = g.multiply(image, g.conjugate(part, conjugators[i]));
      }
      images[element] = g.multiply(image, x_pow[j]);
    }
  }
  if (std::find(images.begin(), images.end(), UINT32_MAX) != images.end() ||
      !is_automorphism(g, images)) {
    throw GroupError(ErrorKind::NotAnAutomorphism, "twisted power map is not an automorphism");
  }
  return Automorphism(g, std::move(images));
}

DSubgroup d_subgroup(const NilpotentByCyclicPresentation& pres, std::size_t i) {
  const auto& g = pres.group;
  const auto ctx = twist_context(pres);
  DSubgroup d;
  for (Element w : pres.sylows.at(i).members()) {
    if (admissible(g, ctx, w)) d.members.push_back(w);
  }
  std::vector<char> mask(g.order(), 0);
  for (Element w : d.members) mask[w] = 1;
  d.closed = true;
  for (Element a : d.members) {
    for (Element b : d.members) {
      if (!mask[g.multiply(a, b)]) {
        d.closed = false;
        break;
      }
    }
    if (!d.closed) break;
  }
  if (d.closed) d.handle = SubgroupHandle::trusted(g, d.members);
  return d;
}

PredictedK predicted_k(const NilpotentByCyclicPresentation& pres, TransversalChoice choice) {
  const auto& g = pres.group;
  const std::size_t k = pres.sylows.size();
  PredictedK out;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& sylow = pres.sylows[i];
    auto d = d_subgroup(pres, i);
    if (!d.closed) out.unclosed_d.push_back(i);
    const SubgroupHandle d_group = d.closed ? *d.handle : subgroup_generated(g, d.members);

    // Z(P_i) C_{P_i}(x), plus <h_i> at the p-position.
    const auto sylow_gens = generators_of(sylow);
    std::vector<Element> seeds;
    for (Element a : sylow.members()) {
      bool central = true;
      for (Element s : sylow_gens) {
        if (g.multiply(a, s) != g.multiply(s, a)) {
          central = false;
          break;
        }
      }
      if (central || g.multiply(a, pres.x) == g.multiply(pres.x, a)) seeds.push_back(a);
    }
    if (pres.p_position == i) seeds.push_back(pres.h[i]);
    const auto q = intersection(subgroup_generated(g, seeds), d_group);

    std::vector<Element> order(d_group.members().begin(), d_group.members().end());
    if (choice == TransversalChoice::Highest) std::reverse(order.begin(), order.end());
    std::vector<char> covered(g.order(), 0);
    std::vector<Element> transversal;
    for (Element w : order) {
      if (covered[w]) continue;
      transversal.push_back(w);
      for (Element c : q.members()) covered[g.multiply(w, c)] = 1;
    }
    std::sort(transversal.begin(), transversal.end());
    out.transversals.push_back(std::move(transversal));
  }

  // Enumerate 0 <= j_i < r_i for i < k-1 (j_last = 0) and w_i in T_i.
  std::vector<std::uint64_t> radices;
  for (std::size_t i = 0; i < k; ++i) radices.push_back(i + 1 < k ? pres.r[i] : 1);
  for (std::size_t i = 0; i < k; ++i) radices.push_back(out.transversals[i].size());
  out.order = 1;
  for (auto v : radices) out.order *= v;
  std::vector<std::uint64_t> digit(radices.size(), 0);
  for (std::uint64_t count = 0; count < out.order; ++count) {
    PhiSpec spec{std::vector<std::uint64_t>(k, 0), std::vector<Element>(k, kIdentity)};
    for (std::size_t i = 0; i < k; ++i) {
      spec.exponents[i] = digit[i];
      spec.twists[i] = out.transversals[i][digit[k + i]];
    }
    out.elements.push_back(std::move(spec));
    for (std::size_t pos = 0; pos < radices.size(); ++pos) {
      if (++digit[pos] < radices[pos]) break;
      digit[pos] = 0;
    }
  }
  if (is_abelian(pres.normal)) {
    std::vector<std::uint64_t> orders;
    for (std::size_t i = 0; i + 1 < k; ++i) orders.push_back(pres.r[i]);
    out.abelian_invariants = invariant_factors(orders);
  }
  return out;
}

std::vector<Automorphism> generated_with_inner(const FiniteGroup& group,
                                               const std::vector<Automorphism>& auts) {
  std::vector<Automorphism> gens = auts;
  for (Element s : group.generating_sequence()) gens.push_back(Automorphism::conjugation(group, s));
  std::vector<Automorphism> out{Automorphism::identity(group)};
  std::unordered_set<std::vector<Element>, detail::ElementVectorHash> seen{out[0].images()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& s : gens) {
      auto next = compose(out[i], s);
      if (seen.insert(next.images()).second) out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupSpec dade_construct(const std::vector<std::uint64_t>& cyclic_orders, std::uint64_t bound) {
  std::map<std::uint64_t, std::vector<unsigned>> exponents;
  for (std::uint64_t m : cyclic_orders) {
    if (m == 0) throw GroupError(ErrorKind::InvalidParams, "cyclic orders must be positive");
    for (const auto& [p, e] : factorize(m)) exponents[p].push_back(e);
  }
  std::vector<GroupSpec> factors;
  for (auto& [p, rs] : exponents) {
    std::sort(rs.begin(), rs.end());
    rs.push_back(rs.back());  // r_{n+1} = r_n
    const unsigned s = rs.back();
    // Largest exponents take the smallest primes.
    std::vector<std::size_t> slots(rs.size());
    std::iota(slots.begin(), slots.end(), 0);
    std::stable_sort(slots.begin(), slots.end(),
                     [&](std::size_t a, std::size_t b) { return rs[a] > rs[b]; });
    std::vector<std::uint64_t> q(rs.size(), 0), k(rs.size(), 0);
    std::vector<std::uint64_t> used;
    for (std::size_t slot : slots) {
      const std::uint64_t modulus = ipow(p, rs[slot]);
      std::uint64_t cand = modulus + 1;
      while (true) {
        if (cand > bound) {
          throw GroupError(ErrorKind::PrimeSearchExhausted,
                           "no prime congruent to 1 mod " + std::to_string(modulus) +
                               " below " + std::to_string(bound));
        }
        if (is_prime(cand) && std::find(used.begin(), used.end(), cand) == used.end()) break;
        cand += modulus;
      }
      used.push_back(cand);
      q[slot] = cand;
      for (std::uint64_t root = 2; root < cand; ++root) {
        if (multiplicative_order(root, cand) == modulus) {
          k[slot] = root;
          break;
        }
      }
    }
    // Base generator y_i has index stride_i; x^-1 y_i x = y_i^k_i means the
    // action (b a b^-1) sends y_i to y_i^(k_i^-1).
    std::vector<std::uint32_t> images;
    std::uint64_t stride = 1;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const std::uint64_t inv = mod_inverse(static_cast<std::int64_t>(k[i]), static_cast<std::int64_t>(q[i]));
      images.push_back(static_cast<std::uint32_t>(inv * stride));
      stride *= q[i];
    }
    factors.push_back(GroupSpec::semidirect(GroupSpec::abelian(q), GroupSpec::cyclic(ipow(p, s)),
                                            {images}));
  }
  if (factors.empty()) return GroupSpec::cyclic(1);
  if (factors.size() == 1) return factors.front();
  return GroupSpec::direct(std::move(factors));
}

}  // namespace coleman
