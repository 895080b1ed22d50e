#include "coleman/constructors.hpp"

#include <algorithm>
#include <numeric>

#include "coleman/automorphism.hpp"
#include "coleman/error.hpp"

namespace coleman {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

void require_construction_cap(std::uint64_t order, const Limits& limits, const std::string& what) {
  if (order > limits.construction) {
    throw GroupError(ErrorKind::OrderCapExceeded,
                     what + " of order " + (order == UINT64_MAX ? std::string(">2^64") : std::to_string(order)) +
                         " exceeds construction cap " + std::to_string(limits.construction));
  }
}

[[noreturn]] void invalid_action(const std::string& message) {
  throw GroupError(ErrorKind::InvalidAction, message);
}

// Extends generator images to a map on the whole group; nullopt when the
// images do not define a homomorphism.
std::optional<std::vector<Element>> extend_images(const FiniteGroup& group,
                                                  std::span<const Element> gens,
                                                  std::span<const Element> images) {
  constexpr Element kUnset = UINT32_MAX;
  std::vector<Element> map(group.order(), kUnset);
  map[kIdentity] = kIdentity;
  std::vector<Element> queue{kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element h = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Element t = group.multiply(h, gens[j]);
      const Element e = group.multiply(map[h], images[j]);
      if (map[t] == kUnset) {
        map[t] = e;
        queue.push_back(t);
      } else if (map[t] != e) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != group.order()) return std::nullopt;
  return map;
}

// (a, b) with index a + |A| b and (a, b)(a', b') = (a phi_b(a'), b b').
BuiltGroup make_semidirect(const BuiltGroup& base, std::span<const Element> base_gens,
                           const BuiltGroup& top, std::span<const Element> top_gens,
                           std::vector<std::vector<Element>> phi, const Limits& limits) {
  const FiniteGroup a_group = base.group;
  const FiniteGroup b_group = top.group;
  const std::size_t na = a_group.order();
  const std::size_t nb = b_group.order();
  const std::uint64_t order = saturating_mul(na, nb);
  require_construction_cap(order, limits, "semidirect product");
  auto shared_phi = std::make_shared<const std::vector<std::vector<Element>>>(std::move(phi));
  auto mult = [a_group, b_group, na, shared_phi](Element x, Element y) -> Element {
    const Element a = x % na, b = x / na;
    const Element a2 = y % na, b2 = y / na;
    const Element ra = a_group.multiply(a, (*shared_phi)[b][a2]);
    const Element rb = b_group.multiply(b, b2);
    return static_cast<Element>(ra + na * rb);
  };
  std::vector<std::string> labels;
  if (a_group.has_labels() || b_group.has_labels()) {
    labels.reserve(order);
    for (std::size_t b = 0; b < nb; ++b) {
      for (std::size_t a = 0; a < na; ++a) {
        labels.push_back("(" + a_group.label(static_cast<Element>(a)) + ", " +
                         b_group.label(static_cast<Element>(b)) + ")");
      }
    }
  }
  BuiltGroup out{FiniteGroup::from_function(order, mult, std::move(labels), limits), {}, {}, {}, {}};
  for (Element g : base_gens) out.generators.push_back(g);
  for (Element h : top_gens) out.generators.push_back(static_cast<Element>(na * h));
  std::vector<Element> base_members(na), top_members(nb);
  std::iota(base_members.begin(), base_members.end(), 0);
  for (std::size_t b = 0; b < nb; ++b) top_members[b] = static_cast<Element>(na * b);
  out.base = SubgroupHandle::trusted(out.group, std::move(base_members));
  out.acting = SubgroupHandle::trusted(out.group, std::move(top_members));
  return out;
}

// Mixed radix product, first factor fastest.
BuiltGroup make_direct(const std::vector<BuiltGroup>& factors, const Limits& limits) {
  std::vector<FiniteGroup> groups;
  std::vector<std::uint64_t> strides;
  std::uint64_t order = 1;
  for (const auto& f : factors) {
    groups.push_back(f.group);
    strides.push_back(order);
    order = saturating_mul(order, f.group.order());
  }
  require_construction_cap(order, limits, "direct product");
  auto mult = [groups, strides](Element x, Element y) -> Element {
    std::uint64_t result = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const std::uint64_t n = groups[i].order();
      const auto a = static_cast<Element>((x / strides[i]) % n);
      const auto b = static_cast<Element>((y / strides[i]) % n);
      result += groups[i].multiply(a, b) * strides[i];
    }
    return static_cast<Element>(result);
  };
  std::vector<std::string> labels;
  bool any_labels = std::any_of(groups.begin(), groups.end(),
                                [](const FiniteGroup& g) { return g.has_labels(); });
  if (any_labels && groups.size() > 1) {
    labels.reserve(order);
    for (std::uint64_t x = 0; x < order; ++x) {
      std::string s = "(";
      for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) s += ", ";
        s += groups[i].label(static_cast<Element>((x / strides[i]) % groups[i].order()));
      }
      labels.push_back(s + ")");
    }
  } else if (groups.size() == 1) {
    labels = groups[0].has_labels() ? groups[0].labels() : std::vector<std::string>{};
  }
  BuiltGroup out{FiniteGroup::from_function(order, mult, std::move(labels), limits), {}, {}, {}, {}};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<Element> embed(groups[i].order());
    for (Element e = 0; e < embed.size(); ++e) embed[e] = static_cast<Element>(e * strides[i]);
    for (Element g : factors[i].generators) out.generators.push_back(embed[g]);
    out.coordinate_embeddings.push_back(std::move(embed));
  }
  return out;
}

BuiltGroup from_permutations(std::size_t degree, const std::vector<Permutation>& gens,
                             const Limits& limits) {
  auto closure = permutation_closure(degree, gens, limits);
  BuiltGroup out{closure.group, {}, {}, {}, {}};
  for (Element g : closure.generator_indices) {
    if (g != kIdentity) out.generators.push_back(g);
  }
  return out;
}

Permutation cycle_on(std::size_t degree, std::vector<std::uint32_t> points) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) p[points[i]] = points[(i + 1) % points.size()];
  return p;
}

BuiltGroup build_abelian(const std::vector<std::uint64_t>& invariants, const Limits& limits) {
  std::vector<BuiltGroup> factors;
  for (std::uint64_t n : invariants) {
    require_construction_cap(n, limits, "cyclic group");
    auto mult = [n](Element a, Element b) { return static_cast<Element>((a + b) % n); };
    BuiltGroup c{FiniteGroup::from_function(n, mult, {}, limits), {}, {}, {}, {}};
    if (n > 1) c.generators.push_back(1);
    factors.push_back(std::move(c));
  }
  return make_direct(factors, limits);
}

BuiltGroup build_semidirect(const spec::Semidirect& s, const Limits& limits) {
  require_construction_cap(spec_order(*s.base, limits) == UINT64_MAX
                               ? UINT64_MAX
                               : saturating_mul(spec_order(*s.base, limits), spec_order(*s.acting, limits)),
                           limits, "semidirect product");
  const BuiltGroup base = build(*s.base, limits);
  const BuiltGroup top = build(*s.acting, limits);
  const auto& a = base.group;
  const auto& b = top.group;
  if (s.action.size() != top.generators.size()) {
    invalid_action("action lists " + std::to_string(s.action.size()) + " maps but the acting group has " +
                   std::to_string(top.generators.size()) + " generators");
  }
  std::vector<std::vector<Element>> gen_maps;
  for (std::size_t j = 0; j < s.action.size(); ++j) {
    const auto& images = s.action[j];
    if (images.size() != base.generators.size()) {
      invalid_action("action map " + std::to_string(j) + " has " + std::to_string(images.size()) +
                     " images but the base has " + std::to_string(base.generators.size()) +
                     " generators");
    }
    for (Element e : images) {
      if (e >= a.order()) invalid_action("action image " + std::to_string(e) + " is not a base element");
    }
    auto map = extend_images(a, base.generators, images);
    if (!map) invalid_action("action map " + std::to_string(j) + " is not a homomorphism of the base");
    std::vector<char> hit(a.order(), 0);
    for (Element e : *map) {
      if (hit[e]) invalid_action("action map " + std::to_string(j) + " is not bijective");
      hit[e] = 1;
    }
    gen_maps.push_back(std::move(*map));
  }
  // Extend b -> phi_b over the acting group with phi_{b h} = phi_b o phi_h.
  constexpr std::size_t kUnset = SIZE_MAX;
  std::vector<std::vector<Element>> phi(b.order());
  std::vector<std::size_t> state(b.order(), kUnset);
  phi[kIdentity].resize(a.order());
  std::iota(phi[kIdentity].begin(), phi[kIdentity].end(), 0);
  state[kIdentity] = 0;
  std::vector<Element> queue{kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element h = queue[i];
    for (std::size_t j = 0; j < top.generators.size(); ++j) {
      const Element t = b.multiply(h, top.generators[j]);
      std::vector<Element> composed(a.order());
      for (Element x = 0; x < a.order(); ++x) composed[x] = phi[h][gen_maps[j][x]];
      if (state[t] == kUnset) {
        phi[t] = std::move(composed);
        state[t] = 0;
        queue.push_back(t);
      } else if (phi[t] != composed) {
        invalid_action("action does not respect the relations of the acting group");
      }
    }
  }
  return make_semidirect(base, base.generators, top, top.generators, std::move(phi), limits);
}

BuiltGroup build_wreath(const spec::Wreath& w, const Limits& limits) {
  const std::uint64_t ns = spec_order(*w.base, limits);
  const std::uint64_t nh = spec_order(*w.top, limits);
  std::uint64_t order = nh;
  for (std::uint64_t k = 0; k < nh && order != UINT64_MAX; ++k) order = saturating_mul(order, ns);
  require_construction_cap(order, limits, "wreath product");
  const BuiltGroup s = build(*w.base, limits);
  const BuiltGroup h = build(*w.top, limits);
  std::vector<BuiltGroup> copies(h.group.order(), s);
  BuiltGroup power = make_direct(copies, limits);
  const auto& hg = h.group;
  const std::size_t nbase = power.group.order();
  // phi_h(f)(k) = f(h^-1 k): coordinate k of the image is coordinate h^-1 k of f.
  std::vector<std::vector<Element>> phi(hg.order(), std::vector<Element>(nbase));
  std::vector<std::uint64_t> strides(hg.order());
  for (std::size_t k = 0; k < hg.order(); ++k) strides[k] = k == 0 ? 1 : strides[k - 1] * ns;
  for (Element hh = 0; hh < hg.order(); ++hh) {
    const Element hinv = hg.inverse(hh);
    for (std::size_t f = 0; f < nbase; ++f) {
      std::uint64_t image = 0;
      for (Element k = 0; k < hg.order(); ++k) {
        const Element src = hg.multiply(hinv, k);
        image += ((f / strides[src]) % ns) * strides[k];
      }
      phi[hh][f] = static_cast<Element>(image);
    }
  }
  std::vector<Element> base_gens;
  for (Element g : s.generators) base_gens.push_back(power.coordinate_embeddings[0][g]);
  BuiltGroup out = make_semidirect(power, base_gens, h, h.generators, std::move(phi), limits);
  out.coordinate_embeddings = power.coordinate_embeddings;
  return out;
}

BuiltGroup build_holomorph(const spec::Holomorph& hol, const Limits& limits) {
  const BuiltGroup base = build(*hol.base, limits);
  const auto auts = automorphism_group(base.group, limits);
  require_construction_cap(saturating_mul(base.group.order(), auts.size()), limits, "holomorph");
  BuiltGroup top{automorphisms_as_group(auts), {}, {}, {}, {}};
  top.generators = top.group.generating_sequence();
  std::vector<std::vector<Element>> phi;
  for (const auto& sigma : auts) phi.push_back(sigma.images());
  return make_semidirect(base, base.generators, top, top.generators, std::move(phi), limits);
}

}  // namespace

FiniteGroup direct_product(const std::vector<FiniteGroup>& factors, const Limits& limits) {
  std::vector<BuiltGroup> built;
  for (const auto& g : factors) built.push_back(BuiltGroup{g, g.generating_sequence(), {}, {}, {}});
  return make_direct(built, limits).group;
}

BuiltGroup build(const GroupSpec& spec, const Limits& limits) {
  return std::visit(
      Overloaded{
          [&](const spec::Perm& p) { return from_permutations(p.degree, p.generators, limits); },
          [&](const spec::Cyclic& c) { return build_abelian({c.n}, limits); },
          [&](const spec::Abelian& a) { return build_abelian(a.invariants, limits); },
          [&](const spec::Symmetric& s) {
            require_construction_cap(spec_order(spec, limits), limits, "symmetric group");
            const std::size_t n = s.n;
            std::vector<Permutation> gens;
            if (n >= 2) {
              std::vector<std::uint32_t> all(n);
              std::iota(all.begin(), all.end(), 0);
              gens.push_back(cycle_on(n, all));
              if (n > 2) gens.push_back(cycle_on(n, {0, 1}));
            }
            return from_permutations(n, gens, limits);
          },
          [&](const spec::Alternating& s) {
            require_construction_cap(spec_order(spec, limits), limits, "alternating group");
            const std::size_t n = s.n;
            std::vector<Permutation> gens;
            if (n >= 3) gens.push_back(cycle_on(n, {0, 1, 2}));
            if (n >= 4) {
              std::vector<std::uint32_t> pts;
              for (std::uint32_t i = (n % 2 == 1 ? 0 : 1); i < n; ++i) pts.push_back(i);
              gens.push_back(cycle_on(n, pts));
            }
            return from_permutations(n, gens, limits);
          },
          [&](const spec::Dihedral& d) {
            if (d.n == 0 || d.n % 2 != 0) {
              throw GroupError(ErrorKind::InvalidSpec, "dihedral order must be even");
            }
            require_construction_cap(d.n, limits, "dihedral group");
            const std::uint64_t m = d.n / 2;
            // r^i s^e has index i + m e; s r^j = r^-j s.
            auto mult = [m](Element x, Element y) -> Element {
              const std::uint64_t i = x % m, e = x / m, j = y % m, f = y / m;
              const std::uint64_t rot = e == 0 ? (i + j) % m : (i + m - j) % m;
              return static_cast<Element>(rot + m * ((e + f) % 2));
            };
            std::vector<std::string> labels;
            for (std::uint64_t x = 0; x < d.n; ++x) {
              const std::uint64_t i = x % m, e = x / m;
              std::string l = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
              if (e) l += "s";
              labels.push_back(l.empty() ? "e" : l);
            }
            BuiltGroup out{FiniteGroup::from_function(d.n, mult, std::move(labels), limits), {}, {}, {}, {}};
            if (m > 1) out.generators.push_back(1);
            out.generators.push_back(static_cast<Element>(m));
            return out;
          },
          [&](const spec::Direct& d) {
            require_construction_cap(spec_order(spec, limits), limits, "direct product");
            std::vector<BuiltGroup> factors;
            for (const auto& f : d.factors) factors.push_back(build(f, limits));
            return make_direct(factors, limits);
          },
          [&](const spec::Semidirect& s) { return build_semidirect(s, limits); },
          [&](const spec::Wreath& w) { return build_wreath(w, limits); },
          [&](const spec::Holomorph& h) { return build_holomorph(h, limits); },
      },
      spec.node);
}

std::uint64_t spec_order(const GroupSpec& spec, const Limits& limits) {
  return std::visit(
      Overloaded{
          [&](const spec::Perm& p) -> std::uint64_t {
            return permutation_group_order(p.degree, p.generators, limits);
          },
          [](const spec::Cyclic& c) -> std::uint64_t { return c.n; },
          [](const spec::Abelian& a) -> std::uint64_t {
            std::uint64_t n = 1;
            for (auto v : a.invariants) n = saturating_mul(n, v);
            return n;
          },
          [](const spec::Symmetric& s) -> std::uint64_t {
            std::uint64_t n = 1;
            for (std::uint64_t k = 2; k <= s.n; ++k) n = saturating_mul(n, k);
            return n;
          },
          [](const spec::Alternating& s) -> std::uint64_t {
            std::uint64_t n = 1;
            for (std::uint64_t k = 3; k <= s.n; ++k) n = saturating_mul(n, k);
            return n;
          },
          [](const spec::Dihedral& d) -> std::uint64_t { return d.n; },
          [&](const spec::Direct& d) -> std::uint64_t {
            std::uint64_t n = 1;
            for (const auto& f : d.factors) n = saturating_mul(n, spec_order(f, limits));
            return n;
          },
          [&](const spec::Semidirect& s) -> std::uint64_t {
            return saturating_mul(spec_order(*s.base, limits), spec_order(*s.acting, limits));
          },
          [&](const spec::Wreath& w) -> std::uint64_t {
            const std::uint64_t ns = spec_order(*w.base, limits);
            const std::uint64_t nh = spec_order(*w.top, limits);
            std::uint64_t n = nh;
            for (std::uint64_t k = 0; k < nh && n != UINT64_MAX; ++k) n = saturating_mul(n, ns);
            return n;
          },
          [&](const spec::Holomorph& h) -> std::uint64_t {
            const BuiltGroup base = build(*h.base, limits);
            return saturating_mul(base.group.order(), automorphism_group(base.group, limits).size());
          },
      },
      spec.node);
}

}  // namespace coleman
