#include "coleman/checkers.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "coleman/coleman_structure.hpp"
#include "coleman/constructors.hpp"
#include "coleman/error.hpp"
#include "coleman/isomorphism.hpp"
#include "coleman/normal.hpp"
#include "coleman/numeric.hpp"

namespace coleman {

using nlohmann::json;

std::string describe_abelian(const std::vector<std::uint64_t>& invariants) {
  if (invariants.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (i) out += " x ";
    out += "C" + std::to_string(invariants[i]);
  }
  return out;
}

namespace {

[[noreturn]] void bad_params(const std::string& message) {
  throw GroupError(ErrorKind::InvalidParams, message);
}

std::uint64_t as_prime(const json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 2 || !is_prime(v.get<std::uint64_t>())) {
    bad_params(what + " must be a prime");
  }
  return v.get<std::uint64_t>();
}

bool is_p_power(std::uint64_t n, std::uint64_t p) { return prime_power_exponent(n, p).has_value(); }

std::string describe_quotient(const OuterQuotient& q) {
  if (q.abelian_invariants) return describe_abelian(*q.abelian_invariants);
  return "non-abelian of order " + std::to_string(q.order());
}

// Elements of a nilpotent subgroup whose order is a power of p: its Sylow p-subgroup.
SubgroupHandle sylow_of_nilpotent(const SubgroupHandle& n, std::uint64_t p) {
  const auto& g = n.parent();
  std::vector<Element> members;
  for (Element a : n.members()) {
    if (is_p_power(g.element_order(a), p)) members.push_back(a);
  }
  return SubgroupHandle::trusted(g, std::move(members));
}

std::optional<Element> outside(const SubgroupHandle& a, const SubgroupHandle& b) {
  for (Element x : a.members()) {
    if (!b.contains(x)) return x;
  }
  return std::nullopt;
}

SubgroupHandle center_of(const SubgroupHandle& h) {
  const auto gens = generators_of(h);
  std::vector<Element> members;
  for (Element a : h.members()) {
    bool central = true;
    for (Element s : gens) {
      if (h.parent().multiply(a, s) != h.parent().multiply(s, a)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(a);
  }
  return SubgroupHandle::trusted(h.parent(), std::move(members));
}

SubgroupHandle local_handle(const InducedGroup& ig, const SubgroupHandle& h) {
  std::vector<Element> local;
  for (Element a : h.members()) local.push_back(ig.to_local(a));
  std::sort(local.begin(), local.end());
  return SubgroupHandle::trusted(ig.group, std::move(local));
}

std::optional<Automorphism> restrict_to(const Automorphism& sigma, const InducedGroup& ig) {
  std::vector<Element> images(ig.group.order());
  for (Element i = 0; i < images.size(); ++i) {
    const Element image = ig.local[sigma(ig.embedding[i])];
    if (image == UINT32_MAX) return std::nullopt;
    images[i] = image;
  }
  return Automorphism(ig.group, std::move(images));
}

bool agrees_on(const Automorphism& sigma, const FiniteGroup& g, std::span<const Element> gens,
               Element conjugator) {
  for (Element s : gens) {
    if (sigma(s) != g.conjugate(s, conjugator)) return false;
  }
  return true;
}

bool has_conjugation_witness(const Automorphism& sigma, std::span<const Element> gens) {
  const auto& g = sigma.group();
  for (Element c = 0; c < g.order(); ++c) {
    if (agrees_on(sigma, g, gens, c)) return true;
  }
  return false;
}

// Decomposition of a subgroup as a direct power of one simple group.
struct SimplePower {
  std::uint64_t factor_order;
  std::size_t count;
  bool abelian;
};

std::optional<SimplePower> simple_power(const SubgroupHandle& h, const Limits& limits) {
  if (h.is_trivial()) return std::nullopt;
  const auto ig = induced_group(h);
  const auto& g = ig.group;
  if (is_abelian(g)) {
    const auto p = prime_of_prime_power(g.order());
    if (!p) return std::nullopt;
    for (Element a = 1; a < g.order(); ++a) {
      if (g.element_order(a) != *p) return std::nullopt;
    }
    return SimplePower{*p, *prime_power_exponent(g.order(), *p), true};
  }
  const auto mins = minimal_normal_subgroups(g, limits);
  std::uint64_t product = 1;
  const auto first = induced_group(mins.front());
  for (const auto& m : mins) {
    const auto im = induced_group(m);
    if (is_abelian(im.group) || !is_simple(im.group, limits)) return std::nullopt;
    if (!is_isomorphic(im.group, first.group, limits).isomorphic) return std::nullopt;
    product *= m.order();
  }
  if (product != g.order()) return std::nullopt;
  return SimplePower{mins.front().order(), mins.size(), false};
}

// The non-abelian simple direct factors of h, or nullopt when h is not such
// a product. The trivial subgroup is the empty product.
std::optional<std::vector<SubgroupHandle>> nonabelian_simple_factors(const SubgroupHandle& h,
                                                                    const Limits& limits) {
  if (h.is_trivial()) return std::vector<SubgroupHandle>{};
  const auto ig = induced_group(h);
  if (is_abelian(ig.group)) return std::nullopt;
  std::vector<SubgroupHandle> factors;
  std::uint64_t product = 1;
  for (const auto& m : minimal_normal_subgroups(ig.group, limits)) {
    const auto im = induced_group(m);
    if (is_abelian(im.group) || !is_simple(im.group, limits)) return std::nullopt;
    product *= m.order();
    factors.push_back(ig.lift(m, h.parent()));
  }
  if (product != h.order()) return std::nullopt;
  return factors;
}

class Ctx {
 public:
  Ctx(GroupAnalysis& analysis, const json& params, VerificationReport& report)
      : a(analysis), params_(params), report_(report) {}

  GroupAnalysis& a;

  bool has(const char* key) const { return params_.is_object() && params_.contains(key); }
  const json& param(const char* key) const { return params_.at(key); }
  SubgroupHandle subgroup(const char* key, const json& fallback) {
    return resolve_subgroup(a, has(key) ? param(key) : fallback);
  }
  std::optional<std::uint64_t> prime(const char* key) const {
    if (!has(key)) return std::nullopt;
    return as_prime(param(key), std::string("parameter \"") + key + "\"");
  }

  bool hyp(std::string name, bool passed, json witness = nullptr) {
    report_.hypotheses.push_back({std::move(name), passed, std::move(witness)});
    return passed;
  }
  void conclude(bool passed, std::string detail) {
    report_.conclusion = ConclusionCheck{passed, std::move(detail)};
  }

  // Shared conclusion: every Coleman automorphism is inner.
  void conclude_out_col_trivial() {
    const auto& oc = a.out_col();
    if (oc.is_trivial()) {
      conclude(true, "Out_col is trivial (" + std::to_string(a.coleman_automorphisms().size()) +
                         " Coleman automorphisms, all inner)");
    } else {
      conclude(false, "Out_col has order " + std::to_string(oc.order()) +
                          "; non-inner Coleman automorphism " +
                          automorphism_witness(oc.representatives[1]).dump());
    }
  }

  // Shared conclusion: every class-preserving Coleman automorphism of
  // p-power order is inner, for each listed prime.
  void conclude_cp_coleman_p_power_inner(const std::vector<std::uint64_t>& primes) {
    std::size_t checked = 0;
    for (const auto& sigma : a.class_preserving_coleman_automorphisms()) {
      const auto ord = sigma.order();
      for (std::uint64_t p : primes) {
        if (!is_p_power(ord, p)) continue;
        ++checked;
        if (!is_inner(sigma)) {
          conclude(false, "class-preserving Coleman automorphism of order " + std::to_string(ord) +
                              " is not inner: " + automorphism_witness(sigma).dump());
          return;
        }
      }
    }
    std::string plist;
    for (auto p : primes) plist += (plist.empty() ? "" : ",") + std::to_string(p);
    conclude(true, std::to_string(checked) +
                       " class-preserving Coleman automorphisms of p-power order (p in {" + plist +
                       "}) checked, all inner");
  }

 private:
  const json& params_;
  VerificationReport& report_;
};

// --- individual checks -------------------------------------------------------

void check_prime_divisors(Ctx& c) {
  const auto& primes = c.a.group().prime_set();
  auto covered = [&](std::uint64_t n) {
    for (auto q : prime_divisors(n)) {
      if (std::find(primes.begin(), primes.end(), q) == primes.end()) return q;
    }
    return std::uint64_t{0};
  };
  const auto n_col = c.a.coleman_automorphisms().size();
  const auto n_c = c.a.class_preserving_automorphisms().size();
  const auto bad_col = covered(n_col), bad_c = covered(n_c);
  if (bad_col || bad_c) {
    c.conclude(false, "prime " + std::to_string(bad_col ? bad_col : bad_c) + " divides |Aut_" +
                          (bad_col ? "col" : "c") + "| but not |G|");
  } else {
    c.conclude(true, "|Aut_col| = " + std::to_string(n_col) + ", |Aut_c| = " + std::to_string(n_c) +
                         ", prime divisors within pi(G)");
  }
}

void check_direct_product(Ctx& c) {
  const auto* d = std::get_if<spec::Direct>(&c.a.spec().node);
  if (!c.hyp("group is a direct product of two factors", d && d->factors.size() == 2,
             c.a.spec().construct())) {
    return;
  }
  GroupAnalysis left(d->factors[0], c.a.limits());
  GroupAnalysis right(d->factors[1], c.a.limits());
  const auto& whole = c.a.out_col();
  const auto& l = left.out_col();
  const auto& r = right.out_col();
  const std::size_t product = l.order() * r.order();
  if (whole.order() != product) {
    c.conclude(false, "|Out_col(GxH)| = " + std::to_string(whole.order()) + " but |Out_col(G)|*|Out_col(H)| = " +
                          std::to_string(product));
    return;
  }
  const FiniteGroup prod = direct_product({l.group, r.group}, c.a.limits());
  const bool iso = is_isomorphic(whole.group, prod, c.a.limits()).isomorphic;
  c.conclude(iso, iso ? "Out_col(GxH) of order " + std::to_string(product) +
                            " is isomorphic to Out_col(G) x Out_col(H)"
                      : "Out_col(GxH) has the right order but is not isomorphic to the product");
}

void check_normal_invariance(Ctx& c) {
  const auto normals = normal_subgroups(c.a.group(), c.a.limits());
  for (const auto& sigma : c.a.coleman_automorphisms()) {
    for (const auto& n : normals) {
      if (!(image_of(sigma, n) == n)) {
        c.conclude(false, "Coleman automorphism " + automorphism_witness(sigma).dump() +
                              " moves the normal subgroup " + subgroup_witness(n).dump());
        return;
      }
    }
  }
  c.conclude(true, std::to_string(c.a.coleman_automorphisms().size()) +
                       " Coleman automorphisms preserve all " + std::to_string(normals.size()) +
                       " normal subgroups");
}

void check_fixed_normal(Ctx& c) {
  const auto& g = c.a.group();
  std::vector<SubgroupHandle> normals;
  if (c.has("N")) {
    auto n = c.subgroup("N", "whole");
    if (!c.hyp("N is normal", is_normal(n), subgroup_witness(n))) return;
    normals.push_back(n);
  } else {
    normals = normal_subgroups(g, c.a.limits());
  }
  std::vector<std::uint64_t> primes;
  if (auto p = c.prime("p")) {
    primes.push_back(*p);
  } else {
    primes = g.prime_set();
  }
  if (!c.hyp("G has a prime divisor to test", !primes.empty())) return;

  const auto& auts = c.a.automorphisms();
  std::size_t qualifying = 0;
  for (const auto& n : normals) {
    const auto n_gens = generators_of(n);
    for (std::uint64_t p : primes) {
      const auto opz = sylow_of_nilpotent(center_of(n), p);
      for (const auto& alpha : auts) {
        if (!is_p_power(alpha.order(), p)) continue;
        bool fixes_n = std::all_of(n_gens.begin(), n_gens.end(), [&](Element x) { return alpha(x) == x; });
        if (!fixes_n) continue;
        bool trivial_on_quotient = true;
        for (Element x : g.generating_sequence()) {
          if (!n.contains(g.multiply(g.inverse(x), alpha(x)))) trivial_on_quotient = false;
        }
        if (!trivial_on_quotient) continue;
        ++qualifying;
        for (Element x = 0; x < g.order(); ++x) {
          if (!opz.contains(g.multiply(g.inverse(x), alpha(x)))) {
            c.conclude(false, "automorphism " + automorphism_witness(alpha).dump() +
                                  " is not trivial modulo O_p(Z(N)) at element " + g.label(x) +
                                  " (p = " + std::to_string(p) + ")");
            return;
          }
        }
        if (is_p_central(alpha, p)) {
          bool found = false;
          for (Element z : opz.members()) {
            if (agrees_on(alpha, g, g.generating_sequence(), z)) {
              found = true;
              break;
            }
          }
          if (!found) {
            c.conclude(false, "p-central automorphism " + automorphism_witness(alpha).dump() +
                                  " is not conjugation by an element of O_p(Z(N))");
            return;
          }
        }
      }
    }
  }
  c.conclude(true, std::to_string(qualifying) +
                       " (automorphism, N, p) triples satisfy the hypotheses; all conclusions hold");
}

struct NormalPrimePair {
  SubgroupHandle n;
  std::uint64_t p;
};

std::vector<NormalPrimePair> heredity_pairs(Ctx& c) {
  const auto& g = c.a.group();
  std::vector<SubgroupHandle> normals;
  if (c.has("N")) {
    normals.push_back(c.subgroup("N", "whole"));
  } else {
    for (const auto& n : normal_subgroups(g, c.a.limits())) {
      if (!n.is_trivial() && !n.is_whole()) normals.push_back(n);
    }
  }
  std::vector<NormalPrimePair> pairs;
  for (const auto& n : normals) {
    if (!is_normal(n)) continue;
    const std::uint64_t index = g.order() / n.order();
    std::vector<std::uint64_t> primes;
    if (auto p = c.prime("p")) {
      primes.push_back(*p);
    } else {
      primes = g.prime_set();
    }
    for (auto p : primes) {
      if (index % p != 0) pairs.push_back({n, p});
    }
  }
  return pairs;
}

void check_heredity(Ctx& c) {
  if (c.has("N")) {
    auto n = c.subgroup("N", "whole");
    if (!c.hyp("N is normal", is_normal(n), subgroup_witness(n))) return;
  }
  const auto pairs = heredity_pairs(c);
  if (!c.hyp("some normal N and prime p with p not dividing |G/N|", !pairs.empty())) return;
  for (const auto& [n, p] : pairs) {
    const auto ig = induced_group(n);
    for (const auto& sigma : c.a.class_preserving_automorphisms()) {
      if (!is_p_power(sigma.order(), p)) continue;
      auto r = restrict_to(sigma, ig);
      if (!r || !is_class_preserving(*r)) {
        c.conclude(false, "class-preserving automorphism " + automorphism_witness(sigma).dump() +
                              " of p-power order (p = " + std::to_string(p) +
                              ") does not restrict to a class-preserving automorphism of N " +
                              subgroup_witness(n).dump());
        return;
      }
    }
    for (const auto& sigma : c.a.coleman_automorphisms()) {
      if (!is_p_power(sigma.order(), p)) continue;
      auto r = restrict_to(sigma, ig);
      if (!r || !is_coleman(*r)) {
        c.conclude(false, "Coleman automorphism " + automorphism_witness(sigma).dump() +
                              " of p-power order (p = " + std::to_string(p) +
                              ") does not restrict to a Coleman automorphism of N " +
                              subgroup_witness(n).dump());
        return;
      }
    }
    const auto n_c = out_c(ig.group, c.a.limits()).order();
    const auto n_col = out_col(ig.group, c.a.limits()).order();
    if (n_c % p != 0 && c.a.out_c().order() % p == 0) {
      c.conclude(false, "Out_c(N) is a p'-group but Out_c(G) is not (p = " + std::to_string(p) +
                            ", N " + subgroup_witness(n).dump() + ")");
      return;
    }
    if (n_col % p != 0 && c.a.out_col().order() % p == 0) {
      c.conclude(false, "Out_col(N) is a p'-group but Out_col(G) is not (p = " +
                            std::to_string(p) + ", N " + subgroup_witness(n).dump() + ")");
      return;
    }
  }
  c.conclude(true, std::to_string(pairs.size()) +
                       " (N, p) pairs checked: restrictions and p'-transfer hold");
}

void check_heredity_intersection(Ctx& c) {
  if (c.has("N")) {
    auto n = c.subgroup("N", "whole");
    if (!c.hyp("N is normal", is_normal(n), subgroup_witness(n))) return;
  }
  const auto pairs = heredity_pairs(c);
  if (!c.hyp("some normal N and prime p with p not dividing |G/N|", !pairs.empty())) return;
  const auto whole = c.a.out_c_cap_col().order();
  for (const auto& [n, p] : pairs) {
    const auto ig = induced_group(n);
    const auto local = out_c_cap_out_col(ig.group, c.a.limits()).order();
    if (local % p != 0 && whole % p == 0) {
      c.conclude(false, "Out_c(N) ∩ Out_col(N) is a p'-group but the same fails for G (p = " +
                            std::to_string(p) + ", N " + subgroup_witness(n).dump() + ")");
      return;
    }
  }
  c.conclude(true, std::to_string(pairs.size()) + " (N, p) pairs checked; |Out_c ∩ Out_col| = " +
                       std::to_string(whole));
}

void check_simple_p_central(Ctx& c) {
  const auto& g = c.a.group();
  if (!c.hyp("G is simple", g.order() > 1 && is_simple(g, c.a.limits()))) return;
  const auto& auts = c.a.automorphisms();
  for (std::uint64_t p : g.prime_set()) {
    bool all_inner = true;
    for (const auto& sigma : auts) {
      if (is_p_central(sigma, p) && !is_inner(sigma)) {
        all_inner = false;
        break;
      }
    }
    if (all_inner) {
      c.conclude(true, "every " + std::to_string(p) + "-central automorphism is inner");
      return;
    }
  }
  c.conclude(false, "for every prime p there is a non-inner p-central automorphism");
}

void check_minimal_characteristic(Ctx& c) {
  const auto& k = c.a.group();
  const auto gsub = c.subgroup("G", "whole");
  if (!c.hyp("G is normal in K", is_normal(gsub), subgroup_witness(gsub))) return;
  const auto ig = induced_group(gsub);
  const auto aut_g = automorphism_group(ig.group, c.a.limits());
  const auto chars = characteristic_subgroups(ig.group, aut_g, c.a.limits());
  SubgroupHandle n = trivial_subgroup(k);
  if (c.has("N")) {
    n = c.subgroup("N", "trivial");
  } else {
    const auto mins = minimal_characteristic_subgroups(ig.group, aut_g, c.a.limits());
    if (!mins.empty()) n = ig.lift(mins.front(), k);
  }
  if (!c.hyp("N is a non-trivial subgroup of G", !n.is_trivial() && n.is_subset_of(gsub),
             subgroup_witness(n))) {
    return;
  }
  const auto local = local_handle(ig, n);
  if (!c.hyp("N is characteristic in G", is_invariant(local, aut_g), subgroup_witness(n))) return;
  std::optional<SubgroupHandle> smaller;
  for (const auto& d : chars) {
    if (!d.is_trivial() && d.order() < local.order() && d.is_subset_of(local)) {
      smaller = d;
      break;
    }
  }
  if (!c.hyp("N is minimal among non-trivial characteristic subgroups of G", !smaller,
             smaller ? subgroup_witness(ig.lift(*smaller, k)) : json(nullptr))) {
    return;
  }
  const auto cent = centralizer(k, generators_of(n));
  const auto out = outside(cent, n);
  if (!c.hyp("C_K(N) is contained in N", !out, out ? element_witness(k, *out) : json(nullptr))) return;
  c.conclude_out_col_trivial();
}

void check_self_centralizing_p_subgroup(Ctx& c) {
  const auto& g = c.a.group();
  SubgroupHandle p_sub = trivial_subgroup(g);
  if (c.has("P")) {
    p_sub = c.subgroup("P", "trivial");
  } else {
    std::optional<SubgroupHandle> fallback;
    for (std::uint64_t p : g.prime_set()) {
      auto o = core_subgroups(g, p, c.a.limits()).o_p;
      if (!fallback) fallback = o;
      if (!o.is_trivial() && !outside(centralizer(g, generators_of(o)), o)) {
        fallback = o;
        break;
      }
    }
    if (fallback) p_sub = *fallback;
  }
  const auto p = prime_of_prime_power(p_sub.order());
  if (!c.hyp("P is a non-trivial p-group", p_sub.order() > 1 && p.has_value(),
             subgroup_witness(p_sub))) {
    return;
  }
  std::optional<Element> mover;
  for (Element s : g.generating_sequence()) {
    if (!(conjugate_subgroup(p_sub, s) == p_sub)) {
      mover = s;
      break;
    }
  }
  if (!c.hyp("P is normal in G", !mover, mover ? element_witness(g, *mover) : json(nullptr))) return;
  const auto out = outside(centralizer(g, generators_of(p_sub)), p_sub);
  if (!c.hyp("C_G(P) is contained in P", !out, out ? element_witness(g, *out) : json(nullptr))) return;

  std::size_t central = 0;
  for (const auto& sigma : c.a.automorphisms()) {
    if (!is_p_central(sigma, *p)) continue;
    ++central;
    if (!is_inner(sigma)) {
      c.conclude(false, "non-inner " + std::to_string(*p) + "-central automorphism " +
                            automorphism_witness(sigma).dump());
      return;
    }
  }
  const auto& oc = c.a.out_col();
  if (!oc.is_trivial()) {
    c.conclude(false, "Out_col has order " + std::to_string(oc.order()) + "; representative " +
                          automorphism_witness(oc.representatives[1]).dump());
    return;
  }
  c.conclude(true, "all " + std::to_string(central) + " " + std::to_string(*p) +
                       "-central automorphisms are inner and Out_col is trivial");
}

// A subgroup H with H n N = 1 and |H| = |G:N|, searched by adjoining one
// element at a time in index order.
std::optional<SubgroupHandle> find_complement(const SubgroupHandle& n, const Limits& limits) {
  const auto& g = n.parent();
  if (g.order() > limits.subgroup_search) {
    throw GroupError(ErrorKind::OrderCapExceeded,
                     "complement search on a group of order " + std::to_string(g.order()) +
                         " exceeds the subgroup-search cap " + std::to_string(limits.subgroup_search));
  }
  const std::size_t index = g.order() / n.order();
  std::size_t budget = 200000;
  std::function<std::optional<SubgroupHandle>(const SubgroupHandle&, Element)> grow =
      [&](const SubgroupHandle& h, Element from) -> std::optional<SubgroupHandle> {
    if (h.order() == index) return h;
    for (Element e = from; e < g.order(); ++e) {
      if (h.contains(e) || n.contains(e)) continue;
      if (budget-- == 0) {
        throw GroupError(ErrorKind::OrderCapExceeded, "complement search budget exhausted");
      }
      std::vector<Element> seeds = generators_of(h);
      seeds.push_back(e);
      const auto next = subgroup_generated(g, seeds);
      if (index % next.order() != 0 || !intersection(next, n).is_trivial()) continue;
      if (auto found = grow(next, e + 1)) return found;
    }
    return std::nullopt;
  };
  return grow(trivial_subgroup(g), 1);
}

void check_simple_power_base(Ctx& c) {
  const auto& g = c.a.group();
  if (!c.has("base") &&
      !c.hyp("the group has a base subgroup", c.a.built().base.has_value(), c.a.spec().construct())) {
    return;
  }
  const auto base = c.subgroup("base", "base");
  if (!c.hyp("base is normal", is_normal(base), subgroup_witness(base))) return;
  const auto power = simple_power(base, c.a.limits());
  if (!c.hyp("base is a direct power of a simple group", power.has_value(), subgroup_witness(base))) {
    return;
  }
  std::optional<SubgroupHandle> complement;
  const auto& built = c.a.built();
  if (built.base == base && built.acting) {
    complement = built.acting;
  } else if (std::gcd(base.order(), g.order() / base.order()) != 1) {
    complement = find_complement(base, c.a.limits());
  }
  const bool coprime = std::gcd(base.order(), g.order() / base.order()) == 1;
  const json comp_witness = complement ? subgroup_witness(*complement)
                            : coprime  ? json("coprime order and index")
                                       : json(nullptr);
  if (!c.hyp("base has a complement", complement.has_value() || coprime, comp_witness)) return;
  const auto z = center_of(base);
  const auto out = outside(centralizer(g, generators_of(base)), z);
  if (!c.hyp("C_G(base) is contained in Z(base)", !out, out ? element_witness(g, *out) : json(nullptr))) {
    return;
  }
  c.conclude_out_col_trivial();
}

// S_1 and S_2 are also accepted when written as cyclic groups.
bool is_symmetric_spec(const GroupSpec& s) {
  if (std::holds_alternative<spec::Symmetric>(s.node)) return true;
  const auto* c = std::get_if<spec::Cyclic>(&s.node);
  return c && c->n <= 2;
}

void check_symmetric_wreath(Ctx& c) {
  const auto* w = std::get_if<spec::Wreath>(&c.a.spec().node);
  const bool ok = w && is_symmetric_spec(*w->base) && is_symmetric_spec(*w->top);
  if (!c.hyp("group is a wreath product of a symmetric group by a symmetric group", ok,
             c.a.spec().construct())) {
    return;
  }
  c.conclude_out_col_trivial();
}

void check_holomorph(Ctx& c, bool nilpotent_base) {
  const bool hol = std::holds_alternative<spec::Holomorph>(c.a.spec().node);
  if (!c.hyp("group is a holomorph", hol, c.a.spec().construct())) return;
  const auto base = *c.a.built().base;
  const auto ib = induced_group(base);
  if (nilpotent_base) {
    if (!c.hyp("base is nilpotent", is_nilpotent(ib.group), subgroup_witness(base))) return;
  } else {
    const bool simple = ib.group.order() > 1 && is_simple(ib.group, c.a.limits());
    if (!c.hyp("base is simple", simple, subgroup_witness(base))) return;
  }
  c.conclude_out_col_trivial();
}

void check_unique_minimal_normal(Ctx& c) {
  const auto mins = minimal_normal_subgroups(c.a.group(), c.a.limits());
  json w = json::array();
  for (const auto& m : mins) w.push_back(subgroup_witness(m));
  if (!c.hyp("G has a unique minimal normal subgroup", mins.size() == 1, w)) return;
  if (!c.hyp("the minimal normal subgroup is non-abelian", !is_abelian(mins.front()),
             subgroup_witness(mins.front()))) {
    return;
  }
  c.conclude_out_col_trivial();
}

void check_layer_p_prime(Ctx& c) {
  const auto& k = c.a.group();
  const auto e = c.subgroup("E", "layer");
  if (!c.hyp("E is normal", is_normal(e), subgroup_witness(e))) return;
  const auto factors = nonabelian_simple_factors(e, c.a.limits());
  if (!c.hyp("E is a direct product of non-abelian simple groups", factors.has_value(),
             subgroup_witness(e))) {
    return;
  }
  std::optional<std::uint64_t> p = c.prime("p");
  if (!p) {
    std::uint64_t common = 0;
    for (const auto& f : *factors) common = std::gcd(common, static_cast<std::uint64_t>(f.order()));
    for (auto q : prime_divisors(common)) {
      if (q != 2) {
        p = q;
        break;
      }
    }
  }
  if (!c.hyp("p is an odd prime", p.has_value() && *p != 2, p ? json(*p) : json(nullptr))) return;
  const auto out = outside(centralizer(k, generators_of(e)), e);
  if (!c.hyp("C_K(E) is contained in E", !out, out ? element_witness(k, *out) : json(nullptr))) return;
  std::optional<SubgroupHandle> bad;
  for (const auto& f : *factors) {
    if (f.order() % *p != 0) bad = f;
  }
  if (!c.hyp("p divides the order of every simple factor of E", !bad,
             bad ? subgroup_witness(*bad) : json(nullptr))) {
    return;
  }
  const auto& oc = c.a.out_col();
  const bool ok = oc.order() % *p != 0;
  c.conclude(ok, "|Out_col| = " + std::to_string(oc.order()) + (ok ? " is prime to " : " is divisible by ") +
                     std::to_string(*p));
}

void check_cp_coleman_criterion(Ctx& c) {
  const auto& g = c.a.group();
  const auto n = c.subgroup("N", "derived");
  if (!c.hyp("N is normal", is_normal(n), subgroup_witness(n))) return;
  if (!c.hyp("G/N is abelian", is_abelian(quotient_group(n).quotient), subgroup_witness(n))) return;
  std::size_t checked = 0;
  for (const auto& sigma : c.a.class_preserving_coleman_automorphisms()) {
    const bool inner = is_inner(sigma);
    for (std::uint64_t p : g.prime_set()) {
      bool restricted = false;
      for (const auto& sylow : all_sylow_subgroups(g, p)) {
        const auto np = join(n, sylow);
        if (has_conjugation_witness(sigma, generators_of(np))) {
          restricted = true;
          break;
        }
      }
      ++checked;
      if (restricted != inner) {
        c.conclude(false, "automorphism " + automorphism_witness(sigma).dump() + " is " +
                              (inner ? "inner" : "not inner") + " but the restriction test for p = " +
                              std::to_string(p) + " says " + (restricted ? "inner" : "not inner"));
        return;
      }
    }
  }
  c.conclude(true, std::to_string(checked) + " (automorphism, prime) pairs agree with innerness");
}

bool nilpotent_normal_hypotheses(Ctx& c, const SubgroupHandle& n) {
  if (!c.hyp("N is normal", is_normal(n), subgroup_witness(n))) return false;
  return c.hyp("N is nilpotent", is_nilpotent(n), subgroup_witness(n));
}

bool quotient_is_cyclic(const SubgroupHandle& n) {
  const auto q = quotient_group(n).quotient;
  for (Element a = 0; a < q.order(); ++a) {
    if (q.element_order(a) == q.order()) return true;
  }
  return false;
}

void check_nilpotent_by_cyclic(Ctx& c, std::optional<std::uint64_t> fixed_prime) {
  const auto n = c.subgroup("N", "fitting");
  if (!nilpotent_normal_hypotheses(c, n)) return;
  if (!c.hyp("G/N is cyclic", quotient_is_cyclic(n), subgroup_witness(n))) return;
  std::vector<std::uint64_t> primes;
  if (fixed_prime) {
    const auto s = sylow_of_nilpotent(n, *fixed_prime);
    if (!c.hyp("the Sylow " + std::to_string(*fixed_prime) + "-subgroup of N is abelian",
               is_abelian(s), subgroup_witness(s))) {
      return;
    }
    primes.push_back(*fixed_prime);
  } else {
    std::vector<std::uint64_t> candidates;
    if (auto p = c.prime("p")) {
      candidates.push_back(*p);
    } else {
      candidates = c.a.group().prime_set();
    }
    for (auto p : candidates) {
      if (is_abelian(sylow_of_nilpotent(n, p))) primes.push_back(p);
    }
    if (!c.hyp("some prime p has an abelian Sylow p-subgroup of N", !primes.empty(), primes)) return;
  }
  c.conclude_cp_coleman_p_power_inner(primes);
}

void check_nilpotent_by_nilpotent(Ctx& c) {
  const auto n = c.subgroup("N", "fitting");
  if (!nilpotent_normal_hypotheses(c, n)) return;
  const auto quotient = quotient_group(n);
  if (!c.hyp("G/N is nilpotent", is_nilpotent(quotient.quotient), subgroup_witness(n))) return;
  std::vector<std::uint64_t> candidates;
  if (auto p = c.prime("p")) {
    candidates.push_back(*p);
  } else {
    candidates = c.a.group().prime_set();
  }
  std::vector<std::uint64_t> primes;
  for (auto p : candidates) {
    if (!is_abelian(sylow_of_nilpotent(n, p))) continue;
    const auto& q = quotient.quotient;
    const std::uint64_t target = p_part(q.order(), p);
    bool cyclic = false;
    for (Element a = 0; a < q.order() && !cyclic; ++a) cyclic = q.element_order(a) == target;
    if (cyclic) primes.push_back(p);
  }
  if (!c.hyp("some prime p has abelian Sylow p in N and cyclic Sylow p in G/N", !primes.empty(),
             primes)) {
    return;
  }
  c.conclude_cp_coleman_p_power_inner(primes);
}

std::optional<NilpotentByCyclicPresentation> presented(Ctx& c) {
  const auto n = c.subgroup("N", "fitting");
  if (!nilpotent_normal_hypotheses(c, n)) return std::nullopt;
  try {
    auto pres = presentation_from(n);
    c.hyp("G/N is cyclic of prime-power order", true,
          json{{"p", pres.p}, {"n", pres.n}, {"x", element_witness(pres.group, pres.x)}});
    return pres;
  } catch (const GroupError& e) {
    if (e.kind() != ErrorKind::QuotientNotCyclicPrimePower) throw;
    c.hyp("G/N is cyclic of prime-power order", false, e.what());
    return std::nullopt;
  }
}

void check_twist_commutators(Ctx& c) {
  const auto pres = presented(c);
  if (!pres) return;
  const auto& g = pres->group;
  const Element x_pn = g.power(pres->x, static_cast<std::int64_t>(pres->quotient_order()));
  const auto cn = centralizer(g, generators_of(pres->normal));
  const std::size_t ord_x = g.element_order(pres->x);
  std::size_t instances = 0;
  for (const auto& sigma : c.a.coleman_automorphisms()) {
    if (sigma(pres->x) != pres->x) continue;
    for (const auto& sylow : pres->sylows) {
      const auto gens = generators_of(sylow);
      Element xj = kIdentity;
      for (std::size_t j = 1; j <= ord_x; ++j) {
        xj = g.multiply(xj, pres->x);
        for (Element w : sylow.members()) {
          if (!agrees_on(sigma, g, gens, g.multiply(w, xj))) continue;
          ++instances;
          bool ok = g.commutator(w, x_pn) == kIdentity;
          Element xk = kIdentity;
          for (std::size_t k = 1; k <= ord_x && ok; ++k) {
            xk = g.multiply(xk, pres->x);
            ok = cn.contains(g.commutator(xk, g.inverse(w)));
          }
          if (!ok) {
            c.conclude(false, "twist " + g.label(w) + " with exponent " + std::to_string(j) +
                                  " for " + automorphism_witness(sigma).dump() +
                                  " violates the commutator conclusions");
            return;
          }
        }
      }
    }
  }
  c.conclude(true, std::to_string(instances) + " (automorphism, Sylow, w, j) instances satisfy the commutator conclusions");
}

void check_out_col_structure(Ctx& c) {
  const auto pres = presented(c);
  if (!pres) return;
  const auto& g = pres->group;
  const auto& oc = c.a.out_col();
  const auto k = predicted_k(*pres);
  std::ostringstream r_list;
  for (std::size_t i = 0; i < pres->r.size(); ++i) r_list << (i ? "," : "") << pres->r[i];
  const std::string context = "r = [" + r_list.str() + "], |K| = " + std::to_string(k.order) +
                              ", |Out_col| = " + std::to_string(oc.order());
  for (std::size_t i = 0; i < pres->r.size(); ++i) {
    if (pres->r.back() % pres->r[i] != 0) {
      c.conclude(false, "r_" + std::to_string(i + 1) + " does not divide r_k; " + context);
      return;
    }
  }
  if (!k.unclosed_d.empty()) {
    c.conclude(false, "twist set D_" + std::to_string(k.unclosed_d.front() + 1) +
                          " is not closed under multiplication; " + context);
    return;
  }
  if (k.order != oc.order()) {
    c.conclude(false, "predicted and computed orders differ; " + context);
    return;
  }
  auto coset_of = [&](const Automorphism& a) -> std::optional<std::size_t> {
    auto it = std::lower_bound(oc.ambient.begin(), oc.ambient.end(), a);
    if (it == oc.ambient.end() || !(*it == a)) return std::nullopt;
    return oc.coset_of[static_cast<std::size_t>(it - oc.ambient.begin())];
  };
  auto cosets_for = [&](const PredictedK& pk, std::vector<Automorphism>& phis)
      -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> cosets;
    for (const auto& spec : pk.elements) {
      auto phi = phi_automorphism(*pres, spec);
      auto coset = coset_of(phi);
      if (!coset || phi(pres->x) != pres->x) return std::nullopt;
      cosets.push_back(*coset);
      phis.push_back(std::move(phi));
    }
    return cosets;
  };
  std::vector<Automorphism> phis;
  std::optional<std::vector<std::size_t>> cosets;
  try {
    cosets = cosets_for(k, phis);
  } catch (const GroupError& e) {
    c.conclude(false, std::string("twisted power map failed: ") + e.what() + "; " + context);
    return;
  }
  if (!cosets) {
    c.conclude(false, "a predicted map is not a Coleman automorphism fixing x; " + context);
    return;
  }
  auto sorted = *cosets;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    c.conclude(false, "two predicted maps differ by an inner automorphism; " + context);
    return;
  }
  const auto generated = outer_quotient(generated_with_inner(g, phis));
  if (!is_isomorphic(generated.group, oc.group, c.a.limits()).isomorphic) {
    c.conclude(false, "the predicted maps generate a different outer group; " + context);
    return;
  }
  if (k.abelian_invariants && oc.abelian_invariants != k.abelian_invariants) {
    c.conclude(false, "abelian invariants differ: predicted " + describe_abelian(*k.abelian_invariants) +
                          ", computed " + describe_quotient(oc));
    return;
  }
  std::vector<Automorphism> alt_phis;
  auto alt = cosets_for(predicted_k(*pres, TransversalChoice::Highest), alt_phis);
  if (alt) std::sort(alt->begin(), alt->end());
  if (!alt || *alt != sorted) {
    c.conclude(false, "a different transversal choice gives different outer classes; " + context);
    return;
  }
  c.conclude(true, "Out_col ≅ " + describe_quotient(oc) + " matches the predicted K; " + context);
}

using CheckFn = std::function<void(Ctx&)>;

const std::map<std::string, CheckFn, std::less<>>& registry() {
  static const std::map<std::string, CheckFn, std::less<>> table{
      {"T1.3", check_prime_divisors},
      {"P1.4", check_direct_product},
      {"L1.5", check_normal_invariance},
      {"L1.6", check_fixed_normal},
      {"T1.7", check_heredity},
      {"T1.8", check_heredity_intersection},
      {"T1.11", check_simple_p_central},
      {"T2.1", check_minimal_characteristic},
      {"T2.2", check_self_centralizing_p_subgroup},
      {"C2.4", check_simple_power_base},
      {"C2.5", check_symmetric_wreath},
      {"T2.6", [](Ctx& c) { check_holomorph(c, false); }},
      {"C2.7", [](Ctx& c) { check_holomorph(c, true); }},
      {"T2.9a", check_unique_minimal_normal},
      {"T2.10", check_layer_p_prime},
      {"L3.5", check_twist_commutators},
      {"T3.7", check_out_col_structure},
      {"C4.2", check_cp_coleman_criterion},
      {"T4.1", [](Ctx& c) { check_nilpotent_by_cyclic(c, 2); }},
      {"T4.3", [](Ctx& c) { check_nilpotent_by_cyclic(c, std::nullopt); }},
      {"T4.4", check_nilpotent_by_nilpotent},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"T1.3", "P1.4", "L1.5", "L1.6", "T1.7", "T1.8",
                                            "T1.11", "T2.1", "T2.2", "C2.4", "C2.5", "T2.6",
                                            "C2.7", "T2.9a", "T2.10", "L3.5", "T3.7", "C4.2",
                                            "T4.1", "T4.3", "T4.4"};
  return ids;
}

SubgroupHandle resolve_subgroup(GroupAnalysis& analysis, const json& ref) {
  const auto& g = analysis.group();
  const auto& limits = analysis.limits();
  if (ref.is_string()) {
    const auto name = ref.get<std::string>();
    if (name == "whole") return whole_group(g);
    if (name == "trivial") return trivial_subgroup(g);
    if (name == "center") return center(g);
    if (name == "fitting") return fitting_subgroup(g, limits);
    if (name == "layer") return layer(g, limits);
    if (name == "derived") return derived_subgroup(g);
    if (name == "base" || name == "acting") {
      const auto& handle = name == "base" ? analysis.built().base : analysis.built().acting;
      if (!handle) bad_params("the group has no " + name + " subgroup");
      return *handle;
    }
    bad_params("unknown subgroup reference \"" + name + "\"");
  }
  if (ref.is_object()) {
    if (ref.contains("generators")) {
      const auto& gens = ref.at("generators");
      if (!gens.is_array()) bad_params("\"generators\" must be an array of element indices");
      std::vector<Element> seeds;
      for (const auto& e : gens) {
        if (!e.is_number_integer() || e.get<std::int64_t>() < 0 ||
            e.get<std::uint64_t>() >= g.order()) {
          bad_params("generator indices must lie in 0.." + std::to_string(g.order() - 1));
        }
        seeds.push_back(e.get<Element>());
      }
      return subgroup_generated(g, seeds);
    }
    if (ref.contains("O_p")) return core_subgroups(g, as_prime(ref.at("O_p"), "O_p"), limits).o_p;
    if (ref.contains("O_p_prime")) {
      return core_subgroups(g, as_prime(ref.at("O_p_prime"), "O_p_prime"), limits).o_p_prime;
    }
    if (ref.contains("sylow")) return sylow_subgroup(g, as_prime(ref.at("sylow"), "sylow"));
  }
  bad_params("unrecognised subgroup reference " + ref.dump());
}

VerificationReport check(std::string_view theorem_id, GroupAnalysis& analysis, const json& params) {
  const auto& table = registry();
  auto it = table.find(theorem_id);
  if (it == table.end()) {
    throw GroupError(ErrorKind::UnknownTheoremId, "unknown theorem id \"" + std::string(theorem_id) + "\"");
  }
  if (!params.is_null() && !params.is_object()) bad_params("parameters must be a JSON object");
  VerificationReport report;
  report.theorem = std::string(theorem_id);
  report.group = spec_to_json(analysis.spec());
  const auto start = std::chrono::steady_clock::now();
  try {
    Ctx ctx(analysis, params, report);
    it->second(ctx);
  } catch (const GroupError& e) {
    if (e.kind() != ErrorKind::OrderCapExceeded) throw;
    report.cap_notes.push_back(e.what());
  }
  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const bool hypotheses_hold = std::all_of(report.hypotheses.begin(), report.hypotheses.end(),
                                           [](const HypothesisCheck& h) { return h.passed; });
  if (!report.cap_notes.empty()) {
    report.status = ReportStatus::Incomplete;
    if (!hypotheses_hold) report.conclusion.reset();
  } else if (!hypotheses_hold) {
    report.status = ReportStatus::NotApplicable;
    report.conclusion.reset();
  } else if (!report.conclusion) {
    report.status = ReportStatus::Incomplete;
  } else {
    report.status = report.conclusion->passed ? ReportStatus::Passed : ReportStatus::Contradiction;
  }
  return report;
}

VerificationReport check(std::string_view theorem_id, const GroupSpec& spec, const json& params,
                         const Limits& limits) {
  GroupAnalysis analysis(spec, limits);
  return check(theorem_id, analysis, params);
}

}  // namespace coleman
