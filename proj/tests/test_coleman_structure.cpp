#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "coleman/automorphism.hpp"
#include "coleman/coleman_structure.hpp"
#include "coleman/constructors.hpp"
#include "coleman/error.hpp"
#include "coleman/isomorphism.hpp"
#include "coleman/normal.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace coleman;
using testing::catalog_group;

namespace {

NilpotentByCyclicPresentation present(const FiniteGroup& g, const SubgroupHandle& n) {
  CHECK(n.parent().same_as(g));
  return presentation_from(n);
}

SubgroupHandle base_of(const BuiltGroup& b) {
  REQUIRE(b.base.has_value());
  return *b.base;
}

// Sorted element orders of the abelian group with these cyclic factors.
std::vector<std::size_t> abelian_profile(const std::vector<std::uint64_t>& orders) {
  std::vector<std::size_t> profile{1};
  for (auto n : orders) {
    std::vector<std::size_t> next;
    for (auto o : profile) {
      for (std::uint64_t k = 0; k < n; ++k) next.push_back(std::lcm(o, n / std::gcd(n, k)));
    }
    profile = std::move(next);
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

}  // namespace

TEST_CASE("presentations of the worked examples") {
  const auto d30 = build(testing::catalog_spec("(C3xC5):C2"));
  auto pres = presentation_from(base_of(d30));
  CHECK(pres.p == 2);
  CHECK(pres.n == 1);
  CHECK(pres.r == std::vector<std::uint64_t>{2, 2});
  CHECK(pres.h == std::vector<Element>{0, 0});
  CHECK(pres.group.element_order(pres.x) == 2);

  const auto c4 = build(testing::catalog_spec("(C3xC5):C4"));
  pres = presentation_from(base_of(c4));
  CHECK(pres.r == std::vector<std::uint64_t>{2, 4});
  CHECK(pres.quotient_order() == 4);

  // C6 x C2 with N = C6: trivial action.
  const auto g = catalog_group("C6xC2");
  std::optional<SubgroupHandle> c6;
  for (Element a = 0; a < g.order(); ++a) {
    if (g.element_order(a) == 6) {
      const std::vector<Element> seed{a};
      c6 = subgroup_generated(g, seed);
      break;
    }
  }
  REQUIRE(c6.has_value());
  pres = present(g, *c6);
  CHECK(pres.r == std::vector<std::uint64_t>{1, 1});
  CHECK(predicted_k(pres).order == 1);
}

TEST_CASE("presentation invariants") {
  for (const auto& e : standard_catalog(300)) {
    const auto g = build(e.spec).group;
    for (const auto& n : normal_subgroups(g)) {
      if (n.is_whole() || !is_nilpotent(n)) continue;
      std::optional<NilpotentByCyclicPresentation> pres;
      try {
        pres = presentation_from(n);
      } catch (const GroupError& err) {
        CHECK(err.kind() == ErrorKind::QuotientNotCyclicPrimePower);
        continue;
      }
      CAPTURE(e.name);
      CHECK(oracle::is_p_power(g.element_order(pres->x), pres->p));
      CHECK(std::is_sorted(pres->r.begin(), pres->r.end()));
      // The image of x generates G/N.
      const auto q = quotient_group(n);
      CHECK(q.quotient.element_order(q.projection(pres->x)) == q.quotient.order());
      // x^(r_i) acts on P_i as conjugation by h_i, and no smaller power does.
      for (std::size_t i = 0; i < pres->sylows.size(); ++i) {
        const auto& s = pres->sylows[i];
        const Element xr = g.power(pres->x, static_cast<std::int64_t>(pres->r[i]));
        CHECK(s.contains(pres->h[i]));
        for (Element a : s.members()) CHECK(g.conjugate(a, xr) == g.conjugate(a, pres->h[i]));
        for (std::uint64_t r = 1; r < pres->r[i]; ++r) {
          const Element xs = g.power(pres->x, static_cast<std::int64_t>(r));
          bool inner_on_s = false;
          for (Element w : s.members()) {
            bool same = true;
            for (Element a : s.members()) same = same && g.conjugate(a, xs) == g.conjugate(a, w);
            if (same) {
              inner_on_s = true;
              break;
            }
          }
          CHECK(!inner_on_s);
        }
        // r_i divides r_k.
        CHECK(pres->r.back() % pres->r[i] == 0);
      }
    }
  }
}

TEST_CASE("presentation errors") {
  const auto s4 = catalog_group("S4");
  const auto v4 = core_subgroups(s4, 2).o_p;
  try {
    presentation_from(v4);  // S4/V4 is S3, not cyclic
    FAIL("expected QuotientNotCyclicPrimePower");
  } catch (const GroupError& e) {
    CHECK(e.kind() == ErrorKind::QuotientNotCyclicPrimePower);
  }
  try {
    presentation_from(derived_subgroup(catalog_group("S5")));  // A5 is not nilpotent
    FAIL("expected NotNilpotent");
  } catch (const GroupError& e) {
    CHECK(e.kind() == ErrorKind::NotNilpotent);
  }
  try {
    presentation_from(sylow_subgroup(catalog_group("S3"), 2));
    FAIL("expected NotNormal");
  } catch (const GroupError& e) {
    CHECK(e.kind() == ErrorKind::NotNormal);
  }
}

TEST_CASE("twisted power maps") {
  const auto b = build(testing::catalog_spec("(C3xC5):C2"));
  const auto pres = presentation_from(base_of(b));
  const auto& g = pres.group;
  // Identity spec gives the identity.
  CHECK(phi_automorphism(pres, {{0, 0}, {0, 0}}).is_identity());
  // j = (1, 0): inverts the first Sylow, fixes the second, fixes x.
  const auto phi = phi_automorphism(pres, {{1, 0}, {0, 0}});
  CHECK(phi(pres.x) == pres.x);
  for (Element a : pres.sylows[0].members()) CHECK(phi(a) == g.inverse(a));
  for (Element a : pres.sylows[1].members()) CHECK(phi(a) == a);
  CHECK(is_coleman(phi));
  CHECK(!is_inner(phi));
  CHECK(!oracle::is_inner(oracle::table_of(g), phi.images()));
  CHECK(oracle::is_coleman_all_sylows(oracle::table_of(g), phi.images()));
  // j = (r_1, 0) with abelian base is the identity.
  CHECK(phi_automorphism(pres, {{pres.r[0], 0}, {0, 0}}).is_identity());
}

TEST_CASE("twist validation") {
  // In Hol(C9) with N = F = C9 x C3 type, some twists fail the conditions.
  const auto hol = catalog_group("SL(2,3)");
  const auto n = fitting_subgroup(hol);
  const auto pres = presentation_from(n);
  bool rejected = false;
  for (std::size_t i = 0; i < pres.sylows.size(); ++i) {
    for (Element w : pres.sylows[i].members()) {
      if (twist_admissible(pres, i, w)) continue;
      PhiSpec spec{std::vector<std::uint64_t>(pres.sylows.size(), 0),
                   std::vector<Element>(pres.sylows.size(), 0)};
      spec.twists[i] = w;
      try {
        phi_automorphism(pres, spec);
      } catch (const GroupError& e) {
        rejected = e.kind() == ErrorKind::InvalidTwist;
      }
    }
  }
  CHECK(rejected);
}

namespace {

struct PhiFinding {
  std::string group;
  std::size_t normal_order;
  Automorphism phi;
};

// Runs every predicted map of every presented instance in the catalog. Maps
// that fail to be Coleman are returned; all others are checked in place.
std::vector<PhiFinding> scan_phi_maps() {
  std::vector<PhiFinding> findings;
  for (const auto& e : standard_catalog(300)) {
    const auto g = build(e.spec).group;
    for (const auto& n : normal_subgroups(g)) {
      if (n.is_whole() || !is_nilpotent(n)) continue;
      std::optional<NilpotentByCyclicPresentation> pres;
      try {
        pres = presentation_from(n);
      } catch (const GroupError&) {
        continue;
      }
      CAPTURE(e.name);
      const auto k = predicted_k(*pres);
      CHECK(k.unclosed_d.empty());
      for (const auto& spec : k.elements) {
        const auto phi = phi_automorphism(*pres, spec);
        CHECK(phi(pres->x) == pres->x);
        if (is_coleman(phi)) continue;
        // The only failures allowed are twists at the Sylow p-position.
        REQUIRE(pres->p_position.has_value());
        CHECK(spec.twists[*pres->p_position] != 0);
        findings.push_back({e.name, n.order(), phi});
      }
    }
  }
  return findings;
}

}  // namespace

TEST_CASE("Phi maps fix x and are Coleman away from the p-position") {
  for (const auto& f : scan_phi_maps()) CHECK(f.group == "Hol(C8)");
}

// The twist conditions do not make the map Coleman when the twist lies in
// the Sylow p-subgroup of N and that subgroup is non-abelian: in Hol(C8),
// which is a 2-group, such a map is a non-inner automorphism fixing x.
TEST_CASE("a twist at the p-position can give a non-Coleman map") {
  const auto findings = scan_phi_maps();
  REQUIRE(!findings.empty());
  for (const auto& f : findings) {
    CAPTURE(f.group);
    CHECK(f.normal_order == 16);
    const auto t = oracle::table_of(f.phi.group());
    CHECK(oracle::is_p_power(t.n, 2));
    CHECK(!oracle::is_inner(t, f.phi.images()));
    CHECK(!oracle::is_coleman_all_sylows(t, f.phi.images()));
  }
}

TEST_CASE("twist sets") {
  const auto b = build(testing::catalog_spec("(C3xC5):C2"));
  const auto pres = presentation_from(base_of(b));
  const auto d1 = d_subgroup(pres, 0);
  CHECK(d1.closed);
  CHECK(d1.members.size() == pres.sylows[0].order());
  // With x central, every twist is admissible.
  const auto g = catalog_group("C6xC2");
  const auto f = sylow_subgroup(g, 3);
  std::vector<Element> seeds(f.members().begin(), f.members().end());
  for (Element a = 0; a < g.order(); ++a) {
    if (g.element_order(a) == 2) {
      seeds.push_back(a);
      break;
    }
  }
  const auto n = subgroup_generated(g, seeds);
  const auto p2 = presentation_from(n);
  for (std::size_t i = 0; i < p2.sylows.size(); ++i) {
    CHECK(d_subgroup(p2, i).members.size() == p2.sylows[i].order());
  }
  // D_i against a direct scan of the defining conditions.
  const auto c4 = build(testing::catalog_spec("(C3xC5):C4"));
  const auto p4 = presentation_from(base_of(c4));
  const auto& h = p4.group;
  const auto cn = centralizer(h, generators_of(p4.normal));
  const Element xpn = h.power(p4.x, static_cast<std::int64_t>(p4.quotient_order()));
  for (std::size_t i = 0; i < p4.sylows.size(); ++i) {
    std::vector<Element> expected;
    for (Element w : p4.sylows[i].members()) {
      bool ok = h.commutator(xpn, w) == 0;
      for (std::size_t t = 1; t <= h.element_order(p4.x) && ok; ++t) {
        ok = cn.contains(h.commutator(h.power(p4.x, static_cast<std::int64_t>(t)), h.inverse(w)));
      }
      if (ok) expected.push_back(w);
    }
    CHECK(d_subgroup(p4, i).members == expected);
  }
}

TEST_CASE("predicted K: worked examples") {
  const auto d30 = build(testing::catalog_spec("(C3xC5):C2"));
  auto k = predicted_k(presentation_from(base_of(d30)));
  CHECK(k.order == 2);
  CHECK(k.abelian_invariants == std::vector<std::uint64_t>{2});
  const auto c4 = build(testing::catalog_spec("(C3xC5):C4"));
  k = predicted_k(presentation_from(base_of(c4)));
  CHECK(k.order == 2);
  CHECK(k.abelian_invariants == std::vector<std::uint64_t>{2});
}

TEST_CASE("predicted K matches brute-force Out_col") {
  for (const auto& e : standard_catalog(300)) {
    const auto g = build(e.spec).group;
    const auto fit = fitting_subgroup(g);
    if (fit.is_whole()) continue;
    std::optional<NilpotentByCyclicPresentation> pres;
    try {
      pres = presentation_from(fit);
    } catch (const GroupError&) {
      continue;
    }
    CAPTURE(e.name);
    const auto oc = out_col(g);
    const auto k = predicted_k(*pres);
    CHECK(k.order == oc.order());
    std::vector<Automorphism> phis;
    std::vector<std::size_t> cosets;
    for (const auto& spec : k.elements) {
      phis.push_back(phi_automorphism(*pres, spec));
      auto it = std::lower_bound(oc.ambient.begin(), oc.ambient.end(), phis.back());
      REQUIRE(it != oc.ambient.end());
      cosets.push_back(oc.coset_of[static_cast<std::size_t>(it - oc.ambient.begin())]);
    }
    auto sorted = cosets;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    const auto gen = outer_quotient(generated_with_inner(g, phis));
    CHECK(is_isomorphic(gen.group, oc.group).isomorphic);
    if (k.abelian_invariants) {
      CHECK(oc.abelian_invariants == k.abelian_invariants);
      CHECK(oracle::order_profile(oracle::table_of(oc.group)) == abelian_profile(*k.abelian_invariants));
    }
    // A second transversal choice gives the same outer classes.
    std::vector<std::size_t> alt;
    for (const auto& spec : predicted_k(*pres, TransversalChoice::Highest).elements) {
      const auto phi = phi_automorphism(*pres, spec);
      auto it = std::lower_bound(oc.ambient.begin(), oc.ambient.end(), phi);
      REQUIRE(it != oc.ambient.end());
      alt.push_back(oc.coset_of[static_cast<std::size_t>(it - oc.ambient.begin())]);
    }
    std::sort(alt.begin(), alt.end());
    CHECK(alt == sorted);
  }
}

TEST_CASE("Dade construction") {
  const auto c2 = dade_construct({2});
  CHECK(spec_order(c2) == 30);
  const auto c3 = dade_construct({3});
  CHECK(spec_order(c3) == 273);
  const auto c22 = dade_construct({2, 2});
  CHECK(spec_order(c22) == 210);
  const auto c4 = dade_construct({4});
  CHECK(spec_order(c4) == 260);
  const auto& sd = std::get<spec::Semidirect>(c3.node);
  CHECK(std::get<spec::Abelian>(sd.base->node).invariants == std::vector<std::uint64_t>{7, 13});
  // The action on each base factor is by a root of unity of the right order.
  const auto& sd2 = std::get<spec::Semidirect>(c2.node);
  CHECK(std::get<spec::Abelian>(sd2.base->node).invariants == std::vector<std::uint64_t>{3, 5});
  CHECK(std::get<spec::Cyclic>(sd2.acting->node).n == 2);
  // Trivial H.
  CHECK(spec_order(dade_construct({})) == 1);
  CHECK(spec_order(dade_construct({1})) == 1);
  // Errors.
  try {
    dade_construct({0});
    FAIL("expected InvalidParams");
  } catch (const GroupError& e) {
    CHECK(e.kind() == ErrorKind::InvalidParams);
  }
  try {
    dade_construct({2}, 4);
    FAIL("expected PrimeSearchExhausted");
  } catch (const GroupError& e) {
    CHECK(e.kind() == ErrorKind::PrimeSearchExhausted);
  }
  for (const auto& [orders, profile] :
       std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>{
           {{2}, {2}}, {{3}, {3}}, {{2, 2}, {2, 2}}, {{4}, {4}}}) {
    CAPTURE(orders.size());
    const auto g = build(dade_construct(orders)).group;
    const auto oc = out_col(g);
    CHECK(oc.abelian_invariants == profile);
  }
}
