#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "coleman/automorphism.hpp"
#include "coleman/constructors.hpp"
#include "coleman/error.hpp"
#include "coleman/isomorphism.hpp"
#include "coleman/normal.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace coleman;
using testing::catalog_group;

namespace {

std::vector<std::vector<Element>> image_lists(const std::vector<Automorphism>& auts) {
  std::vector<std::vector<Element>> out;
  for (const auto& a : auts) out.push_back(a.images());
  std::sort(out.begin(), out.end());
  return out;
}

// Restriction to A5 of conjugation by a transposition of S5.
Automorphism a5_outer() {
  const auto s5 = catalog_group("S5");
  const auto a5 = derived_subgroup(s5);
  const auto ig = induced_group(a5);
  Element t = 0;
  for (Element a = 0; a < s5.order(); ++a) {
    if (s5.element_order(a) == 2 && !a5.contains(a)) {
      t = a;
      break;
    }
  }
  std::vector<Element> images(ig.group.order());
  for (Element a = 0; a < images.size(); ++a) images[a] = ig.to_local(s5.conjugate(ig.to_parent(a), t));
  return make_automorphism(ig.group, images);
}

}  // namespace

TEST_CASE("automorphism group sizes") {
  CHECK(automorphism_group(catalog_group("C5")).size() == 4);
  CHECK(automorphism_group(catalog_group("C2xC2")).size() == 6);
  const auto s3 = automorphism_group(catalog_group("S3"));
  CHECK(s3.size() == 6);
  CHECK(std::all_of(s3.begin(), s3.end(), [](const Automorphism& a) { return is_inner(a); }));
  CHECK(automorphism_group(catalog_group("S4")).size() == 24);
  CHECK(automorphism_group(catalog_group("A4")).size() == 24);
  CHECK(automorphism_group(catalog_group("Q8")).size() == 24);
  CHECK(automorphism_group(catalog_group("D8")).size() == 8);
  CHECK(automorphism_group(catalog_group("A5")).size() == 120);
  CHECK(automorphism_group(catalog_group("trivial")).size() == 1);
}

TEST_CASE("automorphism groups match brute force") {
  for (const auto& e : standard_catalog(60)) {
    CAPTURE(e.name);
    const auto g = build(e.spec).group;
    const auto t = oracle::table_of(g);
    const auto auts = automorphism_group(g);
    CHECK(image_lists(auts) == oracle::automorphisms(t));
    CHECK(auts.front().is_identity());
  }
}

TEST_CASE("inner automorphisms") {
  CHECK(inner_automorphisms(catalog_group("S3")).size() == 6);
  CHECK(inner_automorphisms(catalog_group("Q8")).size() == 4);
  const auto s4 = catalog_group("S4");
  const auto id = Automorphism::identity(s4);
  CHECK(is_inner(id));
  CHECK(inner_witness(id) == Element{0});
  for (const auto& e : standard_catalog(100)) {
    CAPTURE(e.name);
    const auto g = build(e.spec).group;
    const auto inn = inner_automorphisms(g);
    CHECK(inn.size() == g.order() / center(g).order());
    for (Element x = 0; x < g.order(); ++x) {
      const auto c = Automorphism::conjugation(g, x);
      const auto w = inner_witness(c);
      REQUIRE(w.has_value());
      for (Element y = 0; y < g.order(); ++y) CHECK(c(y) == g.multiply(g.multiply(g.inverse(*w), y), *w));
    }
  }
}

TEST_CASE("Aut is a group and Inn is normal in it") {
  for (const char* name : {"S3", "D8", "Q8", "A4", "C2xC6", "Hol(C5)"}) {
    CAPTURE(name);
    const auto g = catalog_group(name);
    const auto auts = automorphism_group(g);
    const std::set<Automorphism> all(auts.begin(), auts.end());
    const auto inn = inner_automorphisms(g);
    const std::set<Automorphism> inner(inn.begin(), inn.end());
    for (const auto& a : auts) {
      CHECK(all.count(a.inverse()));
      CHECK(compose(a, a.inverse()).is_identity());
      for (const auto& b : auts) CHECK(all.count(compose(a, b)));
      for (const auto& i : inn) CHECK(inner.count(compose(compose(a.inverse(), i), a)));
    }
  }
}

TEST_CASE("make_automorphism validates") {
  const auto c4 = catalog_group("C4");
  std::vector<Element> squaring(4);
  for (Element a = 0; a < 4; ++a) squaring[a] = c4.multiply(a, a);
  try {
    make_automorphism(c4, squaring);
    FAIL("expected NotAnAutomorphism");
  } catch (const GroupError& e) {
    CHECK(e.kind() == ErrorKind::NotAnAutomorphism);
  }
  CHECK(!is_automorphism(c4, squaring));
}

TEST_CASE("class-preserving examples") {
  const auto c3 = catalog_group("C3");
  std::vector<Element> inv(3);
  for (Element a = 0; a < 3; ++a) inv[a] = c3.inverse(a);
  const auto inversion = make_automorphism(c3, inv);
  CHECK(!is_class_preserving(inversion));
  CHECK(!is_coleman(inversion));
  // The outer class of A4: conjugation by a transposition of S4.
  const auto s4 = catalog_group("S4");
  const auto a4 = derived_subgroup(s4);
  const auto ig = induced_group(a4);
  Element t = 0;
  for (Element a = 0; a < s4.order(); ++a) {
    if (s4.element_order(a) == 2 && !a4.contains(a)) {
      t = a;
      break;
    }
  }
  std::vector<Element> images(12);
  for (Element a = 0; a < 12; ++a) images[a] = ig.to_local(s4.conjugate(ig.to_parent(a), t));
  const auto outer = make_automorphism(ig.group, images);
  CHECK(!is_inner(outer));
  CHECK(!is_class_preserving(outer));
  for (const auto& a : inner_automorphisms(s4)) {
    CHECK(is_class_preserving(a));
    CHECK(is_coleman(a));
  }
}

TEST_CASE("class-preserving and Coleman filters match brute force") {
  for (const auto& e : standard_catalog(60)) {
    CAPTURE(e.name);
    const auto g = build(e.spec).group;
    const auto t = oracle::table_of(g);
    for (const auto& a : automorphism_group(g)) {
      CHECK(is_class_preserving(a) == oracle::is_class_preserving(t, a.images()));
      CHECK(is_inner(a) == oracle::is_inner(t, a.images()));
      CHECK(is_coleman(a) == oracle::is_coleman_all_sylows(t, a.images()));
    }
  }
}

TEST_CASE("restricted searches equal the filtered automorphism group") {
  for (const auto& e : standard_catalog(300)) {
    CAPTURE(e.name);
    const auto g = build(e.spec).group;
    if (g.order() > 300) continue;
    const auto all = automorphism_group(g);
    std::vector<Automorphism> col, cp, both;
    for (const auto& a : all) {
      const bool c = is_coleman(a), p = is_class_preserving(a);
      if (c) col.push_back(a);
      if (p) cp.push_back(a);
      if (c && p) both.push_back(a);
    }
    CHECK(aut_col(g) == col);
    CHECK(aut_c(g) == cp);
    CHECK(aut_c_cap_col(g) == both);
  }
}

TEST_CASE("Coleman and class-preserving sets are subgroups containing Inn") {
  for (const char* name : {"D30", "(C3xC5):C4", "Hol(C8)", "Dade(C3)", "D24"}) {
    CAPTURE(name);
    const auto g = catalog_group(name);
    for (const auto& set : {aut_col(g), aut_c(g)}) {
      const std::set<Automorphism> s(set.begin(), set.end());
      for (const auto& i : inner_automorphisms(g)) CHECK(s.count(i));
      for (const auto& a : set) {
        CHECK(s.count(a.inverse()));
        for (const auto& b : set) CHECK(s.count(compose(a, b)));
      }
    }
  }
}

TEST_CASE("p-central automorphisms") {
  const auto s4 = catalog_group("S4");
  const auto id = Automorphism::identity(s4);
  CHECK(is_p_central(id, 2));
  CHECK(is_p_central(id, 3));
  CHECK_THROWS_AS(is_p_central(id, 5), GroupError);
  CHECK(!is_p_central(a5_outer(), 2));
  // Conjugation by a central element of a Sylow subgroup fixes it pointwise.
  const auto p = sylow_subgroup(s4, 2);
  for (Element z : p.members()) {
    bool central = true;
    for (Element y : p.members()) central = central && s4.multiply(z, y) == s4.multiply(y, z);
    if (central) CHECK(is_p_central(Automorphism::conjugation(s4, z), 2));
  }
}

TEST_CASE("Out_col, Out_c and their intersection") {
  CHECK(out_col(catalog_group("Q8")).is_trivial());
  CHECK(out_col(catalog_group("D8")).is_trivial());
  CHECK(out_col(catalog_group("S4")).is_trivial());
  CHECK(out_col(catalog_group("A5")).is_trivial());
  const auto d30 = out_col(catalog_group("D30"));
  CHECK(d30.order() == 2);
  CHECK(d30.abelian_invariants == std::vector<std::uint64_t>{2});
  CHECK(out_c(catalog_group("S4")).is_trivial());
  CHECK(out_c(catalog_group("C2xC6")).is_trivial());
  for (const auto& e : standard_catalog(300)) {
    CAPTURE(e.name);
    const auto g = build(e.spec).group;
    const auto both = out_c_cap_out_col(g).order();
    CHECK(out_c(g).order() % both == 0);
    CHECK(out_col(g).order() % both == 0);
  }
}

TEST_CASE("Out_col order matches brute force") {
  for (const auto& e : standard_catalog(60)) {
    CAPTURE(e.name);
    const auto g = build(e.spec).group;
    CHECK(out_col(g).order() == oracle::out_col_order(oracle::table_of(g)));
  }
}

TEST_CASE("outer quotient multiplication follows composition") {
  for (const char* name : {"Dade(C2xC2)", "Dade(C4)", "D8", "Hol(C8)"}) {
    CAPTURE(name);
    const auto g = catalog_group(name);
    for (const auto& q : {out_col(g), out(g)}) {
      auto coset = [&](const Automorphism& a) {
        auto it = std::lower_bound(q.ambient.begin(), q.ambient.end(), a);
        REQUIRE(it != q.ambient.end());
        REQUIRE(*it == a);
        return q.coset_of[static_cast<std::size_t>(it - q.ambient.begin())];
      };
      CHECK(q.representatives.front().is_identity());
      for (std::size_t i = 0; i < q.order(); ++i) {
        CHECK(coset(q.representatives[i]) == i);
        for (std::size_t j = 0; j < q.order(); ++j) {
          CHECK(coset(compose(q.representatives[i], q.representatives[j])) ==
                q.group.multiply(static_cast<Element>(i), static_cast<Element>(j)));
        }
      }
    }
  }
  CHECK(out(catalog_group("D8")).order() == 2);
  CHECK(out(catalog_group("S3")).is_trivial());
  CHECK(out(catalog_group("C2xC2")).order() == 6);
}

TEST_CASE("automorphisms as a group") {
  const auto aut = automorphism_group(catalog_group("C2xC2"));
  CHECK(is_isomorphic(automorphisms_as_group(aut), catalog_group("S3")).isomorphic);
  const auto q8 = automorphism_group(catalog_group("Q8"));
  CHECK(is_isomorphic(automorphisms_as_group(q8), catalog_group("S4")).isomorphic);
}

TEST_CASE("characteristic subgroups") {
  const auto s4 = catalog_group("S4");
  const auto aut = automorphism_group(s4);
  CHECK(characteristic_subgroups(s4, aut).size() == 4);
  const auto mins = minimal_characteristic_subgroups(s4, aut);
  REQUIRE(mins.size() == 1);
  CHECK(mins.front().order() == 4);
  // In C2 x C2 no proper non-trivial subgroup is characteristic.
  const auto v4 = catalog_group("C2xC2");
  const auto v4_mins = minimal_characteristic_subgroups(v4, automorphism_group(v4));
  REQUIRE(v4_mins.size() == 1);
  CHECK(v4_mins.front().is_whole());
  // Coleman automorphisms fix every normal subgroup.
  for (const auto& e : standard_catalog(300)) {
    CAPTURE(e.name);
    const auto g = build(e.spec).group;
    const auto col = aut_col(g);
    for (const auto& n : normal_subgroups(g)) CHECK(is_invariant(n, col));
  }
}

TEST_CASE("automorphism cap") {
  Limits small;
  small.automorphism = 20;
  try {
    automorphism_group(catalog_group("S4"), small);
    FAIL("expected cap");
  } catch (const GroupError& e) {
    CHECK(e.kind() == ErrorKind::OrderCapExceeded);
  }
}
