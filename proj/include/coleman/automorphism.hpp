#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "coleman/subgroup.hpp"

namespace coleman {

/// An automorphism of `group`, stored as the image of every element.
class Automorphism {
 public:
  /// Does not validate; see make_automorphism for the checked path.
  Automorphism(FiniteGroup group, std::vector<Element> images);

  static Automorphism identity(const FiniteGroup& group);
  /// conj(g): x -> g^-1 x g
  static Automorphism conjugation(const FiniteGroup& group, Element g);

  const FiniteGroup& group() const { return group_; }
  const std::vector<Element>& images() const { return images_; }
  Element operator()(Element x) const { return images_[x]; }

  bool is_identity() const;
  Automorphism inverse() const;
  std::size_t order() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.images_ == b.images_;
  }
  friend std::strong_ordering operator<=>(const Automorphism& a, const Automorphism& b) {
    return a.images_ <=> b.images_;
  }

 private:
  FiniteGroup group_;
  std::vector<Element> images_;
};

/// (a o b)(x) = a(b(x))
Automorphism compose(const Automorphism& a, const Automorphism& b);

bool is_automorphism(const FiniteGroup& group, std::span<const Element> images);
/// Throws NotAnAutomorphism when the map is not a bijective homomorphism.
Automorphism make_automorphism(const FiniteGroup& group, std::vector<Element> images);

/// Every automorphism, sorted by image vector (identity first).
/// Throws OrderCapExceeded above Limits::automorphism.
std::vector<Automorphism> automorphism_group(const FiniteGroup& group,
                                             const Limits& limits = Limits::defaults());

/// One automorphism per coset of Z(G), sorted.
std::vector<Automorphism> inner_automorphisms(const FiniteGroup& group);

/// Lowest-index g with sigma = conj(g), if any.
std::optional<Element> inner_witness(const Automorphism& sigma);
bool is_inner(const Automorphism& sigma);

bool is_class_preserving(const Automorphism& sigma);

/// Lowest-index g with sigma|_H = conj(g)|_H.
std::optional<Element> conjugation_witness(const Automorphism& sigma, const SubgroupHandle& subgroup);

struct ColemanCheck {
  bool coleman = true;
  std::map<std::uint64_t, Element> witnesses;   // prime -> g with sigma|_P = conj(g)|_P
  std::optional<std::uint64_t> failing_prime;
};

/// Checks the Coleman condition against the canonical Sylow subgroup of
/// each prime.
ColemanCheck coleman_check(const Automorphism& sigma);
bool is_coleman(const Automorphism& sigma);

/// True iff sigma fixes some Sylow p-subgroup elementwise. Throws NotADivisor.
bool is_p_central(const Automorphism& sigma, std::uint64_t p);

struct AutomorphismFlags {
  std::optional<Element> inner_witness;
  bool class_preserving = false;
  ColemanCheck coleman;
  std::vector<std::uint64_t> p_central_primes;
};
AutomorphismFlags classify_automorphism(const Automorphism& sigma);

/// Coleman automorphisms, sorted. Searched directly: a Coleman automorphism
/// sends every element of prime-power order to a conjugate, so generators of
/// prime-power order only need candidates from their own classes.
std::vector<Automorphism> aut_col(const FiniteGroup& group, const Limits& limits = Limits::defaults());
/// Class-preserving automorphisms, sorted.
std::vector<Automorphism> aut_c(const FiniteGroup& group, const Limits& limits = Limits::defaults());
/// Class-preserving Coleman automorphisms, sorted.
std::vector<Automorphism> aut_c_cap_col(const FiniteGroup& group,
                                        const Limits& limits = Limits::defaults());

/// A subgroup of Aut(G) containing Inn(G), taken modulo Inn(G).
struct OuterQuotient {
  std::vector<Automorphism> ambient;          // sorted
  FiniteGroup group = FiniteGroup::trivial();  // one element per coset; 0 is Inn(G)
  std::vector<Automorphism> representatives;  // least element of each coset
  std::vector<std::size_t> coset_of;          // ambient index -> coset index
  std::optional<std::vector<std::uint64_t>> abelian_invariants;

  std::size_t order() const { return representatives.size(); }
  bool is_trivial() const { return representatives.size() == 1; }
};

/// `ambient` must be a subgroup of Aut(G) containing Inn(G).
OuterQuotient outer_quotient(std::vector<Automorphism> ambient);

OuterQuotient out_col(const FiniteGroup& group, const Limits& limits = Limits::defaults());
OuterQuotient out_c(const FiniteGroup& group, const Limits& limits = Limits::defaults());
OuterQuotient out_c_cap_out_col(const FiniteGroup& group, const Limits& limits = Limits::defaults());
OuterQuotient out(const FiniteGroup& group, const Limits& limits = Limits::defaults());

/// The automorphisms as a group under composition, index i = auts[i].
/// The product of i and j is auts[i] o auts[j]. `auts` must be closed.
FiniteGroup automorphisms_as_group(const std::vector<Automorphism>& auts);

/// Image of a subgroup under sigma.
SubgroupHandle image_of(const Automorphism& sigma, const SubgroupHandle& subgroup);
bool is_invariant(const SubgroupHandle& subgroup, std::span<const Automorphism> auts);
/// Normal subgroups invariant under every automorphism in `auts`
/// (which should be all of Aut(G)), ordered like normal_subgroups.
std::vector<SubgroupHandle> characteristic_subgroups(const FiniteGroup& group,
                                                     std::span<const Automorphism> auts,
                                                     const Limits& limits = Limits::defaults());
std::vector<SubgroupHandle> minimal_characteristic_subgroups(const FiniteGroup& group,
                                                             std::span<const Automorphism> auts,
                                                             const Limits& limits = Limits::defaults());

}  // namespace coleman
