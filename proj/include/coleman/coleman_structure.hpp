#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coleman/automorphism.hpp"
#include "coleman/spec.hpp"

namespace coleman {

/// G with a nilpotent normal N and G/N cyclic of order p^n generated by the
/// image of the p-element x.
struct NilpotentByCyclicPresentation {
  FiniteGroup group;
  SubgroupHandle normal;
  Element x;
  std::uint64_t p;
  unsigned n;
  /// Sylow subgroups of N, sorted by r ascending (ties: order, then lowest
  /// non-identity member).
  std::vector<SubgroupHandle> sylows;
  std::vector<std::uint64_t> sylow_primes;
  /// r[i]: least r > 0 with conj(x^r) = conj(h[i]) on sylows[i], h[i] in sylows[i].
  std::vector<std::uint64_t> r;
  std::vector<Element> h;
  /// Position of the Sylow p-subgroup of N among `sylows`, if p divides |N|.
  std::optional<std::size_t> p_position;

  std::uint64_t quotient_order() const;
};

/// Throws NotNormal, NotNilpotent, QuotientNotCyclicPrimePower.
NilpotentByCyclicPresentation presentation_from(const SubgroupHandle& normal);

/// Exponents j_i and twists w_i (w_i in sylows[i]) of a twisted power map.
struct PhiSpec {
  std::vector<std::uint64_t> exponents;
  std::vector<Element> twists;
};

/// The twist conditions: [w, x^(p^n)] = 1 and [x^t, w^-1] in C_G(N) for all t.
bool twist_admissible(const NilpotentByCyclicPresentation& pres, std::size_t i, Element w);

/// a_i -> (w_i x^j_i)^-1 a_i (w_i x^j_i) on each Sylow of N, x -> x.
/// Throws InvalidTwist if a twist is inadmissible and NotAnAutomorphism if
/// the resulting map fails the homomorphism check.
Automorphism phi_automorphism(const NilpotentByCyclicPresentation& pres, const PhiSpec& spec);

struct DSubgroup {
  std::vector<Element> members;  // sorted
  bool closed = false;
  std::optional<SubgroupHandle> handle;  // set when closed
};

/// D_i: the admissible twists in sylows[i].
DSubgroup d_subgroup(const NilpotentByCyclicPresentation& pres, std::size_t i);

enum class TransversalChoice { Lowest, Highest };

struct PredictedK {
  std::vector<PhiSpec> elements;
  std::uint64_t order = 1;
  /// Transversals of D_i modulo the twists that only change the inner class.
  std::vector<std::vector<Element>> transversals;
  /// Invariant factors of r_1, ..., r_(k-1); set when N is abelian.
  std::optional<std::vector<std::uint64_t>> abelian_invariants;
  /// Indices i with D_i not closed under multiplication.
  std::vector<std::size_t> unclosed_d;
};

PredictedK predicted_k(const NilpotentByCyclicPresentation& pres,
                       TransversalChoice choice = TransversalChoice::Lowest);

/// The subgroup of Aut(G) generated by the given automorphisms and Inn(G).
std::vector<Automorphism> generated_with_inner(const FiniteGroup& group,
                                               const std::vector<Automorphism>& auts);

inline constexpr std::uint64_t kDefaultPrimeSearchBound = 1'000'000;

/// A group whose Coleman outer automorphism group is the abelian group with
/// the given cyclic factor orders. Throws PrimeSearchExhausted if a suitable
/// prime exceeds `bound`, InvalidParams on zero orders.
GroupSpec dade_construct(const std::vector<std::uint64_t>& cyclic_orders,
                         std::uint64_t bound = kDefaultPrimeSearchBound);

}  // namespace coleman
