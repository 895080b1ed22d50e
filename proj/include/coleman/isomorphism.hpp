#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "coleman/subgroup.hpp"

namespace coleman {

/// Backtracking search for homomorphisms source -> target determined by the
/// images of a generating sequence. After each generator is assigned, the
/// partial map is extended over the subgroup generated so far and checked
/// for consistency (and injectivity, if requested), so dead branches are cut
/// as early as possible.
struct HomSearchProblem {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Element> generators;                // must generate source
  std::vector<std::vector<Element>> candidates;   // per generator, in target
  bool injective = true;
};

/// Calls `visit` with each complete image vector, in candidate order.
/// `visit` returns false to stop the search.
void search_homomorphisms(const HomSearchProblem& problem,
                          const std::function<bool(const std::vector<Element>&)>& visit);

/// Isomorphism-invariant fingerprint of an element: its order, its class
/// size, and the class sizes of x^p for p in pi(G).
std::vector<std::vector<std::uint64_t>> element_fingerprints(const FiniteGroup& group);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<GroupHom> witness;
};

/// Throws OrderCapExceeded when both orders match and exceed the cap.
IsomorphismResult is_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                                const Limits& limits = Limits::defaults());

}  // namespace coleman
