#pragma once

#include <cstddef>

namespace coleman {

/// Order caps applied by the search routines. They bound worst-case
/// backtracking and memory; they carry no mathematical meaning.
struct Limits {
  std::size_t construction = 20000;     // closure / product construction
  std::size_t automorphism = 512;       // Aut(G) and restricted searches
  std::size_t isomorphism = 512;        // is_isomorphic
  std::size_t subgroup_search = 4096;   // normal-subgroup lattice
  std::size_t table_threshold = 4096;   // full Cayley table at or below this order

  static constexpr std::size_t kExtendedAutomorphismCap = 1500;

  /// Defaults, with COLEMAN_MAX_ORDER (if set to a positive integer)
  /// replacing the automorphism, isomorphism and subgroup-search caps.
  static Limits from_env();

  /// Process-wide defaults; read from the environment once.
  static const Limits& defaults();
};

}  // namespace coleman
