#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coleman/finite_group.hpp"

namespace coleman {

/// Invariant factors d_1 | d_2 | ... | d_m (all > 1) of a finite abelian
/// group; empty for the trivial group. Throws NotAbelian.
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& group);

/// Invariant factors of the product of cyclic groups of the given orders.
std::vector<std::uint64_t> invariant_factors(std::span<const std::uint64_t> cyclic_orders);

/// Diagonal of the Smith normal form of an integer matrix (absolute values,
/// in divisibility order, zeros last).
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> matrix);

}  // namespace coleman
