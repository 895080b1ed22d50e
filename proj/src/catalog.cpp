#include <array>

#include "coleman/coleman_structure.hpp"
#include "coleman/constructors.hpp"

namespace coleman {

GroupSpec quaternion_spec() {
  // Units 1, i, j, k with signs; point 2u + s stands for (-1)^s u.
  struct Signed {
    int sign;
    int unit;
  };
  static constexpr std::array<std::array<Signed, 4>, 4> kUnits{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto right_multiplication = [](int unit) {
    Permutation perm(8);
    for (int u = 0; u < 4; ++u) {
      for (int s = 0; s < 2; ++s) {
        const Signed prod = kUnits[u][unit];
        perm[2 * u + s] = static_cast<std::uint32_t>(2 * prod.unit + (s ^ prod.sign));
      }
    }
    return perm;
  };
  return GroupSpec::perm(8, {right_multiplication(1), right_multiplication(2)});
}

std::vector<CatalogEntry> standard_catalog(std::uint64_t max_order) {
  using S = GroupSpec;
  std::vector<std::pair<std::string, GroupSpec>> all;
  all.emplace_back("trivial", S::cyclic(1));
  for (std::uint64_t n : {2, 3, 4, 5, 6, 7, 8, 9, 12}) {
    all.emplace_back("C" + std::to_string(n), S::cyclic(n));
  }
  all.emplace_back("C2xC2", S::abelian({2, 2}));
  all.emplace_back("C2xC4", S::abelian({2, 4}));
  all.emplace_back("C2xC2xC2", S::abelian({2, 2, 2}));
  all.emplace_back("C3xC3", S::abelian({3, 3}));
  all.emplace_back("C2xC6", S::abelian({2, 6}));
  for (std::uint64_t n : {8, 10, 12, 24, 30}) {
    all.emplace_back("D" + std::to_string(n), S::dihedral(n));
  }
  all.emplace_back("Q8", quaternion_spec());
  all.emplace_back("S3", S::symmetric(3));
  all.emplace_back("S4", S::symmetric(4));
  all.emplace_back("S5", S::symmetric(5));
  all.emplace_back("A4", S::alternating(4));
  all.emplace_back("A5", S::alternating(5));
  all.emplace_back("A5xC2", S::direct({S::alternating(5), S::cyclic(2)}));
  // i -> j, j -> k on the quaternion generators (indices 2 and 4).
  all.emplace_back("SL(2,3)", S::semidirect(quaternion_spec(), S::cyclic(3), {{2, 4}}));
  all.emplace_back("C2wrC2", S::wreath(S::cyclic(2), S::cyclic(2)));
  all.emplace_back("S3wrS2", S::wreath(S::symmetric(3), S::symmetric(2)));
  all.emplace_back("S3wrS3", S::wreath(S::symmetric(3), S::symmetric(3)));
  for (std::uint64_t n : {3, 5, 7, 8, 9}) {
    all.emplace_back("Hol(C" + std::to_string(n) + ")", S::holomorph(S::cyclic(n)));
  }
  all.emplace_back("Hol(A5)", S::holomorph(S::alternating(5)));
  // Base generators of C3xC5 are indices 1 and 3; of C4xC3, 1 and 4.
  all.emplace_back("(C3xC5):C2", S::semidirect(S::abelian({3, 5}), S::cyclic(2), {{2, 12}}));
  all.emplace_back("(C3xC5):C4", S::semidirect(S::abelian({3, 5}), S::cyclic(4), {{2, 6}}));
  all.emplace_back("(C4xC3):C2", S::semidirect(S::abelian({4, 3}), S::cyclic(2), {{3, 8}}));
  all.emplace_back("C6xC2", S::direct({S::cyclic(6), S::cyclic(2)}));
  all.emplace_back("Dade(C2)", dade_construct({2}));
  all.emplace_back("Dade(C3)", dade_construct({3}));
  all.emplace_back("Dade(C2xC2)", dade_construct({2, 2}));
  all.emplace_back("Dade(C4)", dade_construct({4}));

  std::vector<CatalogEntry> out;
  for (auto& [name, spec] : all) {
    std::uint64_t order = 0;
    try {
      order = spec_order(spec);
    } catch (const std::exception&) {
      continue;
    }
    if (order <= max_order) out.push_back({name, std::move(spec), order});
  }
  return out;
}

}  // namespace coleman
