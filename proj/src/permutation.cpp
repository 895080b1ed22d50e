#include "coleman/permutation.hpp"

#include <deque>
#include <unordered_map>

#include "coleman/error.hpp"

namespace coleman {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using PermutationIndex = std::unordered_map<Permutation, Element, PermutationHash>;

void validate(std::size_t degree, std::span<const Permutation> generators) {
  if (degree == 0) throw GroupError(ErrorKind::InvalidPermutation, "degree must be positive");
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& perm = generators[g];
    if (perm.size() != degree) {
      throw GroupError(ErrorKind::InvalidPermutation,
                       "generator " + std::to_string(g) + " has length " +
                           std::to_string(perm.size()) + ", expected " + std::to_string(degree));
    }
    std::vector<char> seen(degree, 0);
    for (auto v : perm) {
      if (v >= degree || seen[v]) {
        throw GroupError(ErrorKind::InvalidPermutation,
                         "generator " + std::to_string(g) + " is not a bijection");
      }
      seen[v] = 1;
    }
  }
}

// BFS closure; returns the element list and the index map.
std::vector<Permutation> bfs(std::size_t degree, std::span<const Permutation> generators,
                             const Limits& limits, PermutationIndex& index) {
  Permutation identity(degree);
  for (std::size_t i = 0; i < degree; ++i) identity[i] = static_cast<std::uint32_t>(i);
  std::vector<Permutation> elements{identity};
  index.emplace(identity, 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = compose(elements[head], gen);
      if (index.find(next) != index.end()) continue;
      if (elements.size() >= limits.construction) {
        throw GroupError(ErrorKind::OrderCapExceeded,
                         "permutation closure exceeds construction cap " +
                             std::to_string(limits.construction));
      }
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

}  // namespace

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Permutation invert(const Permutation& a) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint32_t>(i);
  return out;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += "(";
    std::size_t cur = start;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = 1;
      if (!first) out += " ";
      out += std::to_string(cur);
      first = false;
      cur = p[cur];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

PermutationClosure permutation_closure(std::size_t degree,
                                       std::span<const Permutation> generators,
                                       const Limits& limits) {
  validate(degree, generators);
  auto index = std::make_shared<PermutationIndex>();
  auto elements = std::make_shared<std::vector<Permutation>>(bfs(degree, generators, limits, *index));
  const std::size_t n = elements->size();

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : *elements) labels.push_back(cycle_notation(p));

  auto multiply = [elements, index](Element a, Element b) -> Element {
    return index->at(compose((*elements)[a], (*elements)[b]));
  };
  PermutationClosure result{
      FiniteGroup::from_function(n, multiply, std::move(labels), limits), *elements, {}};
  for (const auto& gen : generators) result.generator_indices.push_back(index->at(gen));
  return result;
}

FiniteGroup group_from_permutations(std::size_t degree,
                                    std::span<const Permutation> generators,
                                    const Limits& limits) {
  return permutation_closure(degree, generators, limits).group;
}

std::size_t permutation_group_order(std::size_t degree,
                                    std::span<const Permutation> generators,
                                    const Limits& limits) {
  validate(degree, generators);
  PermutationIndex index;
  return bfs(degree, generators, limits, index).size();
}

}  // namespace coleman
