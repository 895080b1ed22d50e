#pragma once

// Brute-force reference computations used only by the tests. They work on a
// plain multiplication table and share no code with the library's searches.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "coleman/finite_group.hpp"

namespace oracle {

using Index = std::uint32_t;
using Perm = std::vector<std::uint32_t>;

struct Table {
  std::size_t n = 0;
  std::vector<Index> mul;  // row-major
  std::vector<Index> inv;
  Index identity = 0;

  Index operator()(Index a, Index b) const { return mul[a * n + b]; }
};

inline Table table_of(const coleman::FiniteGroup& g) {
  Table t;
  t.n = g.order();
  t.mul.resize(t.n * t.n);
  for (Index a = 0; a < t.n; ++a) {
    for (Index b = 0; b < t.n; ++b) t.mul[a * t.n + b] = g.multiply(a, b);
  }
  for (Index a = 0; a < t.n; ++a) {
    if (t(a, a) == a) t.identity = a;
  }
  t.inv.resize(t.n);
  for (Index a = 0; a < t.n; ++a) {
    for (Index b = 0; b < t.n; ++b) {
      if (t(a, b) == t.identity) t.inv[a] = b;
    }
  }
  return t;
}

// Composition reading left to right: first a, then b.
inline Perm perm_mul(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

// Every element of the group generated by the permutations, by naive closure.
inline std::set<Perm> perm_closure(const std::vector<Perm>& gens, std::size_t degree) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        auto y = perm_mul(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline std::size_t element_order(const Table& t, Index a) {
  std::size_t k = 1;
  for (Index x = a; x != t.identity; x = t(x, a)) ++k;
  return k;
}

inline Index conj(const Table& t, Index x, Index g) { return t(t(t.inv[g], x), g); }

inline bool is_subgroup(const Table& t, const std::vector<Index>& s) {
  std::vector<char> in(t.n, 0);
  for (Index a : s) in[a] = 1;
  if (!in[t.identity]) return false;
  for (Index a : s) {
    for (Index b : s) {
      if (!in[t(a, b)]) return false;
    }
  }
  return true;
}

inline std::vector<Index> generated(const Table& t, const std::vector<Index>& seeds) {
  std::vector<char> in(t.n, 0);
  std::vector<Index> members{t.identity};
  in[t.identity] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Index s : seeds) {
      Index y = t(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

inline std::size_t center_order(const Table& t) {
  std::size_t count = 0;
  for (Index a = 0; a < t.n; ++a) {
    bool central = true;
    for (Index b = 0; b < t.n && central; ++b) central = t(a, b) == t(b, a);
    count += central;
  }
  return count;
}

inline std::vector<Index> class_ids(const Table& t) {
  std::vector<Index> id(t.n, UINT32_MAX);
  Index next = 0;
  for (Index a = 0; a < t.n; ++a) {
    if (id[a] != UINT32_MAX) continue;
    for (Index g = 0; g < t.n; ++g) id[conj(t, a, g)] = next;
    ++next;
  }
  return id;
}

inline std::size_t class_count(const Table& t) {
  const auto ids = class_ids(t);
  return *std::max_element(ids.begin(), ids.end()) + 1;
}

// Normal subgroups as unions of conjugacy classes closed under products.
inline std::size_t normal_subgroup_count(const Table& t) {
  const auto ids = class_ids(t);
  const std::size_t k = *std::max_element(ids.begin(), ids.end()) + 1;
  const Index id_class = ids[t.identity];
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (!(mask >> id_class & 1)) continue;
    std::vector<Index> s;
    for (Index a = 0; a < t.n; ++a) {
      if (mask >> ids[a] & 1) s.push_back(a);
    }
    if (t.n % s.size() == 0 && is_subgroup(t, s)) ++count;
  }
  return count;
}

// A small generating set picked greedily.
inline std::vector<Index> generators(const Table& t) {
  std::vector<Index> gens;
  std::vector<Index> span{t.identity};
  for (Index a = 0; a < t.n && span.size() < t.n; ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = generated(t, gens);
  }
  return gens;
}

// All automorphisms, as full image vectors, by trying every assignment of
// generator images and checking the extension against the whole table.
inline std::vector<std::vector<Index>> automorphisms(const Table& t) {
  const auto gens = generators(t);
  // Express every element as a word: element = parent * gens[via].
  std::vector<Index> parent(t.n, UINT32_MAX), via(t.n, 0), order{t.identity};
  parent[t.identity] = t.identity;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Index y = t(order[i], gens[j]);
      if (parent[y] == UINT32_MAX) {
        parent[y] = order[i];
        via[y] = static_cast<Index>(j);
        order.push_back(y);
      }
    }
  }
  std::vector<std::vector<Index>> out;
  std::vector<Index> choice(gens.size(), 0);
  std::vector<std::size_t> orders(t.n);
  for (Index a = 0; a < t.n; ++a) orders[a] = element_order(t, a);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == gens.size()) {
      std::vector<Index> img(t.n);
      img[t.identity] = t.identity;
      for (std::size_t i = 1; i < order.size(); ++i) {
        Index y = order[i];
        img[y] = t(img[parent[y]], choice[via[y]]);
      }
      std::vector<char> hit(t.n, 0);
      for (Index a = 0; a < t.n; ++a) {
        if (hit[img[a]]) return;
        hit[img[a]] = 1;
      }
      for (Index a = 0; a < t.n; ++a) {
        for (Index b = 0; b < t.n; ++b) {
          if (img[t(a, b)] != t(img[a], img[b])) return;
        }
      }
      out.push_back(img);
      return;
    }
    for (Index c = 0; c < t.n; ++c) {
      if (orders[c] != orders[gens[depth]]) continue;
      choice[depth] = c;
      rec(depth + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_p_power(std::size_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

inline std::size_t p_part(std::size_t n, std::uint64_t p) {
  std::size_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

inline std::vector<std::uint64_t> primes_of(std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  return out;
}

// One Sylow p-subgroup, grown from the trivial group by adjoining elements
// of the normalizer whose p-th power already lies in the current subgroup.
inline std::vector<Index> one_sylow(const Table& t, std::uint64_t p) {
  const std::size_t target = p_part(t.n, p);
  std::vector<Index> h{t.identity};
  while (h.size() < target) {
    std::vector<char> in(t.n, 0);
    for (Index a : h) in[a] = 1;
    bool grown = false;
    for (Index g = 0; g < t.n && !grown; ++g) {
      if (in[g]) continue;
      Index gp = t.identity;
      for (std::uint64_t i = 0; i < p; ++i) gp = t(gp, g);
      if (!in[gp]) continue;
      bool normalizes = true;
      for (Index a : h) {
        if (!in[conj(t, a, g)]) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      auto seeds = h;
      seeds.push_back(g);
      h = generated(t, seeds);
      grown = true;
    }
    if (!grown) return {};
  }
  return h;
}

inline std::vector<std::vector<Index>> all_sylows(const Table& t, std::uint64_t p) {
  const auto p0 = one_sylow(t, p);
  std::set<std::vector<Index>> seen;
  for (Index g = 0; g < t.n; ++g) {
    std::vector<Index> c;
    for (Index a : p0) c.push_back(conj(t, a, g));
    std::sort(c.begin(), c.end());
    seen.insert(c);
  }
  return {seen.begin(), seen.end()};
}

inline bool agrees_with_conjugation(const Table& t, const std::vector<Index>& img,
                                    const std::vector<Index>& members) {
  for (Index g = 0; g < t.n; ++g) {
    bool ok = true;
    for (Index a : members) {
      if (img[a] != conj(t, a, g)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// The defining condition checked on every Sylow subgroup for every prime.
inline bool is_coleman_all_sylows(const Table& t, const std::vector<Index>& img) {
  for (auto p : primes_of(t.n)) {
    for (const auto& s : all_sylows(t, p)) {
      if (!agrees_with_conjugation(t, img, s)) return false;
    }
  }
  return true;
}

inline bool is_class_preserving(const Table& t, const std::vector<Index>& img) {
  const auto ids = class_ids(t);
  for (Index a = 0; a < t.n; ++a) {
    if (ids[img[a]] != ids[a]) return false;
  }
  return true;
}

inline bool is_inner(const Table& t, const std::vector<Index>& img) {
  std::vector<Index> all(t.n);
  std::iota(all.begin(), all.end(), 0);
  return agrees_with_conjugation(t, img, all);
}

inline std::size_t inner_count(const Table& t) { return t.n / center_order(t); }

inline std::size_t out_col_order(const Table& t) {
  std::size_t col = 0;
  for (const auto& a : automorphisms(t)) col += is_coleman_all_sylows(t, a);
  return col / inner_count(t);
}

// Sorted element-order multiset; equal for isomorphic groups, and a
// complete invariant for abelian ones.
inline std::vector<std::size_t> order_profile(const Table& t) {
  std::vector<std::size_t> out;
  for (Index a = 0; a < t.n; ++a) out.push_back(element_order(t, a));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_abelian(const Table& t) {
  for (Index a = 0; a < t.n; ++a) {
    for (Index b = 0; b < a; ++b) {
      if (t(a, b) != t(b, a)) return false;
    }
  }
  return true;
}

}  // namespace oracle
