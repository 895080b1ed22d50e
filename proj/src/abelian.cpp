#include "coleman/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "coleman/error.hpp"
#include "coleman/normal.hpp"
#include "coleman/numeric.hpp"

namespace coleman {

namespace {

using Row = std::vector<std::int64_t>;

// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, cur_s) = std::pair{cur_s, old_s - q * cur_s};
    std::tie(old_t, cur_t) = std::pair{cur_t, old_t - q * cur_t};
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

// Upper-triangular lattice basis maintained under row insertion, with
// entries above each pivot reduced modulo that pivot.
class HermiteBasis {
 public:
  explicit HermiteBasis(std::size_t dim) : rows_(dim) {}

  void insert(Row v) {
    const std::size_t dim = rows_.size();
    for (std::size_t c = 0; c < dim; ++c) {
      if (v[c] == 0) continue;
      if (rows_[c].empty()) {
        if (v[c] < 0) {
          for (auto& e : v) e = -e;
        }
        rows_[c] = std::move(v);
        reduce_above(c);
        return;
      }
      Row& b = rows_[c];
      std::int64_t s = 0, t = 0;
      const std::int64_t g = ext_gcd(b[c], v[c], s, t);
      const std::int64_t bc = b[c] / g, vc = v[c] / g;
      Row merged(dim), rest(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        merged[k] = s * b[k] + t * v[k];
        rest[k] = vc * b[k] - bc * v[k];
      }
      b = std::move(merged);
      reduce_above(c);
      v = std::move(rest);
    }
  }

  std::vector<Row> matrix() const {
    std::vector<Row> out;
    for (const auto& r : rows_) {
      out.push_back(r.empty() ? Row(rows_.size(), 0) : r);
    }
    return out;
  }

 private:
  void reduce_above(std::size_t c) {
    // Keep row c reduced by the later pivots, then reduce earlier rows by row c.
    for (std::size_t k = c + 1; k < rows_.size(); ++k) reduce_entry(rows_[c], k);
    for (std::size_t r = 0; r < c; ++r) {
      if (!rows_[r].empty()) reduce_entry(rows_[r], c);
    }
  }

  void reduce_entry(Row& row, std::size_t k) {
    if (rows_[k].empty() || rows_[k][k] == 0) return;
    const std::int64_t m = rows_[k][k];
    std::int64_t q = row[k] / m;
    if (row[k] - q * m < 0) --q;
    if (q == 0) return;
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= q * rows_[k][j];
  }

  std::vector<Row> rows_;
};

}  // namespace

std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  const std::size_t dim = std::min(rows, cols);
  for (std::size_t t = 0; t < dim; ++t) {
    while (true) {
      // Pivot: smallest non-zero absolute value in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) break;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const std::int64_t q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const std::int64_t q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any offending row into row t and go again.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
  }
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < dim; ++t) diag.push_back(std::llabs(m[t][t]));
  std::stable_partition(diag.begin(), diag.end(), [](std::int64_t d) { return d != 0; });
  return diag;
}

std::vector<std::uint64_t> invariant_factors(std::span<const std::uint64_t> cyclic_orders) {
  // Collect prime-power parts, then deal the largest powers per prime into
  // the last factors.
  std::map<std::uint64_t, std::vector<std::uint64_t>> powers;
  for (std::uint64_t n : cyclic_orders) {
    for (const auto& [p, e] : factorize(n)) powers[p].push_back(ipow(p, e));
  }
  std::size_t count = 0;
  for (auto& [p, list] : powers) {
    std::sort(list.begin(), list.end(), std::greater<>());
    count = std::max(count, list.size());
  }
  std::vector<std::uint64_t> out(count, 1);
  for (const auto& [p, list] : powers) {
    for (std::size_t i = 0; i < list.size(); ++i) out[count - 1 - i] *= list[i];
  }
  return out;
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& group) {
  if (!is_abelian(group)) {
    throw GroupError(ErrorKind::NotAbelian, "abelian invariants requested for a non-abelian group");
  }
  const std::size_t n = group.order();
  if (n == 1) return {};
  const auto& gens = group.generating_sequence();
  const std::size_t k = gens.size();

  // Exponent vectors along a BFS spanning tree; every edge x -> x*g_i
  // yields the relation v_x + e_i - v_{x g_i}.
  std::vector<Row> coords(n);
  std::vector<char> seen(n, 0);
  coords[kIdentity] = Row(k, 0);
  seen[kIdentity] = 1;
  std::vector<Element> queue{kIdentity};
  HermiteBasis basis(k);
  for (std::size_t idx = 0; idx < queue.size(); ++idx) {
    const Element x = queue[idx];
    for (std::size_t i = 0; i < k; ++i) {
      const Element y = group.multiply(x, gens[i]);
      Row step = coords[x];
      step[i] += 1;
      if (!seen[y]) {
        seen[y] = 1;
        coords[y] = std::move(step);
        queue.push_back(y);
      } else {
        Row rel(k);
        bool zero = true;
        for (std::size_t j = 0; j < k; ++j) {
          rel[j] = step[j] - coords[y][j];
          zero = zero && rel[j] == 0;
        }
        if (!zero) basis.insert(std::move(rel));
      }
    }
  }
  const auto diag = smith_diagonal(basis.matrix());
  std::vector<std::uint64_t> out;
  std::uint64_t product = 1;
  for (std::int64_t d : diag) {
    if (d == 0) throw std::logic_error("abelian_invariants: relation lattice is not of full rank");
    if (d > 1) out.push_back(static_cast<std::uint64_t>(d));
    product *= static_cast<std::uint64_t>(d);
  }
  if (product != n) throw std::logic_error("abelian_invariants: invariant product mismatch");
  return out;
}

}  // namespace coleman
