#include "coleman/finite_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "coleman/detail/closure.hpp"
#include "coleman/error.hpp"
#include "coleman/numeric.hpp"

namespace coleman {

struct FiniteGroup::Impl {
  std::size_t order = 1;
  std::vector<Element> table;
  Multiply lazy;
  std::vector<Element> inverse;
  std::vector<std::uint32_t> element_order;
  std::vector<std::string> labels;
  std::vector<std::uint64_t> primes;

  std::once_flag classes_once;
  std::vector<std::vector<Element>> classes;
  std::vector<std::uint32_t> class_of;

  std::once_flag gens_once;
  std::vector<Element> gens;

  detail::GroupCache cache;

  Element mul(Element a, Element b) const {
    if (!table.empty()) return table[static_cast<std::size_t>(a) * order + b];
    return lazy(a, b);
  }

  void finish() {
    primes = prime_divisors(order);
    inverse.assign(order, kIdentity);
    element_order.assign(order, 1);
    for (Element a = 0; a < order; ++a) {
      Element prev = kIdentity;
      Element cur = a;
      std::uint32_t k = 1;
      while (cur != kIdentity) {
        prev = cur;
        cur = mul(cur, a);
        ++k;
        if (k > order + 1) {
          throw GroupError(ErrorKind::InvalidSpec,
                           "multiplication does not define a finite group");
        }
      }
      // cur == a^k == e, prev == a^(k-1)
      element_order[a] = k;
      inverse[a] = prev;
    }
    for (Element a = 0; a < order; ++a) {
      if (mul(a, inverse[a]) != kIdentity) {
        throw GroupError(ErrorKind::InvalidSpec, "inverse table inconsistent");
      }
    }
  }
};

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table,
                                    std::vector<std::string> labels) {
  if (order == 0 || table.size() != order * order) {
    throw GroupError(ErrorKind::InvalidSpec, "table size does not match order");
  }
  for (std::size_t a = 0; a < order; ++a) {
    if (table[a] != a || table[a * order] != a) {
      throw GroupError(ErrorKind::InvalidSpec, "index 0 is not the identity");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->order = order;
  impl->table = std::move(table);
  impl->labels = std::move(labels);
  impl->finish();
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::from_function(std::size_t order, Multiply multiply,
                                       std::vector<std::string> labels,
                                       const Limits& limits) {
  if (order == 0) throw GroupError(ErrorKind::InvalidSpec, "order must be positive");
  if (order > limits.construction) {
    throw GroupError(ErrorKind::OrderCapExceeded,
                     "group order " + std::to_string(order) + " exceeds construction cap " +
                         std::to_string(limits.construction));
  }
  if (order <= limits.table_threshold) {
    std::vector<Element> table(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        table[a * order + b] = multiply(static_cast<Element>(a), static_cast<Element>(b));
      }
    }
    return from_table(order, std::move(table), std::move(labels));
  }
  auto impl = std::make_shared<Impl>();
  impl->order = order;
  impl->lazy = std::move(multiply);
  impl->labels = std::move(labels);
  impl->finish();
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::trivial() { return from_table(1, {0}, {"e"}); }

std::size_t FiniteGroup::order() const { return impl_->order; }

Element FiniteGroup::multiply(Element a, Element b) const { return impl_->mul(a, b); }

Element FiniteGroup::inverse(Element a) const { return impl_->inverse[a]; }

Element FiniteGroup::power(Element a, std::int64_t k) const {
  const auto ord = static_cast<std::int64_t>(impl_->element_order[a]);
  std::int64_t e = ((k % ord) + ord) % ord;
  Element result = kIdentity;
  Element base = a;
  while (e > 0) {
    if (e & 1) result = impl_->mul(result, base);
    base = impl_->mul(base, base);
    e >>= 1;
  }
  return result;
}

Element FiniteGroup::conjugate(Element x, Element g) const {
  return impl_->mul(impl_->mul(impl_->inverse[g], x), g);
}

Element FiniteGroup::commutator(Element a, Element b) const {
  return impl_->mul(impl_->mul(impl_->inverse[a], impl_->inverse[b]), impl_->mul(a, b));
}

std::size_t FiniteGroup::element_order(Element a) const { return impl_->element_order[a]; }

const std::vector<std::uint64_t>& FiniteGroup::prime_set() const { return impl_->primes; }

bool FiniteGroup::has_table() const { return !impl_->table.empty(); }

bool FiniteGroup::has_labels() const { return !impl_->labels.empty(); }

std::string FiniteGroup::label(Element a) const {
  if (a < impl_->labels.size()) return impl_->labels[a];
  return "#" + std::to_string(a);
}

const std::vector<std::string>& FiniteGroup::labels() const { return impl_->labels; }

const std::vector<std::vector<Element>>& FiniteGroup::conjugacy_classes() const {
  std::call_once(impl_->classes_once, [this] {
    const std::size_t n = impl_->order;
    impl_->class_of.assign(n, UINT32_MAX);
    for (Element x = 0; x < n; ++x) {
      if (impl_->class_of[x] != UINT32_MAX) continue;
      const auto id = static_cast<std::uint32_t>(impl_->classes.size());
      std::vector<Element> cls;
      for (Element g = 0; g < n; ++g) {
        const Element y = conjugate(x, g);
        if (impl_->class_of[y] == UINT32_MAX) {
          impl_->class_of[y] = id;
          cls.push_back(y);
        }
      }
      std::sort(cls.begin(), cls.end());
      impl_->classes.push_back(std::move(cls));
    }
  });
  return impl_->classes;
}

std::size_t FiniteGroup::class_index(Element a) const {
  conjugacy_classes();
  return impl_->class_of[a];
}

const std::vector<Element>& FiniteGroup::generating_sequence() const {
  std::call_once(impl_->gens_once, [this] {
    std::vector<Element> pool(impl_->order);
    std::iota(pool.begin(), pool.end(), Element{0});
    impl_->gens = detail::greedy_generators(*this, impl_->order, pool);
  });
  return impl_->gens;
}

detail::GroupCache& FiniteGroup::cache() const { return impl_->cache; }

namespace detail {

Closure trivial_closure(const FiniteGroup& group) {
  Closure c;
  c.mask.assign(group.order(), 0);
  c.members.push_back(kIdentity);
  c.mask[kIdentity] = 1;
  return c;
}

Closure close(const FiniteGroup& group, std::span<const Element> seeds) {
  Closure c = trivial_closure(group);
  extend_closure(group, c, seeds, seeds);
  return c;
}

void extend_closure(const FiniteGroup& group, Closure& closure,
                    std::span<const Element> all_gens,
                    std::span<const Element> new_gens) {
  const std::size_t old_size = closure.members.size();
  auto add = [&](Element t) {
    if (!closure.mask[t]) {
      closure.mask[t] = 1;
      closure.members.push_back(t);
    }
  };
  for (std::size_t i = 0; i < old_size; ++i) {
    const Element m = closure.members[i];
    for (Element s : new_gens) add(group.multiply(m, s));
  }
  for (std::size_t i = old_size; i < closure.members.size(); ++i) {
    const Element m = closure.members[i];
    for (Element s : all_gens) add(group.multiply(m, s));
  }
}

std::vector<Element> greedy_generators(const FiniteGroup& group, std::size_t target_order,
                                       std::span<const Element> pool) {
  constexpr std::size_t kExactGreedyLimit = 1024;
  const bool exact = target_order <= kExactGreedyLimit;
  std::vector<Element> gens;
  Closure current = trivial_closure(group);
  while (current.size() < target_order) {
    std::optional<Element> best;
    Closure best_closure;
    for (Element g : pool) {
      if (current.contains(g)) continue;
      if (best && best_closure.contains(g)) continue;  // cannot beat the current best
      Closure trial = current;
      std::vector<Element> all = gens;
      all.push_back(g);
      const Element fresh[] = {g};
      extend_closure(group, trial, all, fresh);
      if (!best || trial.size() > best_closure.size()) {
        best = g;
        best_closure = std::move(trial);
        if (!exact || best_closure.size() == target_order) break;
      }
    }
    if (!best) throw std::logic_error("greedy_generators: pool does not generate target");
    gens.push_back(*best);
    current = std::move(best_closure);
  }
  return gens;
}

}  // namespace detail
}  // namespace coleman
