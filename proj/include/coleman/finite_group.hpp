#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "coleman/detail/group_cache.hpp"
#include "coleman/limits.hpp"

namespace coleman {

inline constexpr Element kIdentity = 0;

/// An immutable finite group on the element indices 0..order-1, with 0 the
/// identity. Copies share the underlying data, so passing by value is cheap
/// and all copies compare equal.
///
/// Small groups keep a full Cayley table; above Limits::table_threshold the
/// product is evaluated on demand through the construction callback.
class FiniteGroup {
 public:
  using Multiply = std::function<Element(Element, Element)>;

  /// Row-major table: table[a * order + b] = a*b.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table,
                                std::vector<std::string> labels = {});

  /// Builds from a product callback. The callback must be pure; it is
  /// retained only when the group is too large for a table.
  static FiniteGroup from_function(std::size_t order, Multiply multiply,
                                   std::vector<std::string> labels = {},
                                   const Limits& limits = Limits::defaults());

  static FiniteGroup trivial();

  std::size_t order() const;
  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const;
  Element power(Element a, std::int64_t k) const;
  /// g^-1 x g
  Element conjugate(Element x, Element g) const;
  /// [a, b] = a^-1 b^-1 a b
  Element commutator(Element a, Element b) const;
  std::size_t element_order(Element a) const;

  /// pi(G), sorted ascending.
  const std::vector<std::uint64_t>& prime_set() const;

  bool has_table() const;
  bool has_labels() const;
  std::string label(Element a) const;
  const std::vector<std::string>& labels() const;

  /// Conjugacy classes, each sorted, ordered by smallest member.
  const std::vector<std::vector<Element>>& conjugacy_classes() const;
  std::size_t class_index(Element a) const;

  /// Greedy generating sequence (see greedy_generators); cached.
  const std::vector<Element>& generating_sequence() const;

  /// Identity of the shared representation.
  bool same_as(const FiniteGroup& other) const { return impl_ == other.impl_; }

  detail::GroupCache& cache() const;

 private:
  struct Impl;
  explicit FiniteGroup(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

}  // namespace coleman
