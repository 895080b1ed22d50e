#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "coleman/finite_group.hpp"

namespace coleman {

/// A subgroup of `parent`, stored as a sorted index set.
class SubgroupHandle {
 public:
  /// Validates closure; throws GroupError(NotASubgroup) otherwise.
  SubgroupHandle(FiniteGroup parent, std::vector<Element> members);

  /// For member sets already known to be closed.
  static SubgroupHandle trusted(FiniteGroup parent, std::vector<Element> members);

  const FiniteGroup& parent() const { return parent_; }
  std::span<const Element> members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Element e) const { return mask_[e] != 0; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_.order(); }
  bool is_subset_of(const SubgroupHandle& other) const;

  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.parent_.same_as(b.parent_) && a.members_ == b.members_;
  }

 private:
  struct Trusted {};
  SubgroupHandle(Trusted, FiniteGroup parent, std::vector<Element> members);

  FiniteGroup parent_;
  std::vector<Element> members_;
  std::vector<char> mask_;
};

/// A homomorphism given by its images.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Element> images;

  Element operator()(Element a) const { return images[a]; }
  bool is_homomorphism() const;
  SubgroupHandle kernel() const;
  SubgroupHandle image() const;
};

struct PrimaryDecomposition {
  Element element;
  std::map<std::uint64_t, Element> parts;  // prime -> p-part
};

struct QuotientResult {
  FiniteGroup quotient;
  GroupHom projection;
  /// Lowest-index representative of each coset, in quotient index order.
  std::vector<Element> representatives;
};

/// A subgroup turned into a group of its own. Local index i corresponds to
/// parent element embedding[i]; local 0 is the identity.
struct InducedGroup {
  FiniteGroup group;
  std::vector<Element> embedding;
  std::vector<std::uint32_t> local;  // parent index -> local index, or UINT32_MAX

  Element to_local(Element parent_element) const { return local[parent_element]; }
  Element to_parent(Element local_element) const { return embedding[local_element]; }
  SubgroupHandle lift(const SubgroupHandle& local_subgroup, const FiniteGroup& parent) const;
};

SubgroupHandle trivial_subgroup(const FiniteGroup& group);
SubgroupHandle whole_group(const FiniteGroup& group);
SubgroupHandle subgroup_generated(const FiniteGroup& group, std::span<const Element> seeds);
SubgroupHandle join(const SubgroupHandle& a, const SubgroupHandle& b);
SubgroupHandle intersection(const SubgroupHandle& a, const SubgroupHandle& b);

/// A short generating set (greedy, see detail::greedy_generators).
std::vector<Element> generators_of(const SubgroupHandle& subgroup);

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& group);

SubgroupHandle centralizer(const FiniteGroup& group, std::span<const Element> elements);
SubgroupHandle center(const FiniteGroup& group);
SubgroupHandle normalizer(const SubgroupHandle& subgroup);
SubgroupHandle normal_closure(const FiniteGroup& group, std::span<const Element> seeds);
SubgroupHandle derived_subgroup(const FiniteGroup& group);
SubgroupHandle conjugate_subgroup(const SubgroupHandle& subgroup, Element g);
bool is_normal(const SubgroupHandle& subgroup);

/// Throws NotADivisor if p does not divide |G|.
SubgroupHandle sylow_subgroup(const FiniteGroup& group, std::uint64_t p);
/// All Sylow p-subgroups, ordered by member list; the canonical one is among them.
std::vector<SubgroupHandle> all_sylow_subgroups(const FiniteGroup& group, std::uint64_t p);

PrimaryDecomposition primary_decomposition(const FiniteGroup& group, Element x);
/// The p-part of x (identity when p does not divide the order of x).
Element p_part_of(const FiniteGroup& group, Element x, std::uint64_t p);

/// Throws NotNormal.
QuotientResult quotient_group(const SubgroupHandle& normal);

InducedGroup induced_group(const SubgroupHandle& subgroup);

}  // namespace coleman
