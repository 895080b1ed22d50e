#pragma once

#include <optional>
#include <vector>

#include "coleman/automorphism.hpp"
#include "coleman/constructors.hpp"

namespace coleman {

/// One group together with lazily computed automorphism data, so that a
/// series of checks on the same group shares the expensive searches.
/// Not thread-safe; use one instance per worker.
class GroupAnalysis {
 public:
  GroupAnalysis(GroupSpec spec, Limits limits = Limits::defaults());

  const GroupSpec& spec() const { return spec_; }
  const Limits& limits() const { return limits_; }
  const BuiltGroup& built();
  const FiniteGroup& group() { return built().group; }

  const std::vector<Automorphism>& automorphisms();
  const std::vector<Automorphism>& coleman_automorphisms();
  const std::vector<Automorphism>& class_preserving_automorphisms();
  const std::vector<Automorphism>& class_preserving_coleman_automorphisms();
  const OuterQuotient& out_col();
  const OuterQuotient& out_c();
  const OuterQuotient& out_c_cap_col();

 private:
  GroupSpec spec_;
  Limits limits_;
  std::optional<BuiltGroup> built_;
  std::optional<std::vector<Automorphism>> aut_, col_, c_, c_col_;
  std::optional<OuterQuotient> out_col_, out_c_, out_c_col_;
};

}  // namespace coleman
