#include "coleman/analysis.hpp"

#include <algorithm>
#include <iterator>

namespace coleman {

GroupAnalysis::GroupAnalysis(GroupSpec spec, Limits limits)
    : spec_(std::move(spec)), limits_(limits) {}

const BuiltGroup& GroupAnalysis::built() {
  if (!built_) built_ = build(spec_, limits_);
  return *built_;
}

const std::vector<Automorphism>& GroupAnalysis::automorphisms() {
  if (!aut_) aut_ = automorphism_group(group(), limits_);
  return *aut_;
}

const std::vector<Automorphism>& GroupAnalysis::coleman_automorphisms() {
  if (!col_) col_ = aut_col(group(), limits_);
  return *col_;
}

const std::vector<Automorphism>& GroupAnalysis::class_preserving_automorphisms() {
  if (!c_) c_ = aut_c(group(), limits_);
  return *c_;
}

const std::vector<Automorphism>& GroupAnalysis::class_preserving_coleman_automorphisms() {
  if (!c_col_) {
    std::vector<Automorphism> both;
    const auto& c = class_preserving_automorphisms();
    const auto& col = coleman_automorphisms();
    std::set_intersection(c.begin(), c.end(), col.begin(), col.end(), std::back_inserter(both));
    c_col_ = std::move(both);
  }
  return *c_col_;
}

const OuterQuotient& GroupAnalysis::out_col() {
  if (!out_col_) out_col_ = outer_quotient(coleman_automorphisms());
  return *out_col_;
}

const OuterQuotient& GroupAnalysis::out_c() {
  if (!out_c_) out_c_ = outer_quotient(class_preserving_automorphisms());
  return *out_c_;
}

const OuterQuotient& GroupAnalysis::out_c_cap_col() {
  if (!out_c_col_) out_c_col_ = outer_quotient(class_preserving_coleman_automorphisms());
  return *out_c_col_;
}

}  // namespace coleman
