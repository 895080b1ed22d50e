#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coleman/automorphism.hpp"

namespace coleman {

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  nlohmann::json witness;  // null when there is nothing to show
};

struct ConclusionCheck {
  bool passed = false;
  std::string detail;
};

enum class ReportStatus { Passed, NotApplicable, Contradiction, Incomplete };

std::string_view status_name(ReportStatus status);

struct VerificationReport {
  std::string theorem;
  nlohmann::json group;
  std::vector<HypothesisCheck> hypotheses;
  std::optional<ConclusionCheck> conclusion;
  ReportStatus status = ReportStatus::Incomplete;
  double timing_ms = 0.0;
  std::vector<std::string> cap_notes;

  /// With include_timing false, timing_ms is written as 0 so reruns are
  /// byte-identical.
  nlohmann::json to_json(bool include_timing = true) const;
};

nlohmann::json element_witness(const FiniteGroup& group, Element e);
nlohmann::json subgroup_witness(const SubgroupHandle& subgroup);
/// Images of the group's generating sequence, plus the order.
nlohmann::json automorphism_witness(const Automorphism& sigma);

}  // namespace coleman
