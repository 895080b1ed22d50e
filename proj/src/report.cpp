#include "coleman/report.hpp"

namespace coleman {

using nlohmann::json;

std::string_view status_name(ReportStatus status) {
  switch (status) {
    case ReportStatus::Passed: return "passed";
    case ReportStatus::NotApplicable: return "not-applicable";
    case ReportStatus::Contradiction: return "contradiction";
    case ReportStatus::Incomplete: return "incomplete";
  }
  return "incomplete";
}

json VerificationReport::to_json(bool include_timing) const {
  json hyps = json::array();
  for (const auto& h : hypotheses) {
    hyps.push_back({{"name", h.name}, {"passed", h.passed}, {"witness", h.witness}});
  }
  json out{{"theorem", theorem},
           {"group", group},
           {"hypotheses", hyps},
           {"conclusion", nullptr},
           {"status", status_name(status)},
           {"timing_ms", include_timing ? timing_ms : 0.0},
           {"cap_notes", cap_notes}};
  if (conclusion) out["conclusion"] = {{"passed", conclusion->passed}, {"detail", conclusion->detail}};
  return out;
}

json element_witness(const FiniteGroup& group, Element e) {
  return {{"index", e}, {"label", group.label(e)}};
}

json subgroup_witness(const SubgroupHandle& subgroup) {
  json gens = json::array();
  for (Element g : generators_of(subgroup)) gens.push_back(element_witness(subgroup.parent(), g));
  return {{"order", subgroup.order()}, {"generators", gens}};
}

json automorphism_witness(const Automorphism& sigma) {
  json images = json::array();
  for (Element g : sigma.group().generating_sequence()) {
    images.push_back({{"element", g}, {"image", sigma(g)}});
  }
  return {{"order", sigma.order()}, {"generator_images", images}};
}

}  // namespace coleman
