#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "coleman/analysis.hpp"
#include "coleman/report.hpp"

namespace coleman {

/// Identifiers accepted by check(), in a fixed order.
const std::vector<std::string>& theorem_ids();

/// Runs one theorem check. Hypotheses are evaluated first; if any fails the
/// report is "not-applicable" and carries no conclusion. Cap overruns are
/// recorded in cap_notes and mark the report "incomplete".
/// Throws UnknownTheoremId, and InvalidParams for malformed parameters.
VerificationReport check(std::string_view theorem_id, GroupAnalysis& analysis,
                         const nlohmann::json& params = nlohmann::json::object());
VerificationReport check(std::string_view theorem_id, const GroupSpec& spec,
                         const nlohmann::json& params = nlohmann::json::object(),
                         const Limits& limits = Limits::defaults());

/// Subgroup references used in check parameters:
///   "whole" | "trivial" | "center" | "fitting" | "layer" | "derived" |
///   "base" | "acting" | {"generators": [...]} | {"O_p": p} |
///   {"O_p_prime": p} | {"sylow": p}
SubgroupHandle resolve_subgroup(GroupAnalysis& analysis, const nlohmann::json& ref);

/// "1" for the trivial group, otherwise e.g. "C2 x C4".
std::string describe_abelian(const std::vector<std::uint64_t>& invariants);

}  // namespace coleman
