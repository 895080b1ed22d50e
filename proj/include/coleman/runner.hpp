#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coleman/analysis.hpp"
#include "coleman/questions.hpp"
#include "coleman/report.hpp"

namespace coleman {

struct InvariantResult {
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  std::string detail;

  nlohmann::json to_json() const;
};

/// Every twist set D_i, for every nilpotent normal N with G/N a non-trivial
/// cyclic p-group, is a subgroup.
InvariantResult twist_sets_closed(GroupAnalysis& analysis);

struct GroupRun {
  std::string name;
  std::uint64_t order = 0;
  std::optional<std::size_t> out_col_order;
  std::string out_col_description;
  std::vector<VerificationReport> reports;
  std::vector<InvariantResult> invariants;
  GroupQuestions questions;
  std::vector<std::string> cap_notes;

  std::size_t count(ReportStatus status) const;
  nlohmann::json to_json(bool include_timing) const;
};

struct CatalogRun {
  std::vector<GroupRun> groups;  // sorted by name

  /// "group theorem-id" for every contradicted report.
  std::vector<std::string> contradictions() const;
  /// "group: invariant" for every violated invariant.
  std::vector<std::string> invariant_violations() const;
  std::vector<std::string> question_counterexamples() const;
  bool clean() const {
    return contradictions().empty() && invariant_violations().empty();
  }

  std::string summary_table() const;
  nlohmann::json to_json(bool include_timing) const;
};

GroupRun run_group(const std::string& name, const GroupSpec& spec,
                   const Limits& limits = Limits::defaults());

/// Runs every check, invariant and question on each entry. Work is spread
/// over `workers` threads (0 picks the hardware concurrency); the result is
/// the same whatever the scheduling.
CatalogRun run_catalog(std::vector<CatalogEntry> catalog, const Limits& limits = Limits::defaults(),
                       unsigned workers = 0);

}  // namespace coleman
