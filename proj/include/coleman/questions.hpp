#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coleman/analysis.hpp"
#include "coleman/constructors.hpp"

namespace coleman {

// The three open questions on Out_col, tested group by group:
//   Q1  no chief factor C_p          =>  Out_col is a p'-group
//   Q2  O_p'(G) = 1                   =>  Out_col = 1
//   Q3  unique minimal normal subgroup =>  Out_col = 1
// Q1 and Q2 are asked once per prime of |G|.

enum class QuestionVerdict { Holds, Vacuous, Counterexample };

std::string_view verdict_name(QuestionVerdict verdict);

struct QuestionAnswer {
  std::string question;
  std::optional<std::uint64_t> prime;
  bool premise = false;
  bool conclusion = false;
  QuestionVerdict verdict = QuestionVerdict::Vacuous;

  nlohmann::json to_json() const;
};

struct GroupQuestions {
  std::string name;
  std::uint64_t order = 0;
  std::vector<QuestionAnswer> answers;
  /// Set when a cap stopped the scan; answers are then empty.
  std::vector<std::string> cap_notes;

  bool skipped() const { return !cap_notes.empty(); }
  nlohmann::json to_json() const;
};

struct QuestionScan {
  std::vector<GroupQuestions> groups;
  /// One line per counterexample candidate, e.g. "G: Q2 at p = 3".
  std::vector<std::string> counterexamples;

  nlohmann::json to_json() const;
};

GroupQuestions scan_group_questions(const std::string& name, GroupAnalysis& analysis);

/// Scans every catalog entry of order at most max_order.
QuestionScan scan_questions(const std::vector<CatalogEntry>& catalog, std::uint64_t max_order,
                            const Limits& limits = Limits::defaults());

}  // namespace coleman
