#include "coleman/questions.hpp"

#include "coleman/error.hpp"
#include "coleman/normal.hpp"

namespace coleman {

using nlohmann::json;

std::string_view verdict_name(QuestionVerdict verdict) {
  switch (verdict) {
    case QuestionVerdict::Holds: return "holds";
    case QuestionVerdict::Vacuous: return "vacuous";
    case QuestionVerdict::Counterexample: return "counterexample";
  }
  return "?";
}

json QuestionAnswer::to_json() const {
  return json{{"question", question},
              {"prime", prime ? json(*prime) : json(nullptr)},
              {"premise", premise},
              {"conclusion", conclusion},
              {"verdict", verdict_name(verdict)}};
}

json GroupQuestions::to_json() const {
  json answers_json = json::array();
  for (const auto& a : answers) answers_json.push_back(a.to_json());
  return json{{"name", name}, {"order", order}, {"answers", answers_json}, {"cap_notes", cap_notes}};
}

json QuestionScan::to_json() const {
  json groups_json = json::array();
  for (const auto& g : groups) groups_json.push_back(g.to_json());
  return json{{"groups", groups_json}, {"counterexamples", counterexamples}};
}

namespace {

QuestionAnswer answer(std::string question, std::optional<std::uint64_t> prime, bool premise,
                      bool conclusion) {
  QuestionAnswer a{std::move(question), prime, premise, conclusion, QuestionVerdict::Vacuous};
  if (premise) a.verdict = conclusion ? QuestionVerdict::Holds : QuestionVerdict::Counterexample;
  return a;
}

}  // namespace

GroupQuestions scan_group_questions(const std::string& name, GroupAnalysis& analysis) {
  GroupQuestions out;
  out.name = name;
  try {
    const auto& g = analysis.group();
    const auto& limits = analysis.limits();
    out.order = g.order();
    const auto& oc = analysis.out_col();
    const auto series = chief_series(g, limits);
    for (std::uint64_t p : g.prime_set()) {
      bool cp_factor = false;
      for (std::size_t i = 1; i < series.size(); ++i) {
        if (series[i].order() / series[i - 1].order() == p) cp_factor = true;
      }
      out.answers.push_back(answer("Q1", p, !cp_factor, oc.order() % p != 0));
    }
    for (std::uint64_t p : g.prime_set()) {
      const bool premise = core_subgroups(g, p, limits).o_p_prime.is_trivial();
      out.answers.push_back(answer("Q2", p, premise, oc.is_trivial()));
    }
    const bool unique = minimal_normal_subgroups(g, limits).size() == 1;
    out.answers.push_back(answer("Q3", std::nullopt, unique, oc.is_trivial()));
  } catch (const GroupError& e) {
    if (e.kind() != ErrorKind::OrderCapExceeded) throw;
    out.answers.clear();
    out.cap_notes.push_back(e.what());
  }
  return out;
}

QuestionScan scan_questions(const std::vector<CatalogEntry>& catalog, std::uint64_t max_order,
                            const Limits& limits) {
  QuestionScan scan;
  for (const auto& entry : catalog) {
    if (entry.order > max_order) continue;
    GroupAnalysis analysis(entry.spec, limits);
    auto group = scan_group_questions(entry.name, analysis);
    for (const auto& a : group.answers) {
      if (a.verdict != QuestionVerdict::Counterexample) continue;
      scan.counterexamples.push_back(entry.name + ": " + a.question +
                                     (a.prime ? " at p = " + std::to_string(*a.prime) : ""));
    }
    scan.groups.push_back(std::move(group));
  }
  return scan;
}

}  // namespace coleman
