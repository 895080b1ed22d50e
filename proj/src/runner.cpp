#include "coleman/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>

#include "coleman/checkers.hpp"
#include "coleman/coleman_structure.hpp"
#include "coleman/error.hpp"
#include "coleman/normal.hpp"

namespace coleman {

using nlohmann::json;

json InvariantResult::to_json() const {
  return json{{"name", name}, {"passed", passed}, {"instances", instances}, {"detail", detail}};
}

InvariantResult twist_sets_closed(GroupAnalysis& analysis) {
  InvariantResult result{"twist sets D_i are subgroups", true, 0, ""};
  const auto& g = analysis.group();
  for (const auto& n : normal_subgroups(g, analysis.limits())) {
    if (n.is_whole() || !is_nilpotent(n)) continue;
    std::optional<NilpotentByCyclicPresentation> pres;
    try {
      pres = presentation_from(n);
    } catch (const GroupError& e) {
      if (e.kind() != ErrorKind::QuotientNotCyclicPrimePower) throw;
      continue;
    }
    for (std::size_t i = 0; i < pres->sylows.size(); ++i) {
      ++result.instances;
      if (!d_subgroup(*pres, i).closed) {
        result.passed = false;
        result.detail = "D_" + std::to_string(i + 1) + " is not closed for N " +
                        subgroup_witness(n).dump();
        return result;
      }
    }
  }
  result.detail = std::to_string(result.instances) + " twist sets checked";
  return result;
}

std::size_t GroupRun::count(ReportStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      reports.begin(), reports.end(), [&](const VerificationReport& r) { return r.status == status; }));
}

json GroupRun::to_json(bool include_timing) const {
  json reports_json = json::array();
  for (const auto& r : reports) reports_json.push_back(r.to_json(include_timing));
  json invariants_json = json::array();
  for (const auto& i : invariants) invariants_json.push_back(i.to_json());
  return json{{"name", name},
              {"order", order},
              {"out_col_order", out_col_order ? json(*out_col_order) : json(nullptr)},
              {"out_col", out_col_description},
              {"reports", reports_json},
              {"invariants", invariants_json},
              {"questions", questions.to_json()},
              {"cap_notes", cap_notes}};
}

std::vector<std::string> CatalogRun::contradictions() const {
  std::vector<std::string> out;
  for (const auto& g : groups) {
    for (const auto& r : g.reports) {
      if (r.status == ReportStatus::Contradiction) out.push_back(g.name + " " + r.theorem);
    }
  }
  return out;
}

std::vector<std::string> CatalogRun::invariant_violations() const {
  std::vector<std::string> out;
  for (const auto& g : groups) {
    for (const auto& i : g.invariants) {
      if (!i.passed) out.push_back(g.name + ": " + i.name);
    }
  }
  return out;
}

std::vector<std::string> CatalogRun::question_counterexamples() const {
  std::vector<std::string> out;
  for (const auto& g : groups) {
    for (const auto& a : g.questions.answers) {
      if (a.verdict != QuestionVerdict::Counterexample) continue;
      out.push_back(g.name + ": " + a.question +
                    (a.prime ? " at p = " + std::to_string(*a.prime) : ""));
    }
  }
  return out;
}

std::string CatalogRun::summary_table() const {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %8s  %-18s %6s %6s %6s %6s\n", "group", "order", "Out_col",
                "pass", "n/a", "incomp", "contra");
  out += line;
  for (const auto& g : groups) {
    std::snprintf(line, sizeof line, "%-16s %8llu  %-18s %6zu %6zu %6zu %6zu\n", g.name.c_str(),
                  static_cast<unsigned long long>(g.order),
                  g.out_col_order ? g.out_col_description.c_str() : "-",
                  g.count(ReportStatus::Passed), g.count(ReportStatus::NotApplicable),
                  g.count(ReportStatus::Incomplete), g.count(ReportStatus::Contradiction));
    out += line;
  }
  const auto contra = contradictions();
  const auto violations = invariant_violations();
  const auto questions = question_counterexamples();
  out += "\ncontradictions: " + std::to_string(contra.size()) + "\n";
  for (const auto& c : contra) out += "  " + c + "\n";
  out += "invariant violations: " + std::to_string(violations.size()) + "\n";
  for (const auto& v : violations) out += "  " + v + "\n";
  out += "question counterexample candidates: " + std::to_string(questions.size()) + "\n";
  for (const auto& q : questions) out += "  " + q + "\n";
  return out;
}

json CatalogRun::to_json(bool include_timing) const {
  json groups_json = json::array();
  for (const auto& g : groups) groups_json.push_back(g.to_json(include_timing));
  return json{{"groups", groups_json},
              {"contradictions", contradictions()},
              {"invariant_violations", invariant_violations()},
              {"question_counterexamples", question_counterexamples()}};
}

GroupRun run_group(const std::string& name, const GroupSpec& spec, const Limits& limits) {
  GroupRun run;
  run.name = name;
  GroupAnalysis analysis(spec, limits);
  for (const auto& id : theorem_ids()) run.reports.push_back(check(id, analysis));
  try {
    run.order = analysis.group().order();
    const auto& oc = analysis.out_col();
    run.out_col_order = oc.order();
    run.out_col_description = oc.abelian_invariants ? describe_abelian(*oc.abelian_invariants)
                                                    : "order " + std::to_string(oc.order());
  } catch (const GroupError& e) {
    if (e.kind() != ErrorKind::OrderCapExceeded) throw;
    run.cap_notes.push_back(e.what());
  }
  try {
    run.invariants.push_back(twist_sets_closed(analysis));
  } catch (const GroupError& e) {
    if (e.kind() != ErrorKind::OrderCapExceeded) throw;
    run.cap_notes.push_back(e.what());
  }
  run.questions = scan_group_questions(name, analysis);
  if (run.order == 0) run.order = spec_order(spec, limits);
  return run;
}

CatalogRun run_catalog(std::vector<CatalogEntry> catalog, const Limits& limits, unsigned workers) {
  std::sort(catalog.begin(), catalog.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, catalog.size())));

  std::vector<GroupRun> results(catalog.size());
  std::vector<std::exception_ptr> errors(catalog.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) {
      try {
        results[i] = run_group(catalog[i].name, catalog[i].spec, limits);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return CatalogRun{std::move(results)};
}

}  // namespace coleman
