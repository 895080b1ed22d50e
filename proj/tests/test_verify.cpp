#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coleman/checkers.hpp"
#include "coleman/error.hpp"
#include "coleman/normal.hpp"
#include "coleman/questions.hpp"
#include "coleman/runner.hpp"
#include "support.hpp"

using namespace coleman;
using nlohmann::json;
using testing::catalog_spec;

namespace {

json generators_ref(const SubgroupHandle& h) {
  json gens = json::array();
  for (Element g : generators_of(h)) gens.push_back(g);
  return json{{"generators", gens}};
}

bool has_failed_hypothesis(const VerificationReport& r) {
  for (const auto& h : r.hypotheses) {
    if (!h.passed) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("theorem ids") {
  CHECK(theorem_ids().size() == 21);
  for (const auto& id : theorem_ids()) {
    const auto r = check(id, catalog_spec("S3"));
    CHECK(r.theorem == id);
  }
  try {
    check("T9.9", catalog_spec("S3"));
    FAIL("expected UnknownTheoremId");
  } catch (const GroupError& e) {
    CHECK(e.kind() == ErrorKind::UnknownTheoremId);
  }
}

TEST_CASE("self-centralizing normal p-subgroup on S4") {
  const auto r = check("T2.2", catalog_spec("S4"), json{{"P", json{{"O_p", 2}}}});
  CHECK(r.status == ReportStatus::Passed);
  REQUIRE(r.conclusion.has_value());
  CHECK(r.conclusion->passed);
  for (const auto& h : r.hypotheses) CHECK(h.passed);
}

TEST_CASE("minimal characteristic subgroup on S4") {
  const auto r = check("T2.1", catalog_spec("S4"),
                       json{{"G", "whole"}, {"N", json{{"O_p", 2}}}});
  CHECK(r.status == ReportStatus::Passed);
  CHECK(r.hypotheses.size() == 5);
}

TEST_CASE("nilpotent-by-cyclic structure on the order-30 dihedral group") {
  const auto r = check("T3.7", catalog_spec("D30"));
  CHECK(r.status == ReportStatus::Passed);
  REQUIRE(r.conclusion.has_value());
  CHECK(r.conclusion->detail.find("Out_col ≅ C2") != std::string::npos);
  const auto r2 = check("T3.7", catalog_spec("(C3xC5):C4"));
  CHECK(r2.status == ReportStatus::Passed);
  CHECK(r2.conclusion->detail.find("r = [2,4]") != std::string::npos);
}

TEST_CASE("negative controls are not-applicable") {
  // Non-normal P.
  GroupAnalysis s4(catalog_spec("S4"));
  auto r = check("T2.2", s4, json{{"P", json{{"sylow", 2}}}});
  CHECK(r.status == ReportStatus::NotApplicable);
  CHECK(!r.conclusion.has_value());
  // P not self-centralizing: the centre of D8 inside D8.
  GroupAnalysis d8(catalog_spec("D8"));
  r = check("T2.2", d8, json{{"P", "center"}});
  CHECK(r.status == ReportStatus::NotApplicable);
  CHECK(!r.conclusion.has_value());
  // A non-minimal characteristic subgroup: A4 inside S4.
  r = check("T2.1", s4, json{{"N", "derived"}});
  CHECK(r.status == ReportStatus::NotApplicable);
  CHECK(!r.conclusion.has_value());
  // Every failed hypothesis carries a witness.
  for (const auto& h : r.hypotheses) {
    if (!h.passed) CHECK(!h.witness.is_null());
  }
  // The trivial group as N.
  r = check("T2.1", s4, json{{"N", "trivial"}});
  CHECK(r.status == ReportStatus::NotApplicable);
  // Wrong family.
  r = check("C2.5", catalog_spec("S4"));
  CHECK(r.status == ReportStatus::NotApplicable);
  // S3 is not simple.
  r = check("C2.4", catalog_spec("S3wrS2"));
  CHECK(r.status == ReportStatus::NotApplicable);
  r = check("T2.6", catalog_spec("Hol(C8)"));
  CHECK(r.status == ReportStatus::NotApplicable);
}

TEST_CASE("report invariants across the catalog") {
  for (const auto& e : standard_catalog(300)) {
    CAPTURE(e.name);
    GroupAnalysis analysis(e.spec);
    for (const auto& id : theorem_ids()) {
      CAPTURE(id);
      const auto r = check(id, analysis);
      CHECK(r.status != ReportStatus::Contradiction);
      if (has_failed_hypothesis(r)) {
        CHECK(!r.conclusion.has_value());
        CHECK(r.status == ReportStatus::NotApplicable);
      }
      if (r.status == ReportStatus::Passed) CHECK(r.conclusion.has_value());
      const auto j = r.to_json(false);
      CHECK(j.at("theorem") == id);
      CHECK(j.at("hypotheses").is_array());
      CHECK(j.at("cap_notes").is_array());
      CHECK(j.at("timing_ms") == 0.0);
    }
  }
}

TEST_CASE("standard checks on their standard groups") {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"T2.1", "S4"},      {"T2.2", "S4"},     {"T2.6", "Hol(C5)"}, {"T2.6", "Hol(C7)"},
      {"C2.4", "C2wrC2"},  {"C2.5", "C2wrC2"},  {"C2.5", "S3wrS2"},
      {"C2.7", "Hol(C8)"}, {"C2.7", "Hol(C9)"}, {"T4.1", "A4"},     {"T4.1", "D30"},
      {"T4.3", "A4"},      {"T4.3", "D24"},    {"T2.9a", "A5"},     {"T2.10", "A5"},
      {"T1.11", "A5"},     {"P1.4", "A5xC2"},  {"C4.2", "S4"},      {"T4.4", "A4"}};
  for (const auto& [id, name] : cases) {
    CAPTURE(id);
    CAPTURE(name);
    CHECK(check(id, catalog_spec(name)).status == ReportStatus::Passed);
  }
}

TEST_CASE("simple-power base with a complement") {
  auto r = check("C2.4", catalog_spec("S3wrS2"), json{{"base", json{{"O_p", 3}}}});
  CHECK(r.status == ReportStatus::Passed);
  // The Klein four subgroup of D8 is self-centralizing and complemented by a reflection.
  GroupAnalysis d8(catalog_spec("D8"));
  bool found = false;
  for (const auto& m : normal_subgroups(d8.group())) {
    if (m.order() != 4 || d8.group().element_order(generators_of(m).front()) != 2) continue;
    bool klein = true;
    for (Element e : m.members()) klein = klein && d8.group().element_order(e) <= 2;
    if (!klein) continue;
    found = true;
    r = check("C2.4", d8, json{{"base", generators_ref(m)}});
    CHECK(r.status == ReportStatus::Passed);
  }
  CHECK(found);
  // The centre of Q8 has no complement.
  r = check("C2.4", catalog_spec("Q8"), json{{"base", "center"}});
  CHECK(r.status == ReportStatus::NotApplicable);
  REQUIRE(r.hypotheses.size() == 3);
  CHECK(r.hypotheses.back().name == "base has a complement");
  CHECK(!r.hypotheses.back().passed);
}

TEST_CASE("a p-position twist contradicts the predicted structure") {
  GroupAnalysis hol(catalog_spec("Hol(C8)"));
  const auto& g = hol.group();
  std::optional<SubgroupHandle> n;
  for (const auto& m : normal_subgroups(g)) {
    if (m.order() == 16 && !is_abelian(m)) {
      n = m;
      break;
    }
  }
  REQUIRE(n.has_value());
  const auto r = check("T3.7", hol, json{{"N", generators_ref(*n)}});
  CHECK(r.status == ReportStatus::Contradiction);
}

TEST_CASE("parameter errors") {
  GroupAnalysis s4(catalog_spec("S4"));
  for (const json& params : {json{{"P", "nonsense"}}, json{{"P", json{{"O_p", 4}}}},
                             json{{"P", json{{"generators", json::array({999})}}}},
                             json::array({1, 2}), json{{"N", "base"}}}) {
    CAPTURE(params.dump());
    try {
      check("T2.1", s4, params.contains("P") ? json{{"N", params.at("P")}} : params);
      FAIL("expected InvalidParams");
    } catch (const GroupError& e) {
      CHECK(e.kind() == ErrorKind::InvalidParams);
    }
  }
}

TEST_CASE("cap overruns mark reports incomplete") {
  Limits small;
  small.automorphism = 10;
  const auto r = check("T2.2", catalog_spec("S4"), json::object(), small);
  CHECK(r.status == ReportStatus::Incomplete);
  CHECK(!r.cap_notes.empty());
  const auto big = check("T2.6", catalog_spec("Hol(A5)"));
  CHECK(big.status == ReportStatus::Incomplete);
  CHECK(!big.cap_notes.empty());
}

TEST_CASE("reports are deterministic") {
  for (const char* id : {"T3.7", "T2.2", "L1.6", "C4.2"}) {
    const auto a = check(id, catalog_spec("Dade(C2xC2)")).to_json(false).dump();
    const auto b = check(id, catalog_spec("Dade(C2xC2)")).to_json(false).dump();
    CHECK(a == b);
  }
}

TEST_CASE("question scanner") {
  GroupAnalysis s4(catalog_spec("S4"));
  const auto q = scan_group_questions("S4", s4);
  bool q2_at_2 = false;
  for (const auto& a : q.answers) {
    if (a.question == "Q2" && a.prime == 2u) {
      q2_at_2 = true;
      CHECK(a.premise);
      CHECK(a.verdict == QuestionVerdict::Holds);
    }
  }
  CHECK(q2_at_2);
  GroupAnalysis a5(catalog_spec("A5"));
  const auto qa = scan_group_questions("A5", a5);
  REQUIRE(!qa.answers.empty());
  CHECK(qa.answers.back().question == "Q3");
  CHECK(qa.answers.back().premise);
  CHECK(qa.answers.back().verdict == QuestionVerdict::Holds);
  GroupAnalysis one(catalog_spec("trivial"));
  for (const auto& a : scan_group_questions("trivial", one).answers) {
    CHECK(a.verdict != QuestionVerdict::Counterexample);
  }
  // Q1 on D30: C2 is a chief factor, so the question is vacuous at p = 2.
  GroupAnalysis d30(catalog_spec("D30"));
  for (const auto& a : scan_group_questions("D30", d30).answers) {
    if (a.question == "Q1" && a.prime == 2u) CHECK(a.verdict == QuestionVerdict::Vacuous);
  }
  const auto scan = scan_questions(standard_catalog(300), 300);
  CHECK(scan.counterexamples.empty());
  CHECK(scan.groups.size() == standard_catalog(300).size());
}

TEST_CASE("catalog runner") {
  const auto run = run_catalog(standard_catalog(60), Limits::defaults(), 3);
  CHECK(run.clean());
  CHECK(run.contradictions().empty());
  CHECK(run.invariant_violations().empty());
  for (std::size_t i = 1; i < run.groups.size(); ++i) CHECK(run.groups[i - 1].name < run.groups[i].name);
  const auto single = run_catalog(standard_catalog(60), Limits::defaults(), 1);
  CHECK(single.to_json(false).dump() == run.to_json(false).dump());
  CHECK(run.summary_table().find("contradictions: 0") != std::string::npos);
}
