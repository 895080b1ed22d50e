#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coleman/analysis.hpp"
#include "coleman/checkers.hpp"
#include "coleman/coleman_structure.hpp"
#include "coleman/error.hpp"
#include "coleman/isomorphism.hpp"
#include "coleman/normal.hpp"
#include "coleman/numeric.hpp"
#include "coleman/runner.hpp"

using namespace coleman;
using nlohmann::json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitContradiction = 2;
constexpr int kExitIncomplete = 3;

void print_error(std::string_view kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

std::string join_numbers(const std::vector<std::uint64_t>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string images_line(const Automorphism& sigma) {
  std::string out = "[";
  const auto& images = sigma.images();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(images[i]);
  }
  return out + "]";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupError(ErrorKind::InvalidParams, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw GroupError(ErrorKind::InvalidParams, path + ": " + e.what());
  }
}

std::vector<std::uint64_t> parse_orders(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw GroupError(ErrorKind::InvalidParams, "invalid order \"" + item + "\" in --invariants");
    }
  }
  return out;
}

int cmd_group_show(const std::string& path, const Limits& limits) {
  const auto built = build(load_spec(path), limits);
  const auto& g = built.group;
  std::cout << "order: " << g.order() << "\n";
  std::cout << "primes: " << join_numbers(g.prime_set(), ", ") << "\n";
  std::cout << "center order: " << center(g).order() << "\n";
  std::cout << "conjugacy classes: " << g.conjugacy_classes().size() << "\n";
  std::cout << "normal subgroups: " << normal_subgroups(g, limits).size() << "\n";
  return 0;
}

int cmd_aut(const std::string& path, bool coleman_only, bool class_preserving,
            std::optional<std::uint64_t> p_central, const Limits& limits) {
  if (p_central && !is_prime(*p_central)) {
    throw GroupError(ErrorKind::InvalidParams, "--p-central expects a prime");
  }
  GroupAnalysis analysis(load_spec(path), limits);
  const auto& pool = coleman_only && class_preserving ? analysis.class_preserving_coleman_automorphisms()
                     : coleman_only                   ? analysis.coleman_automorphisms()
                     : class_preserving               ? analysis.class_preserving_automorphisms()
                                                      : analysis.automorphisms();
  std::vector<const Automorphism*> selected;
  for (const auto& sigma : pool) {
    if (p_central && !is_p_central(sigma, *p_central)) continue;
    selected.push_back(&sigma);
  }
  std::cout << "count: " << selected.size() << "\n";
  for (const auto* sigma : selected) std::cout << images_line(*sigma) << "\n";
  return 0;
}

int cmd_outcol(const std::string& path, const std::string& identify, const Limits& limits) {
  GroupAnalysis analysis(load_spec(path), limits);
  const auto& oc = analysis.out_col();
  std::cout << "|Out_col| = " << oc.order() << "\n";
  if (oc.abelian_invariants) {
    std::cout << "abelian invariants: [" << join_numbers(*oc.abelian_invariants, ", ") << "] ("
              << describe_abelian(*oc.abelian_invariants) << ")\n";
  } else {
    std::cout << "coset table:\n";
    const auto& q = oc.group;
    for (Element a = 0; a < q.order(); ++a) {
      std::string row;
      for (Element b = 0; b < q.order(); ++b) row += (b ? " " : "") + std::to_string(q.multiply(a, b));
      std::cout << "  " << row << "\n";
    }
  }
  if (!identify.empty()) {
    const auto target = build(load_spec(identify), limits).group;
    const bool iso = is_isomorphic(oc.group, target, limits).isomorphic;
    std::cout << "identify: " << (iso ? "isomorphic" : "not isomorphic") << " to target of order "
              << target.order() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& id, const std::string& path, const std::string& params_path,
               bool timing, const Limits& limits) {
  const json params = params_path.empty() ? json::object() : read_json_file(params_path);
  const auto report = check(id, load_spec(path), params, limits);
  std::cout << report.to_json(timing).dump(2) << "\n";
  switch (report.status) {
    case ReportStatus::Passed:
    case ReportStatus::NotApplicable: return 0;
    case ReportStatus::Contradiction: return kExitContradiction;
    case ReportStatus::Incomplete: return kExitIncomplete;
  }
  return kExitError;
}

int cmd_dade(const std::string& invariants, std::uint64_t bound) {
  const auto spec = dade_construct(parse_orders(invariants), bound);
  std::cout << spec_to_json(spec).dump(2) << "\n";
  return 0;
}

int cmd_catalog_run(std::uint64_t max_order, const std::string& json_path, unsigned workers,
                    bool timing, const Limits& limits) {
  const auto run = run_catalog(standard_catalog(max_order), limits, workers);
  std::cout << run.summary_table();
  for (const auto& g : run.groups) {
    std::cout << "\n== " << g.name << " (order " << g.order << ") ==\n";
    for (const auto& r : g.reports) {
      std::cout << "  " << r.theorem << ": " << status_name(r.status);
      if (r.conclusion) std::cout << " - " << r.conclusion->detail;
      std::cout << "\n";
    }
    for (const auto& i : g.invariants) {
      std::cout << "  invariant " << i.name << ": " << (i.passed ? "ok" : "VIOLATED") << " - "
                << i.detail << "\n";
    }
    for (const auto& a : g.questions.answers) {
      std::cout << "  " << a.question;
      if (a.prime) std::cout << " p=" << *a.prime;
      std::cout << ": " << verdict_name(a.verdict) << "\n";
    }
    for (const auto& note : g.cap_notes) std::cout << "  cap: " << note << "\n";
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw GroupError(ErrorKind::InvalidParams, "cannot write " + json_path);
    out << run.to_json(timing).dump(2) << "\n";
  }
  return run.clean() ? 0 : kExitContradiction;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coleman automorphism toolkit for finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  bool no_timing = false;
  bool extended_cap = false;
  app.add_flag("--no-timing", no_timing, "Write timing_ms as 0 so reports are byte-identical");
  app.add_flag("--extended-cap", extended_cap, "Raise the automorphism and isomorphism caps");

  auto* group_cmd = app.add_subcommand("group", "Group information");
  group_cmd->require_subcommand(1);
  group_cmd->fallthrough();
  std::string show_path;
  auto* show = group_cmd->add_subcommand("show", "Order, primes, center, classes, normal subgroups");
  show->add_option("spec", show_path, "Group spec JSON file")->required();

  auto* aut = app.add_subcommand("aut", "List automorphisms");
  std::string aut_path;
  bool coleman_only = false, class_preserving = false;
  std::optional<std::uint64_t> p_central;
  aut->add_option("spec", aut_path, "Group spec JSON file")->required();
  aut->add_flag("--coleman", coleman_only, "Only Coleman automorphisms");
  aut->add_flag("--class-preserving", class_preserving, "Only class-preserving automorphisms");
  aut->add_option("--p-central", p_central, "Only automorphisms fixing a Sylow p-subgroup pointwise");

  auto* outcol = app.add_subcommand("outcol", "Compute Out_col");
  std::string outcol_path, identify_path;
  outcol->add_option("spec", outcol_path, "Group spec JSON file")->required();
  outcol->add_option("--identify", identify_path, "Spec of a group to compare Out_col against");

  auto* verify = app.add_subcommand("verify", "Check one theorem on one group");
  std::string theorem_id, verify_path, params_path;
  verify->add_option("theorem", theorem_id, "Theorem id, e.g. T2.2")->required();
  verify->add_option("spec", verify_path, "Group spec JSON file")->required();
  verify->add_option("--params", params_path, "Parameter JSON file");

  auto* dade = app.add_subcommand("dade", "Build a group whose Out_col is a given abelian group");
  std::string invariants;
  std::uint64_t prime_bound = kDefaultPrimeSearchBound;
  dade->add_option("--invariants", invariants, "Comma-separated cyclic orders, e.g. 2,2")->required();
  dade->add_option("--prime-bound", prime_bound, "Largest prime tried in the search");

  auto* catalog = app.add_subcommand("catalog", "Regression catalog");
  catalog->require_subcommand(1);
  catalog->fallthrough();
  auto* run = catalog->add_subcommand("run", "Run every check over the catalog");
  std::uint64_t max_order = 2000;
  std::string json_path;
  unsigned workers = 0;
  run->add_option("--max-order", max_order, "Largest group order to include");
  run->add_option("--json", json_path, "Also write the full results as JSON");
  run->add_option("--workers", workers, "Worker threads (0: one per core)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("UsageError", e.what());
    return kExitError;
  }

  Limits limits = Limits::defaults();
  if (extended_cap) {
    limits.automorphism = std::max(limits.automorphism, Limits::kExtendedAutomorphismCap);
    limits.isomorphism = std::max(limits.isomorphism, Limits::kExtendedAutomorphismCap);
  }
  const bool timing = !no_timing;

  try {
    if (*show) return cmd_group_show(show_path, limits);
    if (*aut) return cmd_aut(aut_path, coleman_only, class_preserving, p_central, limits);
    if (*outcol) return cmd_outcol(outcol_path, identify_path, limits);
    if (*verify) return cmd_verify(theorem_id, verify_path, params_path, timing, limits);
    if (*dade) return cmd_dade(invariants, prime_bound);
    if (*run) return cmd_catalog_run(max_order, json_path, workers, timing, limits);
  } catch (const GroupError& e) {
    print_error(e.kind_name(), e.what());
    return kExitError;
  } catch (const std::exception& e) {
    print_error("InternalError", e.what());
    return kExitError;
  }
  return kExitError;
}
