#include "coleman/spec.hpp"

#include <fstream>

#include "coleman/error.hpp"

namespace coleman {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void bad(const std::string& message) {
  throw GroupError(ErrorKind::InvalidSpec, message);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t positive(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
    bad(std::string("field \"") + key + "\" must be a positive integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<std::uint32_t> index_list(const json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::uint32_t> out;
  for (const auto& e : v) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0) {
      bad(std::string(what) + " entries must be non-negative integers");
    }
    out.push_back(e.get<std::uint32_t>());
  }
  return out;
}

GroupSpec child(const json& j, const char* key) { return spec_from_json(field(j, key)); }

}  // namespace

std::string GroupSpec::construct() const {
  return std::visit(Overloaded{
                        [](const spec::Perm&) { return "perm"; },
                        [](const spec::Cyclic&) { return "cyclic"; },
                        [](const spec::Abelian&) { return "abelian"; },
                        [](const spec::Symmetric&) { return "symmetric"; },
                        [](const spec::Alternating&) { return "alternating"; },
                        [](const spec::Dihedral&) { return "dihedral"; },
                        [](const spec::Direct&) { return "direct"; },
                        [](const spec::Semidirect&) { return "semidirect"; },
                        [](const spec::Wreath&) { return "wreath"; },
                        [](const spec::Holomorph&) { return "holomorph"; },
                    },
                    node);
}

GroupSpec GroupSpec::perm(std::size_t degree, std::vector<Permutation> generators) {
  return {spec::Perm{degree, std::move(generators)}};
}
GroupSpec GroupSpec::cyclic(std::uint64_t n) { return {spec::Cyclic{n}}; }
GroupSpec GroupSpec::abelian(std::vector<std::uint64_t> invariants) {
  return {spec::Abelian{std::move(invariants)}};
}
GroupSpec GroupSpec::symmetric(std::uint64_t n) { return {spec::Symmetric{n}}; }
GroupSpec GroupSpec::alternating(std::uint64_t n) { return {spec::Alternating{n}}; }
GroupSpec GroupSpec::dihedral(std::uint64_t n) { return {spec::Dihedral{n}}; }
GroupSpec GroupSpec::direct(std::vector<GroupSpec> factors) {
  return {spec::Direct{std::move(factors)}};
}
GroupSpec GroupSpec::semidirect(GroupSpec base, GroupSpec acting,
                                std::vector<std::vector<std::uint32_t>> action) {
  return {spec::Semidirect{std::make_shared<const GroupSpec>(std::move(base)),
                           std::make_shared<const GroupSpec>(std::move(acting)),
                           std::move(action)}};
}
GroupSpec GroupSpec::wreath(GroupSpec base, GroupSpec top) {
  return {spec::Wreath{std::make_shared<const GroupSpec>(std::move(base)),
                       std::make_shared<const GroupSpec>(std::move(top))}};
}
GroupSpec GroupSpec::holomorph(GroupSpec base) {
  return {spec::Holomorph{std::make_shared<const GroupSpec>(std::move(base))}};
}

json spec_to_json(const GroupSpec& s) {
  return std::visit(
      Overloaded{
          [](const spec::Perm& p) {
            json gens = json::array();
            for (const auto& g : p.generators) gens.push_back(g);
            return json{{"construct", "perm"}, {"degree", p.degree}, {"generators", gens}};
          },
          [](const spec::Cyclic& c) { return json{{"construct", "cyclic"}, {"n", c.n}}; },
          [](const spec::Abelian& a) {
            return json{{"construct", "abelian"}, {"invariants", a.invariants}};
          },
          [](const spec::Symmetric& c) { return json{{"construct", "symmetric"}, {"n", c.n}}; },
          [](const spec::Alternating& c) {
            return json{{"construct", "alternating"}, {"n", c.n}};
          },
          [](const spec::Dihedral& c) { return json{{"construct", "dihedral"}, {"n", c.n}}; },
          [](const spec::Direct& d) {
            json factors = json::array();
            for (const auto& f : d.factors) factors.push_back(spec_to_json(f));
            return json{{"construct", "direct"}, {"factors", factors}};
          },
          [](const spec::Semidirect& d) {
            json action = json::array();
            for (const auto& a : d.action) action.push_back(a);
            return json{{"construct", "semidirect"},
                        {"base", spec_to_json(*d.base)},
                        {"acting", spec_to_json(*d.acting)},
                        {"action", action}};
          },
          [](const spec::Wreath& w) {
            return json{{"construct", "wreath"},
                        {"base", spec_to_json(*w.base)},
                        {"top", spec_to_json(*w.top)}};
          },
          [](const spec::Holomorph& h) {
            return json{{"construct", "holomorph"}, {"base", spec_to_json(*h.base)}};
          },
      },
      s.node);
}

GroupSpec spec_from_json(const json& j) {
  const json& c = field(j, "construct");
  if (!c.is_string()) bad("field \"construct\" must be a string");
  const auto kind = c.get<std::string>();
  if (kind == "perm") {
    const json& degree = field(j, "degree");
    if (!degree.is_number_integer() || degree.get<std::int64_t>() < 0) {
      bad("field \"degree\" must be a non-negative integer");
    }
    const json& gens = field(j, "generators");
    if (!gens.is_array()) bad("field \"generators\" must be an array");
    std::vector<Permutation> perms;
    for (const auto& g : gens) perms.push_back(index_list(g, "permutation"));
    return GroupSpec::perm(degree.get<std::size_t>(), std::move(perms));
  }
  if (kind == "cyclic") return GroupSpec::cyclic(positive(j, "n"));
  if (kind == "abelian") {
    std::vector<std::uint64_t> inv;
    const json& v = field(j, "invariants");
    if (!v.is_array()) bad("field \"invariants\" must be an array");
    for (const auto& e : v) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 1) {
        bad("abelian invariants must be positive integers");
      }
      inv.push_back(e.get<std::uint64_t>());
    }
    return GroupSpec::abelian(std::move(inv));
  }
  if (kind == "symmetric") return GroupSpec::symmetric(positive(j, "n"));
  if (kind == "alternating") return GroupSpec::alternating(positive(j, "n"));
  if (kind == "dihedral") {
    const auto n = positive(j, "n");
    if (n % 2 != 0) bad("dihedral order must be even");
    return GroupSpec::dihedral(n);
  }
  if (kind == "direct") {
    const json& v = field(j, "factors");
    if (!v.is_array()) bad("field \"factors\" must be an array");
    std::vector<GroupSpec> factors;
    for (const auto& f : v) factors.push_back(spec_from_json(f));
    return GroupSpec::direct(std::move(factors));
  }
  if (kind == "semidirect") {
    const json& v = field(j, "action");
    if (!v.is_array()) bad("field \"action\" must be an array");
    std::vector<std::vector<std::uint32_t>> action;
    for (const auto& a : v) action.push_back(index_list(a, "action"));
    return GroupSpec::semidirect(child(j, "base"), child(j, "acting"), std::move(action));
  }
  if (kind == "wreath") return GroupSpec::wreath(child(j, "base"), child(j, "top"));
  if (kind == "holomorph") return GroupSpec::holomorph(child(j, "base"));
  bad("unknown construct \"" + kind + "\"");
}

GroupSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open spec file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    bad("spec file " + path + " is not valid JSON: " + e.what());
  }
  return spec_from_json(j);
}

}  // namespace coleman
