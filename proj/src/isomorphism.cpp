#include "coleman/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "coleman/error.hpp"

namespace coleman {

namespace {

constexpr Element kUnset = UINT32_MAX;

class HomSearch {
 public:
  HomSearch(const HomSearchProblem& problem,
            const std::function<bool(const std::vector<Element>&)>& visit)
      : p_(problem),
        visit_(visit),
        image_(problem.source.order(), kUnset),
        used_(problem.target.order(), 0),
        gen_images_(problem.generators.size(), kIdentity) {
    image_[kIdentity] = kIdentity;
    used_[kIdentity] = 1;
    defined_.push_back(kIdentity);
  }

  void run() {
    if (p_.generators.empty()) {
      visit_(image_);
      return;
    }
    descend(0);
  }

 private:
  bool descend(std::size_t level) {
    for (Element candidate : p_.candidates[level]) {
      const std::size_t mark = defined_.size();
      gen_images_[level] = candidate;
      const bool ok = extend(level, mark);
      bool keep_going = true;
      if (ok) {
        if (level + 1 == p_.generators.size()) {
          keep_going = visit_(image_);
        } else {
          keep_going = descend(level + 1);
        }
      }
      undo(mark);
      if (!keep_going) return false;
    }
    return true;
  }

  bool extend(std::size_t level, std::size_t mark) {
    const auto& src = p_.source;
    const auto& dst = p_.target;
    for (std::size_t idx = 0; idx < defined_.size(); ++idx) {
      const Element h = defined_[idx];
      const std::size_t first_gen = idx < mark ? level : 0;
      for (std::size_t j = first_gen; j <= level; ++j) {
        const Element t = src.multiply(h, p_.generators[j]);
        const Element expected = dst.multiply(image_[h], gen_images_[j]);
        if (image_[t] == kUnset) {
          if (p_.injective && used_[expected]) return false;
          image_[t] = expected;
          used_[expected] = 1;
          defined_.push_back(t);
        } else if (image_[t] != expected) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    for (std::size_t idx = mark; idx < defined_.size(); ++idx) {
      used_[image_[defined_[idx]]] = 0;
      image_[defined_[idx]] = kUnset;
    }
    defined_.resize(mark);
  }

  const HomSearchProblem& p_;
  const std::function<bool(const std::vector<Element>&)>& visit_;
  std::vector<Element> image_;
  std::vector<char> used_;
  std::vector<Element> gen_images_;
  std::vector<Element> defined_;
};

}  // namespace

void search_homomorphisms(const HomSearchProblem& problem,
                          const std::function<bool(const std::vector<Element>&)>& visit) {
  if (problem.candidates.size() != problem.generators.size()) {
    throw std::invalid_argument("search_homomorphisms: one candidate list per generator");
  }
  HomSearch search(problem, visit);
  search.run();
}

std::vector<std::vector<std::uint64_t>> element_fingerprints(const FiniteGroup& group) {
  const auto& classes = group.conjugacy_classes();
  std::vector<std::vector<std::uint64_t>> prints(group.order());
  for (Element x = 0; x < group.order(); ++x) {
    auto& fp = prints[x];
    fp.push_back(group.element_order(x));
    fp.push_back(classes[group.class_index(x)].size());
    for (std::uint64_t p : group.prime_set()) {
      const Element xp = group.power(x, static_cast<std::int64_t>(p));
      fp.push_back(classes[group.class_index(xp)].size());
    }
  }
  return prints;
}

IsomorphismResult is_isomorphic(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits) {
  if (a.order() != b.order()) return {};
  if (a.order() > limits.isomorphism) {
    throw GroupError(ErrorKind::OrderCapExceeded,
                     "isomorphism test on order " + std::to_string(a.order()) +
                         " exceeds cap " + std::to_string(limits.isomorphism));
  }
  const auto fa = element_fingerprints(a);
  const auto fb = element_fingerprints(b);
  std::map<std::vector<std::uint64_t>, std::size_t> histogram_a, histogram_b;
  for (const auto& f : fa) ++histogram_a[f];
  for (const auto& f : fb) ++histogram_b[f];
  if (histogram_a != histogram_b) return {};

  HomSearchProblem problem{a, b, a.generating_sequence(), {}, true};
  for (Element g : problem.generators) {
    std::vector<Element> cands;
    for (Element y = 0; y < b.order(); ++y) {
      if (fb[y] == fa[g]) cands.push_back(y);
    }
    problem.candidates.push_back(std::move(cands));
  }
  IsomorphismResult result;
  search_homomorphisms(problem, [&](const std::vector<Element>& images) {
    result.isomorphic = true;
    result.witness = GroupHom{a, b, images};
    return false;
  });
  return result;
}

}  // namespace coleman
