#include "cayleylab/genset.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "cayleylab/errors.hpp"

namespace cayleylab {

namespace {

bool closed_under_inverses(const FiniteGroup& G, const std::vector<GroupElement>& elems,
                           const std::unordered_set<std::string>& keys) {
  for (const auto& s : elems)
    if (!keys.count(G.inverse(s).canonical_key())) return false;
  return true;
}

// Conjugation by the generators suffices: closure under generator conjugation
// implies closure under conjugation by every product of generators.
bool closed_under_conjugation(const FiniteGroup& G, const std::vector<GroupElement>& elems,
                              const std::unordered_set<std::string>& keys) {
  for (const auto& g : G.generators()) {
    const GroupElement gi = G.inverse(g);
    for (const auto& s : elems)
      if (!keys.count(G.multiply(G.multiply(gi, s), g).canonical_key())) return false;
  }
  return true;
}

}  // namespace

GeneratingSet GeneratingSet::make(const FiniteGroup& G, std::vector<GroupElement> elements,
                                  std::string label) {
  GeneratingSet s;
  s.label_ = std::move(label);
  std::unordered_set<std::string> seen;
  for (auto& e : elements) {
    std::string key = e.canonical_key();
    if (seen.insert(key).second) {
      s.elements_.push_back(std::move(e));
      s.keys_.push_back(std::move(key));
    }
  }
  s.symmetric_closed_ = closed_under_inverses(G, s.elements_, seen);
  s.conjugation_closed_ = closed_under_conjugation(G, s.elements_, seen);
  return s;
}

bool GeneratingSet::contains_key(const std::string& key) const {
  return std::find(keys_.begin(), keys_.end(), key) != keys_.end();
}

GeneratingSet GeneratingSet::symmetric_closure(const FiniteGroup& G) const {
  std::unordered_set<std::string> keys(keys_.begin(), keys_.end());
  std::map<std::string, GroupElement> missing;  // ordered: append by key
  for (const auto& s : elements_) {
    GroupElement inv = G.inverse(s);
    std::string key = inv.canonical_key();
    if (!keys.count(key)) missing.emplace(std::move(key), std::move(inv));
  }
  std::vector<GroupElement> out = elements_;
  for (auto& [key, e] : missing) out.push_back(std::move(e));
  return make(G, std::move(out), label_ + "+symmetric");
}

GeneratingSet GeneratingSet::conjugation_closure(const FiniteGroup& G) const {
  std::unordered_set<std::string> keys(keys_.begin(), keys_.end());
  std::vector<GroupElement> out = elements_;
  std::vector<GroupElement> frontier = elements_;
  while (!frontier.empty()) {
    std::map<std::string, GroupElement> fresh;
    for (const auto& g : G.generators()) {
      const GroupElement gi = G.inverse(g);
      for (const auto& s : frontier) {
        GroupElement c = G.multiply(G.multiply(gi, s), g);
        std::string key = c.canonical_key();
        if (!keys.count(key)) {
          keys.insert(key);
          fresh.emplace(std::move(key), std::move(c));
        }
      }
    }
    frontier.clear();
    for (auto& [key, e] : fresh) {
      out.push_back(e);
      frontier.push_back(std::move(e));
    }
  }
  return make(G, std::move(out), label_ + "+conj-close");
}

bool is_abelian(const FiniteGroup& G) {
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(G.multiply(gens[i], gens[j]) == G.multiply(gens[j], gens[i]))) return false;
  return true;
}

bool generates(const FiniteGroup& G, const GeneratingSet& S) {
  const std::uint64_t target = G.order();
  if (S.empty()) return target == 1;
  FiniteGroup::KeySet seen;
  std::vector<GroupElement> frontier;
  seen.insert(G.identity().canonical_key());
  frontier.push_back(G.identity());
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& s : S.elements()) {
        GroupElement y = G.multiply(x, s);
        if (seen.insert(y.canonical_key()).second) next.push_back(std::move(y));
      }
    }
    if (seen.size() == target) return true;
    frontier = std::move(next);
  }
  return seen.size() == target;
}

}  // namespace cayleylab
