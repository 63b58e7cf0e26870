#include "cayleylab/quotient.hpp"

#include <algorithm>
#include <set>

#include "cayleylab/errors.hpp"

namespace cayleylab {

FiniteGroup make_coset_group(std::string id, std::shared_ptr<const CosetLaw> law,
                             std::vector<GroupElement> generators,
                             std::vector<GroupElement> universe, std::uint64_t order_cap);

namespace {

void check_normal_subgroup(const FiniteGroup& G, const FiniteGroup::KeySet& keys) {
  if (!keys.count(G.identity().canonical_key()))
    throw PreconditionError("normal subgroup must contain the identity");
  std::vector<const GroupElement*> members;
  members.reserve(keys.size());
  for (const auto& key : keys) {
    if (!G.contains_key(key)) throw PreconditionError("subgroup key not in group");
    members.push_back(&G.element_for_key(key));
  }
  for (const auto* a : members)
    for (const auto* b : members)
      if (!keys.count(G.multiply(*a, *b).canonical_key()))
        throw PreconditionError("set is not closed under multiplication");
  for (const auto& g : G.generators()) {
    const GroupElement gi = G.inverse(g);
    for (const auto* n : members)
      if (!keys.count(G.multiply(G.multiply(gi, *n), g).canonical_key()))
        throw PreconditionError("subgroup is not normal");
  }
}

}  // namespace

QuotientGroup quotient(const FiniteGroup& G, const FiniteGroup::KeySet& normal_keys) {
  check_normal_subgroup(G, normal_keys);

  auto law = std::make_shared<CosetLaw>();
  law->parent = G;

  // Coset representative = member with minimal canonical key. Scanning keys
  // in ascending order means the first unassigned element is its own coset's
  // representative.
  const auto& sorted = G.sorted_keys();
  for (const auto& key : sorted) {
    if (law->rep_of.count(key)) continue;
    const GroupElement& g = G.element_for_key(key);
    law->rep_element.emplace(key, g);
    for (const auto& nk : normal_keys) {
      GroupElement ng = G.multiply(G.element_for_key(nk), g);
      law->rep_of[ng.canonical_key()] = key;
    }
  }

  std::vector<GroupElement> universe;
  universe.reserve(law->rep_element.size());
  for (const auto& [key, elem] : law->rep_element)
    universe.push_back(GroupElement::coset(key));

  const std::string id_key = law->rep_of.at(G.identity().canonical_key());
  std::set<std::string> gen_images;  // dedup, non-identity, ascending
  for (const auto& g : G.generators()) {
    std::string rep = law->rep_of.at(g.canonical_key());
    if (rep != id_key) gen_images.insert(std::move(rep));
  }
  std::vector<GroupElement> generators;
  for (const auto& rep : gen_images) generators.push_back(GroupElement::coset(rep));

  QuotientGroup q;
  q.parent_ = G;
  q.normal_keys_ = normal_keys;
  q.law_ = law;
  q.group_ = make_coset_group(G.id() + "/N" + std::to_string(normal_keys.size()), law,
                              std::move(generators), std::move(universe), G.order_cap());

  if (q.group_.order() * normal_keys.size() != G.order())
    throw PreconditionError("coset count does not divide the group order");
  return q;
}

GroupElement QuotientGroup::project(const GroupElement& a) const {
  auto it = law_->rep_of.find(a.canonical_key());
  if (it == law_->rep_of.end())
    throw DomainError("element does not belong to the parent group");
  return GroupElement::coset(it->second);
}

}  // namespace cayleylab
