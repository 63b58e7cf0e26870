#include "cayleylab/group.hpp"

#include <algorithm>
#include <mutex>

#include "cayleylab/errors.hpp"

namespace cayleylab {

struct FiniteGroup::Impl {
  std::string id;
  GroupElement identity;
  std::vector<GroupElement> generators;
  std::uint64_t order_cap = kDefaultOrderCap;
  std::shared_ptr<const CosetLaw> coset_law;

  mutable std::mutex mu;
  mutable bool enumerated = false;
  mutable KeySet universe;
  mutable std::unordered_map<std::string, GroupElement> by_key;
  mutable std::vector<std::string> sorted;
  mutable bool sorted_built = false;
  mutable std::shared_ptr<const DenseTable> table;
  mutable std::shared_ptr<const std::vector<structure::SubgroupRecord>> subgroups;
};

FiniteGroup FiniteGroup::from_generators(std::string id, GroupElement identity,
                                         std::vector<GroupElement> generators,
                                         std::uint64_t order_cap) {
  FiniteGroup g;
  g.impl_ = std::make_shared<Impl>();
  g.impl_->id = std::move(id);
  g.impl_->identity = std::move(identity);
  g.impl_->generators = std::move(generators);
  g.impl_->order_cap = order_cap;
  return g;
}

FiniteGroup FiniteGroup::from_universe(std::string id, GroupElement identity,
                                       std::vector<GroupElement> generators,
                                       std::vector<GroupElement> universe,
                                       std::uint64_t order_cap) {
  FiniteGroup g = from_generators(std::move(id), std::move(identity),
                                  std::move(generators), order_cap);
  auto& impl = *g.impl_;
  for (auto& e : universe) {
    std::string key = e.canonical_key();
    impl.universe.insert(key);
    impl.by_key.emplace(std::move(key), std::move(e));
  }
  impl.enumerated = true;
  return g;
}

FiniteGroup make_coset_group(std::string id, std::shared_ptr<const CosetLaw> law,
                             std::vector<GroupElement> generators,
                             std::vector<GroupElement> universe, std::uint64_t order_cap) {
  GroupElement identity = GroupElement::coset(law->rep_of.at(law->parent.identity().canonical_key()));
  FiniteGroup g = FiniteGroup::from_universe(std::move(id), std::move(identity),
                                             std::move(generators), std::move(universe),
                                             order_cap);
  g.impl_->coset_law = std::move(law);
  return g;
}

const std::string& FiniteGroup::id() const { return impl_->id; }
const GroupElement& FiniteGroup::identity() const { return impl_->identity; }
const std::vector<GroupElement>& FiniteGroup::generators() const { return impl_->generators; }
std::uint64_t FiniteGroup::order_cap() const { return impl_->order_cap; }

GroupElement FiniteGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  if (a.kind() == GroupElement::Kind::coset) {
    if (b.kind() != GroupElement::Kind::coset)
      throw DomainError("cannot multiply coset by " + kind_name(b.kind()));
    const auto& law = *impl_->coset_law;
    const GroupElement& pa = law.rep_element.at(a.as_coset().rep_key);
    const GroupElement& pb = law.rep_element.at(b.as_coset().rep_key);
    GroupElement prod = law.parent.multiply(pa, pb);
    return GroupElement::coset(law.rep_of.at(prod.canonical_key()));
  }
  return compose(a, b);
}

GroupElement FiniteGroup::inverse(const GroupElement& a) const {
  if (a.kind() == GroupElement::Kind::coset) {
    const auto& law = *impl_->coset_law;
    const GroupElement& pa = law.rep_element.at(a.as_coset().rep_key);
    GroupElement inv = law.parent.inverse(pa);
    return GroupElement::coset(law.rep_of.at(inv.canonical_key()));
  }
  return invert(a);
}

bool FiniteGroup::is_identity(const GroupElement& a) const { return a == impl_->identity; }

const FiniteGroup::KeySet& FiniteGroup::elements() const {
  auto& impl = *impl_;
  std::lock_guard lock(impl.mu);
  if (impl.enumerated) return impl.universe;

  KeySet universe;
  std::unordered_map<std::string, GroupElement> by_key;
  std::vector<GroupElement> frontier;

  std::string id_key = impl.identity.canonical_key();
  universe.insert(id_key);
  by_key.emplace(std::move(id_key), impl.identity);
  frontier.push_back(impl.identity);

  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : impl.generators) {
        GroupElement y = multiply(x, g);
        std::string key = y.canonical_key();
        if (universe.insert(key).second) {
          if (universe.size() > impl.order_cap)
            throw LimitError("enumeration cap " + std::to_string(impl.order_cap) +
                             " exceeded (partial count " +
                             std::to_string(universe.size()) + ")");
          by_key.emplace(std::move(key), y);
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }

  impl.universe = std::move(universe);
  impl.by_key = std::move(by_key);
  impl.enumerated = true;
  return impl.universe;
}

std::uint64_t FiniteGroup::order() const { return elements().size(); }

bool FiniteGroup::contains_key(const std::string& key) const {
  return elements().count(key) != 0;
}

const std::vector<std::string>& FiniteGroup::sorted_keys() const {
  elements();
  auto& impl = *impl_;
  std::lock_guard lock(impl.mu);
  if (!impl.sorted_built) {
    impl.sorted.assign(impl.universe.begin(), impl.universe.end());
    std::sort(impl.sorted.begin(), impl.sorted.end());
    impl.sorted_built = true;
  }
  return impl.sorted;
}

const GroupElement& FiniteGroup::element_for_key(const std::string& key) const {
  elements();
  auto it = impl_->by_key.find(key);
  if (it == impl_->by_key.end())
    throw DomainError("key does not belong to group " + impl_->id);
  return it->second;
}

std::shared_ptr<const DenseTable> FiniteGroup::dense_table(std::uint64_t cap) const {
  {
    std::lock_guard lock(impl_->mu);
    if (impl_->table) return impl_->table;
  }
  const std::uint64_t n = order();
  if (n > cap)
    throw LimitError("group order " + std::to_string(n) +
                     " exceeds the subgroup-machinery cap " + std::to_string(cap));

  auto table = std::make_shared<DenseTable>();
  table->n = static_cast<std::uint32_t>(n);
  table->keys = sorted_keys();
  table->elems.reserve(n);
  for (std::uint32_t i = 0; i < table->n; ++i) {
    table->index.emplace(table->keys[i], i);
    table->elems.push_back(element_for_key(table->keys[i]));
  }
  table->identity = table->index.at(identity().canonical_key());
  table->mul.resize(std::size_t(n) * n);
  table->inv.resize(n);
  for (std::uint32_t i = 0; i < table->n; ++i) {
    for (std::uint32_t j = 0; j < table->n; ++j) {
      GroupElement prod = multiply(table->elems[i], table->elems[j]);
      const std::uint32_t k = table->index.at(prod.canonical_key());
      table->mul[std::size_t(i) * n + j] = k;
      if (k == table->identity) table->inv[i] = j;
    }
  }

  std::lock_guard lock(impl_->mu);
  if (!impl_->table) impl_->table = std::move(table);
  return impl_->table;
}

std::shared_ptr<const DenseTable> FiniteGroup::dense_table_if_built() const {
  std::lock_guard lock(impl_->mu);
  return impl_->table;
}

FiniteGroup FiniteGroup::subgroup_handle(std::string id, std::vector<GroupElement> generators,
                                         std::vector<GroupElement> universe) const {
  FiniteGroup g = from_universe(std::move(id), impl_->identity, std::move(generators),
                                std::move(universe), impl_->order_cap);
  g.impl_->coset_law = impl_->coset_law;
  return g;
}

std::shared_ptr<const std::vector<structure::SubgroupRecord>> FiniteGroup::subgroup_cache() const {
  std::lock_guard lock(impl_->mu);
  return impl_->subgroups;
}

void FiniteGroup::fill_subgroup_cache(
    std::shared_ptr<const std::vector<structure::SubgroupRecord>> subs) const {
  std::lock_guard lock(impl_->mu);
  if (!impl_->subgroups) impl_->subgroups = std::move(subs);
}

}  // namespace cayleylab
