#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cayleylab/element.hpp"

namespace cayleylab {

struct CosetLaw;
namespace structure {
struct SubgroupRecord;
}

/// Dense index form of a small group: elements sorted by canonical key,
/// full multiplication and inverse tables. Built lazily and shared; the
/// subgroup machinery runs on these indices.
struct DenseTable {
  std::vector<GroupElement> elems;  // index -> element, keys ascending
  std::vector<std::string> keys;    // index -> canonical key
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::uint32_t> mul;  // row-major n*n, mul[a*n+b] = index of a.b
  std::vector<std::uint32_t> inv;
  std::uint32_t identity = 0;
  std::uint32_t n = 0;

  std::uint32_t at(std::uint32_t a, std::uint32_t b) const { return mul[std::size_t(a) * n + b]; }
  std::uint32_t conj(std::uint32_t g, std::uint32_t x) const {  // g^-1 x g
    return at(at(inv[g], x), g);
  }
};

/// Immutable handle to a finite group: identity, declared generators, the
/// multiplication law, and a lazily cached element universe. Copies share
/// state; all caching is idempotent and thread-safe.
class FiniteGroup {
public:
  using KeySet = std::unordered_set<std::string>;

  static constexpr std::uint64_t kDefaultOrderCap = 2'000'000;
  static constexpr std::uint64_t kDefaultTableCap = 2'000;

  FiniteGroup() = default;

  static FiniteGroup from_generators(std::string id, GroupElement identity,
                                     std::vector<GroupElement> generators,
                                     std::uint64_t order_cap = kDefaultOrderCap);

  /// Group with a precomputed universe (table files, subgroups, quotients).
  static FiniteGroup from_universe(std::string id, GroupElement identity,
                                   std::vector<GroupElement> generators,
                                   std::vector<GroupElement> universe,
                                   std::uint64_t order_cap = kDefaultOrderCap);

  bool valid() const { return impl_ != nullptr; }

  const std::string& id() const;
  const GroupElement& identity() const;
  const std::vector<GroupElement>& generators() const;
  std::uint64_t order_cap() const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  bool is_identity(const GroupElement& a) const;

  /// Closure of the generators under multiplication (contains inverses since
  /// the group is finite). Cached after the first call.
  const KeySet& elements() const;
  std::uint64_t order() const;
  bool contains_key(const std::string& key) const;
  /// Universe keys in ascending order; this is the tie-breaking order used
  /// throughout. Cached.
  const std::vector<std::string>& sorted_keys() const;
  const GroupElement& element_for_key(const std::string& key) const;

  /// Dense table; throws LimitError when the order exceeds `cap`.
  std::shared_ptr<const DenseTable> dense_table(std::uint64_t cap = kDefaultTableCap) const;
  std::shared_ptr<const DenseTable> dense_table_if_built() const;

  /// Derived handle over a subset of this group's elements (used for
  /// subgroups); shares the multiplication law.
  FiniteGroup subgroup_handle(std::string id, std::vector<GroupElement> generators,
                              std::vector<GroupElement> universe) const;

  bool same_instance(const FiniteGroup& other) const { return impl_ == other.impl_; }

  /// Cache slot used by structure::all_subgroups; nullptr until filled.
  std::shared_ptr<const std::vector<structure::SubgroupRecord>> subgroup_cache() const;
  void fill_subgroup_cache(std::shared_ptr<const std::vector<structure::SubgroupRecord>> subs) const;

private:
  friend class QuotientGroup;
  friend FiniteGroup make_coset_group(std::string, std::shared_ptr<const CosetLaw>,
                                      std::vector<GroupElement>, std::vector<GroupElement>,
                                      std::uint64_t);

  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Backend for coset arithmetic: maps every parent element key to the key of
/// its coset representative and keeps the representatives themselves.
struct CosetLaw {
  FiniteGroup parent;
  std::unordered_map<std::string, std::string> rep_of;       // element key -> rep key
  std::unordered_map<std::string, GroupElement> rep_element; // rep key -> parent element
};

}  // namespace cayleylab
