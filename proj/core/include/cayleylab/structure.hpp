#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayleylab/genset.hpp"
#include "cayleylab/group.hpp"
#include "cayleylab/quotient.hpp"

namespace cayleylab::structure {

/// A subgroup of a parent group: canonical generator keys, the full element
/// key set, and lazily filled invariants. Records are value types; the
/// generator set is the canonical greedy one (scan members in ascending key
/// order, keep each element that enlarges the closure), which makes records
/// a pure function of the member set.
struct SubgroupRecord {
  FiniteGroup group;                         // parent handle
  std::vector<std::string> generator_keys;   // sorted
  std::vector<std::string> element_keys;     // sorted
  std::uint64_t order = 0;
  std::uint64_t index = 0;  // |G| / order

  std::optional<std::uint64_t> derived_order;
  std::optional<std::uint64_t> abelianization_order;
  std::optional<std::uint64_t> nilpotency_class;  // meaningful after lower_central_series
  std::optional<bool> normal;

  bool trivial() const { return order == 1; }
  bool whole_group() const { return index == 1; }
  bool contains_key(const std::string& key) const;
  std::vector<GroupElement> generator_elements() const;
  FiniteGroup::KeySet element_key_set() const;
};

/// Schreier generators of H derived from a BFS coset transversal:
/// { t.s.rep(t.s)^-1 } minus the identity, deduplicated.
struct SchreierData {
  std::vector<GroupElement> transversal;
  std::vector<GroupElement> generators;
  std::uint64_t size_bound = 0;  // |G:H| * |S|
};

struct ConjugacyData {
  std::uint64_t class_count = 0;
  std::vector<std::string> representatives;  // minimal key per class, ascending
  std::vector<std::uint64_t> sizes;
};

struct LowerCentralSeries {
  std::optional<std::uint64_t> nilpotency_class;  // nullopt = not nilpotent
  std::vector<std::uint64_t> orders;              // |gamma_1|, |gamma_2|, ...

  bool nilpotent() const { return nilpotency_class.has_value(); }
};

struct AbelianSection {
  std::uint64_t max_abelian_order = 0;
  SubgroupRecord witness;  // minimal order attaining it, key-lex tie-break
};

struct BtWitness {
  SubgroupRecord normal_part;   // N, normal in G
  SubgroupRecord abelian_over;  // H >= N with H/N abelian
};

inline constexpr std::uint64_t kDefaultSubgroupCap = 2'000;

SubgroupRecord subgroup_closure(const FiniteGroup& G, const std::vector<GroupElement>& gens,
                                std::uint64_t cap = kDefaultSubgroupCap);
SubgroupRecord subgroup_from_keys(const FiniteGroup& G, const FiniteGroup::KeySet& keys);
SubgroupRecord trivial_subgroup(const FiniteGroup& G);
SubgroupRecord whole_group_record(const FiniteGroup& G);

/// Every subgroup exactly once: all cyclic subgroups, then pairwise joins to
/// a fixed point. Sorted by (order, generator-key list). Cached per group.
const std::vector<SubgroupRecord>& all_subgroups(const FiniteGroup& G,
                                                 std::uint64_t cap = kDefaultSubgroupCap);

std::vector<SubgroupRecord> normal_subgroups(const FiniteGroup& G,
                                             std::uint64_t cap = kDefaultSubgroupCap);

bool is_normal(const SubgroupRecord& H);

/// Subgroup generated by all commutators [a,b] over the full element set.
SubgroupRecord derived_subgroup(const SubgroupRecord& H);

/// Invariant-factor decomposition d1 | d2 | ... | dk of H/H', computed on the
/// quotient by repeatedly extracting an element of maximal order.
std::vector<std::uint64_t> abelian_invariants(const SubgroupRecord& H);

SubgroupRecord center(const FiniteGroup& G);
SubgroupRecord centralizer(const FiniteGroup& G, const GroupElement& g);

/// Intersection of the centralizers of all members of S.
SubgroupRecord conjugation_kernel(const FiniteGroup& G, const GeneratingSet& S);

ConjugacyData conjugacy_classes(const FiniteGroup& G,
                                std::uint64_t cap = kDefaultSubgroupCap);
/// Conjugacy classes as key sets, aligned with ConjugacyData order.
std::vector<std::vector<std::string>> conjugacy_class_members(
    const FiniteGroup& G, std::uint64_t cap = kDefaultSubgroupCap);

/// Number of conjugacy classes of H as a group in its own right.
std::uint64_t subgroup_class_count(const SubgroupRecord& H);

/// gamma_1 = H, gamma_{k+1} = <[gamma_k, H]>; class = last k with gamma_k
/// nontrivial, or not nilpotent when the series goes stationary.
LowerCentralSeries lower_central_series(const SubgroupRecord& H);

/// One representative per right coset Hg, first reached by BFS over right
/// multiplication by S; ties within a level broken by minimal canonical key.
/// The representative of H itself is the identity.
std::vector<GroupElement> coset_transversal(const FiniteGroup& G, const SubgroupRecord& H,
                                            const GeneratingSet& S);

SchreierData schreier_generators(const FiniteGroup& G, const SubgroupRecord& H,
                                 const GeneratingSet& S);

/// Maximum of |K/K'| over all subgroups K, witnessed by the smallest K
/// attaining it.
AbelianSection best_abelian_section(const FiniteGroup& G,
                                    std::uint64_t cap = kDefaultSubgroupCap);

/// Searches pairs N normal in G, H >= N with H/N abelian and |G:H| <=
/// index_cap, minimizing |G:H| then |N|. When `contained_in` is given, N must
/// lie inside that key set.
std::optional<BtWitness> find_bt_witness(const FiniteGroup& G, std::uint64_t index_cap,
                                         const FiniteGroup::KeySet* contained_in = nullptr,
                                         std::uint64_t cap = kDefaultSubgroupCap);

/// The subgroup as a standalone group handle (shares the parent's law).
FiniteGroup as_group(const SubgroupRecord& H);

/// Quotient of as_group(H) by a normal subgroup given as a record.
QuotientGroup quotient_of(const SubgroupRecord& H, const SubgroupRecord& N);

}  // namespace cayleylab::structure
