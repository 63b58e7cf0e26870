#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cayleylab/group.hpp"

namespace cayleylab {

/// Quotient G/N for a normal subgroup N, as a group of coset elements. The
/// representative of each coset is the member with minimal canonical key, so
/// quotients are deterministic and nest (coset elements quotient again).
class QuotientGroup {
public:
  QuotientGroup() = default;

  const FiniteGroup& parent() const { return parent_; }
  /// The coset group itself; usable everywhere a FiniteGroup is.
  const FiniteGroup& group() const { return group_; }
  std::uint64_t order() const { return group_.order(); }

  /// Standard projection; a must lie in the parent universe.
  GroupElement project(const GroupElement& a) const;

  const FiniteGroup::KeySet& normal_keys() const { return normal_keys_; }

private:
  friend QuotientGroup quotient(const FiniteGroup&, const FiniteGroup::KeySet&);

  FiniteGroup parent_;
  FiniteGroup group_;
  FiniteGroup::KeySet normal_keys_;
  std::shared_ptr<const CosetLaw> law_;
};

/// Builds G/N. Checks that `normal_keys` is a subgroup of G closed under
/// conjugation by the generators; throws PreconditionError otherwise.
QuotientGroup quotient(const FiniteGroup& G, const FiniteGroup::KeySet& normal_keys);

}  // namespace cayleylab
