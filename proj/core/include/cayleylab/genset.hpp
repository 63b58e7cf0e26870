#pragma once

#include <string>
#include <vector>

#include "cayleylab/group.hpp"

namespace cayleylab {

/// Ordered generating set with provenance label. Never symmetrized or
/// conjugation-closed implicitly; the *_closure helpers do that explicitly.
class GeneratingSet {
public:
  GeneratingSet() = default;

  /// Deduplicates by canonical key (first occurrence wins) and computes the
  /// closure flags against G.
  static GeneratingSet make(const FiniteGroup& G, std::vector<GroupElement> elements,
                            std::string label);

  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::string& label() const { return label_; }
  bool symmetric_closed() const { return symmetric_closed_; }
  bool conjugation_closed() const { return conjugation_closed_; }
  const std::vector<std::string>& keys() const { return keys_; }
  bool contains_key(const std::string& key) const;

  /// Missing inverses appended in ascending key order.
  GeneratingSet symmetric_closure(const FiniteGroup& G) const;
  /// Closure under conjugation by G (union of conjugacy classes); new
  /// elements appended in ascending key order, round by round.
  GeneratingSet conjugation_closure(const FiniteGroup& G) const;

private:
  std::vector<GroupElement> elements_;
  std::vector<std::string> keys_;
  std::string label_;
  bool symmetric_closed_ = false;
  bool conjugation_closed_ = false;
};

/// True iff the closure of S under products equals all of G.
bool generates(const FiniteGroup& G, const GeneratingSet& S);

/// True iff the declared generators commute pairwise (hence the group is
/// abelian).
bool is_abelian(const FiniteGroup& G);

}  // namespace cayleylab
