#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayleylab/genset.hpp"
#include "cayleylab/group.hpp"
#include "cayleylab/numeric.hpp"

namespace cayleylab::cayley {

/// Per-level ball sizes |B_0|..|B_D| where B_0 = {e}, B_k = B_{k-1} u
/// B_{k-1}.S and D is the last index at which the ball still grew. Sizes are
/// strictly increasing; the ball is constant from D on.
struct BallProfile {
  std::vector<std::uint64_t> sizes;
  bool generates = false;

  std::uint64_t stabilization_index() const { return sizes.size() - 1; }
};

/// Exact-length product sizes |S^1|..|S^m|. cap_hit means a level exceeded
/// the per-level key cap and the profile is truncated.
struct PowerProfile {
  std::vector<std::uint64_t> sizes;
  bool cap_hit = false;
};

/// Witness for the moderate-growth condition |S^{5n}| <= theta*|S^n|.
struct GrowthWitness {
  BigRat theta;
  BigRat delta;
  std::uint64_t alpha = 0;       // smallest a >= 1 with 5^a > diam^(1/8)
  std::uint64_t n = 0;           // smallest qualifying n
  BigRat ratio;                  // |S^{5n}| / |S^n|
  std::uint64_t scan_bound = 0;  // floor(diam^delta)
  std::uint64_t diameter = 0;
};

inline constexpr std::uint64_t kDefaultLevelCap = 2'000'000;

/// Frontier BFS by right multiplication. S may be empty only for the trivial
/// group. Never symmetrizes S.
BallProfile ball_profile(const FiniteGroup& G, const GeneratingSet& S);

/// Least n with B_n = G; nullopt when S does not generate (the INFINITE
/// marker). The identity is the empty product, at distance 0.
std::optional<std::uint64_t> diameter(const FiniteGroup& G, const GeneratingSet& S);

/// Elements at distance <= radius from the identity.
FiniteGroup::KeySet ball_keys(const FiniteGroup& G, const GeneratingSet& S,
                              std::uint64_t radius);

PowerProfile power_profile(const FiniteGroup& G, const GeneratingSet& S,
                           std::uint64_t max_n,
                           std::uint64_t level_cap = kDefaultLevelCap);

/// Ascending scan of n = 1..floor(diam^delta) for |S^{5n}| <= theta*|S^n|;
/// returns the smallest witness, or nullopt when no n qualifies. Requires S
/// to generate G. All comparisons are exact.
std::optional<GrowthWitness> growth_condition(const FiniteGroup& G, const GeneratingSet& S,
                                              const BigRat& theta, const BigRat& delta);

/// Seeded random search for a set of size ceil(c1*log2|G|) with diameter at
/// most ceil(c2*log2|G|); nullopt after `trials` failures.
std::optional<GeneratingSet> find_log_set(const FiniteGroup& G, const BigRat& c1,
                                          const BigRat& c2, std::uint64_t trials,
                                          std::uint64_t seed);

}  // namespace cayleylab::cayley
