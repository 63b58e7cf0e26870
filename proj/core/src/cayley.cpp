#include "cayleylab/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cayleylab/errors.hpp"

namespace cayleylab::cayley {

namespace {

struct BfsState {
  FiniteGroup::KeySet ball;
  std::vector<GroupElement> frontier;
};

BfsState bfs_start(const FiniteGroup& G) {
  BfsState s;
  s.ball.insert(G.identity().canonical_key());
  s.frontier.push_back(G.identity());
  return s;
}

// One right-multiplication level; returns the number of new elements.
std::size_t bfs_step(const FiniteGroup& G, const GeneratingSet& S, BfsState& s) {
  std::vector<GroupElement> next;
  for (const auto& x : s.frontier) {
    for (const auto& g : S.elements()) {
      GroupElement y = G.multiply(x, g);
      if (s.ball.insert(y.canonical_key()).second) next.push_back(std::move(y));
    }
  }
  const std::size_t grew = next.size();
  s.frontier = std::move(next);
  return grew;
}

void check_ball_pre(const FiniteGroup& G, const GeneratingSet& S) {
  if (S.empty() && G.order() > 1)
    throw PreconditionError("generating set is empty");
}

}  // namespace

BallProfile ball_profile(const FiniteGroup& G, const GeneratingSet& S) {
  const std::uint64_t order = G.order();  // may throw LimitError
  check_ball_pre(G, S);
  BallProfile profile;
  BfsState s = bfs_start(G);
  profile.sizes.push_back(1);
  while (s.ball.size() < order && bfs_step(G, S, s) > 0)
    profile.sizes.push_back(s.ball.size());
  profile.generates = s.ball.size() == order;
  return profile;
}

std::optional<std::uint64_t> diameter(const FiniteGroup& G, const GeneratingSet& S) {
  BallProfile profile = ball_profile(G, S);
  if (!profile.generates) return std::nullopt;
  return profile.stabilization_index();
}

FiniteGroup::KeySet ball_keys(const FiniteGroup& G, const GeneratingSet& S,
                              std::uint64_t radius) {
  G.order();
  check_ball_pre(G, S);
  BfsState s = bfs_start(G);
  for (std::uint64_t level = 0; level < radius; ++level)
    if (bfs_step(G, S, s) == 0) break;
  return std::move(s.ball);
}

PowerProfile power_profile(const FiniteGroup& G, const GeneratingSet& S, std::uint64_t max_n,
                           std::uint64_t level_cap) {
  if (max_n < 1) throw PreconditionError("max_n must be at least 1");
  check_ball_pre(G, S);
  PowerProfile profile;
  if (S.empty()) return profile;

  // current level S^k as elements; keys for dedup
  std::vector<GroupElement> level = S.elements();
  profile.sizes.push_back(level.size());
  for (std::uint64_t k = 2; k <= max_n; ++k) {
    FiniteGroup::KeySet keys;
    std::vector<GroupElement> next;
    bool capped = false;
    for (const auto& x : level) {
      for (const auto& g : S.elements()) {
        GroupElement y = G.multiply(x, g);
        if (keys.insert(y.canonical_key()).second) {
          if (keys.size() > level_cap) {
            capped = true;
            break;
          }
          next.push_back(std::move(y));
        }
      }
      if (capped) break;
    }
    if (capped) {
      profile.cap_hit = true;
      break;
    }
    level = std::move(next);
    profile.sizes.push_back(level.size());
  }
  return profile;
}

std::optional<GrowthWitness> growth_condition(const FiniteGroup& G, const GeneratingSet& S,
                                              const BigRat& theta, const BigRat& delta) {
  if (theta <= 0) throw PreconditionError("theta must be positive");
  if (delta <= 0 || delta > 1) throw PreconditionError("delta must lie in (0, 1]");
  std::optional<std::uint64_t> diam = diameter(G, S);
  if (!diam) throw PreconditionError("generating set does not generate the group");

  const std::uint64_t scan_bound = floor_rational_power(*diam, delta);
  if (scan_bound == 0) return std::nullopt;

  PowerProfile powers = power_profile(G, S, 5 * scan_bound);
  for (std::uint64_t n = 1; n <= scan_bound; ++n) {
    if (5 * n > powers.sizes.size()) break;  // cap hit upstream
    const std::uint64_t s5n = powers.sizes[5 * n - 1];
    const std::uint64_t sn = powers.sizes[n - 1];
    if (BigRat(s5n) <= theta * BigRat(sn)) {
      GrowthWitness w;
      w.theta = theta;
      w.delta = delta;
      w.alpha = growth_alpha(*diam);
      w.n = n;
      w.ratio = BigRat(BigInt(s5n), BigInt(sn));
      w.scan_bound = scan_bound;
      w.diameter = *diam;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<GeneratingSet> find_log_set(const FiniteGroup& G, const BigRat& c1,
                                          const BigRat& c2, std::uint64_t trials,
                                          std::uint64_t seed) {
  const std::uint64_t order = G.order();
  if (order < 2) throw PreconditionError("find_log_set needs |G| >= 2");

  const double log2n = std::log2(static_cast<double>(order));
  auto scaled = [&](const BigRat& c) {
    const double v = c.convert_to<double>() * log2n;
    return static_cast<std::uint64_t>(std::ceil(v - 1e-9));
  };
  const std::uint64_t set_size = std::max<std::uint64_t>(1, std::min(scaled(c1), order));
  const std::uint64_t target = std::max<std::uint64_t>(1, scaled(c2));

  const auto& keys = G.sorted_keys();
  std::mt19937_64 rng(seed);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::vector<std::string> picked;
    std::sample(keys.begin(), keys.end(), std::back_inserter(picked), set_size, rng);
    std::vector<GroupElement> elems;
    elems.reserve(picked.size());
    for (const auto& key : picked) elems.push_back(G.element_for_key(key));
    GeneratingSet S = GeneratingSet::make(
        G, std::move(elems),
        "log-set:" + std::to_string(seed) + ":" + std::to_string(trial));
    std::optional<std::uint64_t> diam = diameter(G, S);
    if (diam && *diam <= target) return S;
  }
  return std::nullopt;
}

}  // namespace cayleylab::cayley
