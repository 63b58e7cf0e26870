#pragma once

// Brute-force oracles used to pin expected values. These deliberately share
// nothing with the engine's algorithms beyond element arithmetic: plain
// queue-based searches and full double loops, no frontier levels, no tables.

#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "cayleylab/genset.hpp"
#include "cayleylab/group.hpp"

namespace oracle {

using cayleylab::FiniteGroup;
using cayleylab::GroupElement;

// Single-source shortest path over the full element list, one node at a time.
inline std::map<std::string, std::uint64_t> distances(const FiniteGroup& G,
                                                      const std::vector<GroupElement>& gens) {
  std::map<std::string, std::uint64_t> dist;
  std::queue<GroupElement> todo;
  dist[G.identity().canonical_key()] = 0;
  todo.push(G.identity());
  while (!todo.empty()) {
    GroupElement x = todo.front();
    todo.pop();
    const std::uint64_t d = dist.at(x.canonical_key());
    for (const auto& g : gens) {
      GroupElement y = G.multiply(x, g);
      std::string key = y.canonical_key();
      if (!dist.count(key)) {
        dist[key] = d + 1;
        todo.push(y);
      }
    }
  }
  return dist;
}

inline std::int64_t diameter(const FiniteGroup& G, const std::vector<GroupElement>& gens) {
  auto dist = distances(G, gens);
  if (dist.size() != G.order()) return -1;  // does not generate
  std::uint64_t best = 0;
  for (const auto& [key, d] : dist) best = std::max(best, d);
  return static_cast<std::int64_t>(best);
}

// Conjugacy partition by conjugating with every group element.
inline std::vector<std::set<std::string>> conjugacy_partition(const FiniteGroup& G) {
  std::vector<std::set<std::string>> classes;
  std::set<std::string> assigned;
  for (const auto& key : G.sorted_keys()) {
    if (assigned.count(key)) continue;
    const GroupElement& x = G.element_for_key(key);
    std::set<std::string> cls;
    for (const auto& gkey : G.sorted_keys()) {
      const GroupElement& g = G.element_for_key(gkey);
      cls.insert(G.multiply(G.multiply(G.inverse(g), x), g).canonical_key());
    }
    for (const auto& k : cls) assigned.insert(k);
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Closure of a set of elements under products, as a key set.
inline std::set<std::string> span(const FiniteGroup& G, const std::vector<GroupElement>& gens) {
  std::set<std::string> seen{G.identity().canonical_key()};
  std::queue<GroupElement> todo;
  todo.push(G.identity());
  while (!todo.empty()) {
    GroupElement x = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      GroupElement y = G.multiply(x, g);
      if (seen.insert(y.canonical_key()).second) todo.push(y);
    }
  }
  return seen;
}

// Derived subgroup as the span of every commutator.
inline std::set<std::string> derived(const FiniteGroup& G,
                                     const std::vector<std::string>& member_keys) {
  std::vector<GroupElement> comms;
  std::set<std::string> seen;
  for (const auto& ka : member_keys)
    for (const auto& kb : member_keys) {
      const GroupElement& a = G.element_for_key(ka);
      const GroupElement& b = G.element_for_key(kb);
      GroupElement c =
          G.multiply(G.multiply(G.multiply(G.inverse(a), G.inverse(b)), a), b);
      if (seen.insert(c.canonical_key()).second) comms.push_back(std::move(c));
    }
  return span(G, comms);
}

// Exact power sets by direct expansion.
inline std::vector<std::uint64_t> power_sizes(const FiniteGroup& G,
                                              const std::vector<GroupElement>& gens,
                                              std::uint64_t max_n) {
  std::vector<std::uint64_t> sizes;
  std::map<std::string, GroupElement> level;
  for (const auto& g : gens) level.emplace(g.canonical_key(), g);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    sizes.push_back(level.size());
    std::map<std::string, GroupElement> next;
    for (const auto& [key, x] : level)
      for (const auto& g : gens) {
        GroupElement y = G.multiply(x, g);
        next.emplace(y.canonical_key(), y);
      }
    level = std::move(next);
  }
  return sizes;
}

}  // namespace oracle
