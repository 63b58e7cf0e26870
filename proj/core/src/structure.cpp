#include "cayleylab/structure.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

#include "cayleylab/errors.hpp"

namespace cayleylab::structure {

namespace {

using IndexVec = std::vector<std::uint32_t>;

constexpr std::uint64_t kMaxSubgroups = 100'000;

std::string bytes_of(const IndexVec& v) {
  return std::string(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(std::uint32_t));
}

// Closure of `gens` under right multiplication, as sorted indices.
IndexVec closure_indices(const DenseTable& t, const IndexVec& gens) {
  std::vector<bool> in(t.n, false);
  IndexVec out;
  in[t.identity] = true;
  out.push_back(t.identity);
  for (std::size_t qi = 0; qi < out.size(); ++qi) {
    for (auto g : gens) {
      const std::uint32_t y = t.at(out[qi], g);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Greedy canonical generators: scan members in ascending (key) order, keep
// every element that enlarges the closure. A pure function of the member set.
IndexVec canonical_generators(const DenseTable& t, const IndexVec& members) {
  IndexVec gens;
  std::vector<bool> in(t.n, false);
  in[t.identity] = true;
  std::size_t covered = 1;
  for (auto idx : members) {
    if (in[idx]) continue;
    gens.push_back(idx);
    IndexVec closed = closure_indices(t, gens);
    std::fill(in.begin(), in.end(), false);
    for (auto m : closed) in[m] = true;
    covered = closed.size();
    if (covered == members.size()) break;
  }
  return gens;
}

SubgroupRecord make_record(const FiniteGroup& G, const DenseTable& t, const IndexVec& members,
                           IndexVec gens = {}) {
  if (gens.empty() && members.size() > 1) gens = canonical_generators(t, members);
  if (members.size() == 1) gens.clear();
  SubgroupRecord rec;
  rec.group = G;
  rec.order = members.size();
  rec.index = t.n / members.size();
  rec.element_keys.reserve(members.size());
  for (auto idx : members) rec.element_keys.push_back(t.keys[idx]);
  rec.generator_keys.reserve(gens.size());
  for (auto idx : gens) rec.generator_keys.push_back(t.keys[idx]);
  std::sort(rec.generator_keys.begin(), rec.generator_keys.end());
  return rec;
}

IndexVec member_indices(const DenseTable& t, const SubgroupRecord& rec) {
  IndexVec members;
  members.reserve(rec.element_keys.size());
  for (const auto& key : rec.element_keys) members.push_back(t.index.at(key));
  std::sort(members.begin(), members.end());
  return members;
}

IndexVec generator_indices(const DenseTable& t, const SubgroupRecord& rec) {
  IndexVec gens;
  gens.reserve(rec.generator_keys.size());
  for (const auto& key : rec.generator_keys) gens.push_back(t.index.at(key));
  return gens;
}

bool sorted_contains(const IndexVec& v, std::uint32_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

bool sorted_subset(const IndexVec& small, const IndexVec& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// gamma = <[members_a, members_b]> for the lower central series steps.
IndexVec commutator_subgroup(const DenseTable& t, const IndexVec& a, const IndexVec& b) {
  std::vector<bool> seen(t.n, false);
  IndexVec comms;
  for (auto x : a) {
    const std::uint32_t xi = t.inv[x];
    for (auto y : b) {
      const std::uint32_t c = t.at(t.at(t.at(xi, t.inv[y]), x), y);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  }
  return closure_indices(t, comms);
}

std::uint64_t orbit_class_count(const DenseTable& t, const IndexVec& members,
                                const IndexVec& gens, std::vector<std::string>* reps,
                                std::vector<std::uint64_t>* sizes) {
  std::unordered_set<std::uint32_t> visited;
  std::uint64_t count = 0;
  for (auto start : members) {
    if (visited.count(start)) continue;
    ++count;
    IndexVec orbit{start};
    visited.insert(start);
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      for (auto g : gens) {
        const std::uint32_t y = t.conj(g, orbit[qi]);
        if (!visited.count(y)) {
          visited.insert(y);
          orbit.push_back(y);
        }
      }
    }
    if (reps) reps->push_back(t.keys[start]);
    if (sizes) sizes->push_back(orbit.size());
  }
  return count;
}

// Element-level record builder for groups too large for a dense table.
SubgroupRecord make_record_from_keys(const FiniteGroup& G,
                                     std::vector<std::string> sorted_keys) {
  SubgroupRecord rec;
  rec.group = G;
  rec.order = sorted_keys.size();
  rec.index = G.order() / rec.order;
  rec.element_keys = std::move(sorted_keys);

  if (auto table = G.dense_table_if_built()) {
    IndexVec members = member_indices(*table, rec);
    IndexVec gens = canonical_generators(*table, members);
    for (auto idx : gens) rec.generator_keys.push_back(table->keys[idx]);
  } else {
    FiniteGroup::KeySet covered;
    std::vector<GroupElement> gens;
    covered.insert(G.identity().canonical_key());
    for (const auto& key : rec.element_keys) {
      if (covered.count(key)) continue;
      gens.push_back(G.element_for_key(key));
      rec.generator_keys.push_back(key);
      // element-level closure of the generators so far
      covered.clear();
      covered.insert(G.identity().canonical_key());
      std::vector<GroupElement> frontier{G.identity()};
      while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
          for (const auto& g : gens) {
            GroupElement y = G.multiply(x, g);
            if (covered.insert(y.canonical_key()).second) next.push_back(std::move(y));
          }
        frontier = std::move(next);
      }
      if (covered.size() == rec.order) break;
    }
  }
  std::sort(rec.generator_keys.begin(), rec.generator_keys.end());
  return rec;
}

}  // namespace

bool SubgroupRecord::contains_key(const std::string& key) const {
  return std::binary_search(element_keys.begin(), element_keys.end(), key);
}

std::vector<GroupElement> SubgroupRecord::generator_elements() const {
  std::vector<GroupElement> out;
  out.reserve(generator_keys.size());
  for (const auto& key : generator_keys) out.push_back(group.element_for_key(key));
  return out;
}

FiniteGroup::KeySet SubgroupRecord::element_key_set() const {
  return FiniteGroup::KeySet(element_keys.begin(), element_keys.end());
}

SubgroupRecord subgroup_closure(const FiniteGroup& G, const std::vector<GroupElement>& gens,
                                std::uint64_t cap) {
  auto table = G.dense_table(cap);
  IndexVec gen_idx;
  for (const auto& g : gens) {
    auto it = table->index.find(g.canonical_key());
    if (it == table->index.end())
      throw PreconditionError("closure generator does not belong to the group");
    gen_idx.push_back(it->second);
  }
  IndexVec members = closure_indices(*table, gen_idx);
  return make_record(G, *table, members);
}

SubgroupRecord subgroup_from_keys(const FiniteGroup& G, const FiniteGroup::KeySet& keys) {
  auto table = G.dense_table();
  IndexVec members;
  members.reserve(keys.size());
  for (const auto& key : keys) {
    auto it = table->index.find(key);
    if (it == table->index.end())
      throw PreconditionError("subgroup key does not belong to the group");
    members.push_back(it->second);
  }
  std::sort(members.begin(), members.end());
  for (auto a : members)
    for (auto b : members)
      if (!sorted_contains(members, table->at(a, b)))
        throw PreconditionError("key set is not closed under multiplication");
  return make_record(G, *table, members);
}

SubgroupRecord trivial_subgroup(const FiniteGroup& G) {
  auto table = G.dense_table();
  return make_record(G, *table, IndexVec{table->identity});
}

SubgroupRecord whole_group_record(const FiniteGroup& G) {
  auto table = G.dense_table();
  IndexVec members(table->n);
  for (std::uint32_t i = 0; i < table->n; ++i) members[i] = i;
  return make_record(G, *table, members);
}

const std::vector<SubgroupRecord>& all_subgroups(const FiniteGroup& G, std::uint64_t cap) {
  if (auto cached = G.subgroup_cache()) return *cached;

  auto table_ptr = G.dense_table(cap);
  const DenseTable& t = *table_ptr;

  std::vector<IndexVec> members_of;  // per discovered subgroup
  std::vector<IndexVec> gens_of;     // canonical generators, kept small
  std::unordered_set<std::string> seen;

  auto add = [&](IndexVec members) -> bool {
    std::string key = bytes_of(members);
    if (!seen.insert(std::move(key)).second) return false;
    if (members_of.size() >= kMaxSubgroups)
      throw LimitError("subgroup enumeration exceeded " + std::to_string(kMaxSubgroups) +
                       " subgroups");
    gens_of.push_back(canonical_generators(t, members));
    members_of.push_back(std::move(members));
    return true;
  };

  add(IndexVec{t.identity});
  for (std::uint32_t x = 0; x < t.n; ++x) {
    if (x == t.identity) continue;
    add(closure_indices(t, {x}));
  }

  // Pairwise joins to a fixed point; every (i, j) pair is processed once,
  // including pairs with subgroups discovered later.
  for (std::size_t i = 1; i < members_of.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (members_of[j].size() == 1) continue;
      // If either side already contains the other's generators the join is
      // the larger closure, which is already present.
      if (sorted_subset(gens_of[j], members_of[i]) ||
          sorted_subset(gens_of[i], members_of[j]))
        continue;
      IndexVec join_gens = gens_of[i];
      join_gens.insert(join_gens.end(), gens_of[j].begin(), gens_of[j].end());
      add(closure_indices(t, join_gens));
    }
  }

  auto records = std::make_shared<std::vector<SubgroupRecord>>();
  records->reserve(members_of.size());
  for (std::size_t i = 0; i < members_of.size(); ++i)
    records->push_back(make_record(G, t, members_of[i], gens_of[i]));
  std::sort(records->begin(), records->end(),
            [](const SubgroupRecord& a, const SubgroupRecord& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.generator_keys < b.generator_keys;
            });
  G.fill_subgroup_cache(records);
  return *G.subgroup_cache();
}

bool is_normal(const SubgroupRecord& H) {
  const FiniteGroup& G = H.group;
  auto table = G.dense_table_if_built();
  if (table) {
    IndexVec members = member_indices(*table, H);
    for (const auto& g : G.generators()) {
      const std::uint32_t gi = table->index.at(g.canonical_key());
      for (auto m : members)
        if (!sorted_contains(members, table->conj(gi, m))) return false;
    }
    return true;
  }
  for (const auto& g : G.generators()) {
    const GroupElement gi = G.inverse(g);
    for (const auto& key : H.element_keys) {
      GroupElement c = G.multiply(G.multiply(gi, G.element_for_key(key)), g);
      if (!H.contains_key(c.canonical_key())) return false;
    }
  }
  return true;
}

std::vector<SubgroupRecord> normal_subgroups(const FiniteGroup& G, std::uint64_t cap) {
  std::vector<SubgroupRecord> out;
  for (const auto& H : all_subgroups(G, cap)) {
    SubgroupRecord rec = H;
    rec.normal = is_normal(rec);
    if (*rec.normal) out.push_back(std::move(rec));
  }
  return out;
}

SubgroupRecord derived_subgroup(const SubgroupRecord& H) {
  auto table = H.group.dense_table();
  IndexVec members = member_indices(*table, H);
  IndexVec derived = commutator_subgroup(*table, members, members);
  return make_record(H.group, *table, derived);
}

std::vector<std::uint64_t> abelian_invariants(const SubgroupRecord& H) {
  auto table_ptr = H.group.dense_table();
  const DenseTable& t = *table_ptr;
  IndexVec members = member_indices(t, H);
  IndexVec derived = commutator_subgroup(t, members, members);

  // rep[i] = current representative of i's coset; start with H/H' and
  // keep quotienting by a maximal-order element.
  std::vector<std::uint32_t> rep(t.n, UINT32_MAX);
  for (auto m : members) {
    if (rep[m] != UINT32_MAX) continue;
    for (auto d : derived) rep[t.at(d, m)] = m;
  }
  auto current_elems = [&]() {
    std::set<std::uint32_t> s;
    for (auto m : members) s.insert(rep[m]);
    return IndexVec(s.begin(), s.end());
  };
  auto mult = [&](std::uint32_t a, std::uint32_t b) { return rep[t.at(a, b)]; };
  const auto id_rep = [&]() { return rep[t.identity]; };

  std::vector<std::uint64_t> factors;  // collected largest-first
  IndexVec elems = current_elems();
  while (elems.size() > 1) {
    std::uint64_t best_order = 1;
    std::uint32_t best = id_rep();
    for (auto a : elems) {
      std::uint64_t ord = 1;
      std::uint32_t cur = a;
      while (cur != id_rep()) {
        cur = mult(cur, a);
        ++ord;
      }
      if (ord > best_order) {
        best_order = ord;
        best = a;
      }
    }
    factors.push_back(best_order);
    // powers of the extracted element
    IndexVec powers{id_rep()};
    for (std::uint32_t cur = best; cur != id_rep(); cur = mult(cur, best))
      powers.push_back(cur);
    // new representatives within the current quotient
    std::vector<std::uint32_t> next_rep(t.n, UINT32_MAX);
    for (auto x : elems) {
      if (next_rep[x] != UINT32_MAX) continue;
      for (auto p : powers) next_rep[mult(p, x)] = x;
    }
    for (auto m : members) rep[m] = next_rep[rep[m]];
    elems = current_elems();
  }
  std::reverse(factors.begin(), factors.end());  // ascending, d1 | d2 | ...
  return factors;
}

SubgroupRecord center(const FiniteGroup& G) {
  std::vector<std::string> keys;
  for (const auto& key : G.sorted_keys()) {
    const GroupElement& x = G.element_for_key(key);
    bool central = true;
    for (const auto& g : G.generators())
      if (!(G.multiply(x, g) == G.multiply(g, x))) {
        central = false;
        break;
      }
    if (central) keys.push_back(key);
  }
  return make_record_from_keys(G, std::move(keys));
}

SubgroupRecord centralizer(const FiniteGroup& G, const GroupElement& g) {
  std::vector<std::string> keys;
  for (const auto& key : G.sorted_keys()) {
    const GroupElement& x = G.element_for_key(key);
    if (G.multiply(x, g) == G.multiply(g, x)) keys.push_back(key);
  }
  return make_record_from_keys(G, std::move(keys));
}

SubgroupRecord conjugation_kernel(const FiniteGroup& G, const GeneratingSet& S) {
  std::vector<std::string> keys;
  for (const auto& key : G.sorted_keys()) {
    const GroupElement& x = G.element_for_key(key);
    bool commutes_all = true;
    for (const auto& s : S.elements())
      if (!(G.multiply(x, s) == G.multiply(s, x))) {
        commutes_all = false;
        break;
      }
    if (commutes_all) keys.push_back(key);
  }
  return make_record_from_keys(G, std::move(keys));
}

ConjugacyData conjugacy_classes(const FiniteGroup& G, std::uint64_t cap) {
  auto table_ptr = G.dense_table(cap);
  const DenseTable& t = *table_ptr;
  IndexVec members(t.n);
  for (std::uint32_t i = 0; i < t.n; ++i) members[i] = i;
  IndexVec gens;
  for (const auto& g : G.generators()) gens.push_back(t.index.at(g.canonical_key()));

  ConjugacyData data;
  data.class_count =
      orbit_class_count(t, members, gens, &data.representatives, &data.sizes);
  return data;
}

std::vector<std::vector<std::string>> conjugacy_class_members(const FiniteGroup& G,
                                                              std::uint64_t cap) {
  auto table_ptr = G.dense_table(cap);
  const DenseTable& t = *table_ptr;
  IndexVec gens;
  for (const auto& g : G.generators()) gens.push_back(t.index.at(g.canonical_key()));

  std::vector<std::vector<std::string>> classes;
  std::vector<bool> visited(t.n, false);
  for (std::uint32_t start = 0; start < t.n; ++start) {
    if (visited[start]) continue;
    IndexVec orbit{start};
    visited[start] = true;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi)
      for (auto g : gens) {
        const std::uint32_t y = t.conj(g, orbit[qi]);
        if (!visited[y]) {
          visited[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    std::vector<std::string> keys;
    keys.reserve(orbit.size());
    for (auto idx : orbit) keys.push_back(t.keys[idx]);
    classes.push_back(std::move(keys));
  }
  return classes;
}

std::uint64_t subgroup_class_count(const SubgroupRecord& H) {
  auto table_ptr = H.group.dense_table();
  const DenseTable& t = *table_ptr;
  IndexVec members = member_indices(t, H);
  IndexVec gens = generator_indices(t, H);
  return orbit_class_count(t, members, gens, nullptr, nullptr);
}

LowerCentralSeries lower_central_series(const SubgroupRecord& H) {
  auto table_ptr = H.group.dense_table();
  const DenseTable& t = *table_ptr;
  IndexVec whole = member_indices(t, H);

  LowerCentralSeries out;
  IndexVec gamma = whole;
  out.orders.push_back(gamma.size());
  if (gamma.size() == 1) {
    out.nilpotency_class = 0;
    return out;
  }
  while (true) {
    IndexVec next = commutator_subgroup(t, gamma, whole);
    out.orders.push_back(next.size());
    if (next.size() == 1) {
      out.nilpotency_class = out.orders.size() - 1;  // number of nontrivial terms
      return out;
    }
    if (next.size() == gamma.size()) return out;  // stationary, not nilpotent
    gamma = std::move(next);
  }
}

std::vector<GroupElement> coset_transversal(const FiniteGroup& G, const SubgroupRecord& H,
                                            const GeneratingSet& S) {
  std::vector<GroupElement> h_elems;
  h_elems.reserve(H.element_keys.size());
  for (const auto& key : H.element_keys) h_elems.push_back(G.element_for_key(key));

  auto coset_label = [&](const GroupElement& x) {
    std::string best;
    for (const auto& h : h_elems) {
      std::string key = G.multiply(h, x).canonical_key();
      if (best.empty() || key < best) best = std::move(key);
    }
    return best;
  };

  const std::uint64_t coset_count = G.order() / H.order;
  std::unordered_set<std::string> seen_labels;
  std::vector<GroupElement> transversal{G.identity()};
  seen_labels.insert(coset_label(G.identity()));

  std::vector<GroupElement> frontier{G.identity()};
  while (!frontier.empty() && transversal.size() < coset_count) {
    // collect this level's new cosets: label -> minimal-key representative
    std::map<std::string, std::pair<std::string, GroupElement>> fresh;
    for (const auto& tletter : frontier) {
      for (const auto& s : S.elements()) {
        GroupElement r = G.multiply(tletter, s);
        std::string label = coset_label(r);
        if (seen_labels.count(label)) continue;
        std::string rkey = r.canonical_key();
        auto it = fresh.find(label);
        if (it == fresh.end() || rkey < it->second.first)
          fresh[std::move(label)] = {std::move(rkey), std::move(r)};
      }
    }
    frontier.clear();
    // deterministic order within the level: ascending representative key
    std::map<std::string, GroupElement> level;
    for (auto& [label, rep] : fresh) {
      seen_labels.insert(label);
      level.emplace(std::move(rep.first), std::move(rep.second));
    }
    for (auto& [key, rep] : level) {
      transversal.push_back(rep);
      frontier.push_back(std::move(rep));
    }
  }
  if (transversal.size() < coset_count)
    throw PreconditionError("generating set does not reach every coset");
  return transversal;
}

SchreierData schreier_generators(const FiniteGroup& G, const SubgroupRecord& H,
                                 const GeneratingSet& S) {
  SchreierData data;
  data.transversal = coset_transversal(G, H, S);
  data.size_bound = H.index * S.size();

  std::vector<GroupElement> h_elems;
  h_elems.reserve(H.element_keys.size());
  for (const auto& key : H.element_keys) h_elems.push_back(G.element_for_key(key));
  std::unordered_map<std::string, const GroupElement*> rep_by_label;
  auto coset_label = [&](const GroupElement& x) {
    std::string best;
    for (const auto& h : h_elems) {
      std::string key = G.multiply(h, x).canonical_key();
      if (best.empty() || key < best) best = std::move(key);
    }
    return best;
  };
  for (const auto& rep : data.transversal) rep_by_label.emplace(coset_label(rep), &rep);

  std::unordered_set<std::string> seen;
  for (const auto& rep : data.transversal) {
    for (const auto& s : S.elements()) {
      GroupElement ts = G.multiply(rep, s);
      const GroupElement* coset_rep = rep_by_label.at(coset_label(ts));
      GroupElement gen = G.multiply(ts, G.inverse(*coset_rep));
      if (G.is_identity(gen)) continue;
      std::string key = gen.canonical_key();
      if (!H.contains_key(key))
        throw Error("schreier generator fell outside the subgroup");
      if (seen.insert(std::move(key)).second) data.generators.push_back(std::move(gen));
    }
  }
  return data;
}

AbelianSection best_abelian_section(const FiniteGroup& G, std::uint64_t cap) {
  const auto& subs = all_subgroups(G, cap);
  AbelianSection best;
  bool have = false;
  for (const auto& H : subs) {
    SubgroupRecord rec = H;
    SubgroupRecord derived = derived_subgroup(rec);
    rec.derived_order = derived.order;
    rec.abelianization_order = rec.order / derived.order;
    const std::uint64_t ab = *rec.abelianization_order;
    bool better = false;
    if (!have || ab > best.max_abelian_order) {
      better = true;
    } else if (ab == best.max_abelian_order) {
      if (rec.order < best.witness.order)
        better = true;
      else if (rec.order == best.witness.order &&
               rec.generator_keys < best.witness.generator_keys)
        better = true;
    }
    if (better) {
      best.max_abelian_order = ab;
      best.witness = std::move(rec);
      have = true;
    }
  }
  return best;
}

std::optional<BtWitness> find_bt_witness(const FiniteGroup& G, std::uint64_t index_cap,
                                         const FiniteGroup::KeySet* contained_in,
                                         std::uint64_t cap) {
  const auto& subs = all_subgroups(G, cap);
  std::vector<SubgroupRecord> normals;
  for (const auto& N : subs) {
    SubgroupRecord rec = N;
    rec.normal = is_normal(rec);
    if (!*rec.normal) continue;
    if (contained_in) {
      bool inside = true;
      for (const auto& key : rec.element_keys)
        if (!contained_in->count(key)) {
          inside = false;
          break;
        }
      if (!inside) continue;
    }
    normals.push_back(std::move(rec));
  }

  std::optional<BtWitness> best;
  for (const auto& H : subs) {
    if (H.index > index_cap) continue;
    SubgroupRecord derived = derived_subgroup(H);
    for (const auto& N : normals) {
      if (N.order < derived.order || N.order > H.order) continue;
      bool n_in_h = true;
      for (const auto& key : N.element_keys)
        if (!H.contains_key(key)) {
          n_in_h = false;
          break;
        }
      if (!n_in_h) continue;
      bool derived_in_n = true;
      for (const auto& key : derived.element_keys)
        if (!N.contains_key(key)) {
          derived_in_n = false;
          break;
        }
      if (!derived_in_n) continue;  // H/N abelian iff H' <= N

      auto candidate_rank = [](const SubgroupRecord& h, const SubgroupRecord& n) {
        return std::tuple(h.index, n.order, h.generator_keys, n.generator_keys);
      };
      if (!best ||
          candidate_rank(H, N) < candidate_rank(best->abelian_over, best->normal_part)) {
        BtWitness w;
        w.normal_part = N;
        w.abelian_over = H;
        best = std::move(w);
      }
    }
  }
  return best;
}

FiniteGroup as_group(const SubgroupRecord& H) {
  const FiniteGroup& G = H.group;
  std::vector<GroupElement> universe;
  universe.reserve(H.element_keys.size());
  for (const auto& key : H.element_keys) universe.push_back(G.element_for_key(key));
  std::vector<GroupElement> gens = H.generator_elements();

  // short stable id from the member keys
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& key : H.element_keys)
    for (unsigned char c : key) {
      h ^= c;
      h *= 1099511628211ull;
    }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%08llx", static_cast<unsigned long long>(h & 0xffffffffull));
  return G.subgroup_handle(G.id() + "|sub" + std::to_string(H.order) + ":" + buf,
                           std::move(gens), std::move(universe));
}

QuotientGroup quotient_of(const SubgroupRecord& H, const SubgroupRecord& N) {
  FiniteGroup Hg = as_group(H);
  return quotient(Hg, N.element_key_set());
}

}  // namespace cayleylab::structure
