#include <algorithm>
#include <random>
#include <set>

#include "cayleylab/cli.hpp"
#include "cayleylab/errors.hpp"
#include "cayleylab/families.hpp"
#include "cayleylab/verifier.hpp"

namespace cayleylab::verifier {

namespace {

GeneratingSet standard_gens(const FiniteGroup& G) {
  return GeneratingSet::make(G, G.generators(), "standard");
}

GeneratingSet set_from_indices(const FiniteGroup& G, const std::vector<std::uint32_t>& idx,
                               std::uint64_t counter) {
  const auto& keys = G.sorted_keys();
  std::vector<GroupElement> elems;
  elems.reserve(idx.size());
  for (auto i : idx) elems.push_back(G.element_for_key(keys[i]));
  return GeneratingSet::make(G, std::move(elems), "sampled:" + std::to_string(counter));
}

}  // namespace

std::vector<GeneratingSet> sample_generating_sets(const FiniteGroup& G, std::uint64_t seed,
                                                  std::uint64_t max_size, std::uint64_t limit,
                                                  std::uint64_t exhaustive_limit) {
  const std::uint64_t n = G.order();
  std::vector<GeneratingSet> out;
  if (n == 0 || limit == 0) return out;
  max_size = std::min<std::uint64_t>(max_size, n);

  BigInt subset_count = 0;
  for (std::uint64_t s = 1; s <= max_size; ++s) subset_count += binomial(n, s);

  std::uint64_t counter = 0;
  if (subset_count <= exhaustive_limit) {
    // all subsets, size ascending, lexicographic by index
    for (std::uint64_t s = 1; s <= max_size && out.size() < limit; ++s) {
      std::vector<std::uint32_t> idx(s);
      for (std::uint64_t i = 0; i < s; ++i) idx[i] = static_cast<std::uint32_t>(i);
      while (true) {
        GeneratingSet cand = set_from_indices(G, idx, counter);
        if (generates(G, cand)) {
          ++counter;
          out.push_back(std::move(cand));
          if (out.size() >= limit) break;
        }
        // next combination
        std::size_t k = s;
        while (k > 0 && idx[k - 1] == n - s + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    return out;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> size_dist(1, max_size);
  std::vector<std::uint32_t> population(n);
  for (std::uint64_t i = 0; i < n; ++i) population[i] = static_cast<std::uint32_t>(i);
  std::set<std::vector<std::uint32_t>> seen;
  const std::uint64_t max_attempts = limit * 200;
  for (std::uint64_t attempt = 0; attempt < max_attempts && out.size() < limit; ++attempt) {
    const std::uint64_t s = size_dist(rng);
    std::vector<std::uint32_t> idx;
    std::sample(population.begin(), population.end(), std::back_inserter(idx), s, rng);
    std::sort(idx.begin(), idx.end());
    if (!seen.insert(idx).second) continue;
    GeneratingSet cand = set_from_indices(G, idx, counter);
    if (generates(G, cand)) {
      ++counter;
      out.push_back(std::move(cand));
    }
  }
  return out;
}

SweepResult run_corpus(const std::vector<CorpusEntry>& corpus,
                       const std::vector<ClaimId>& claims, const SweepConfig& config) {
  SweepResult result;

  auto record = [&](ClaimReport report) {
    if (!report.pass) ++result.failures;
    result.reports.push_back(std::move(report));
  };
  auto record_error = [&](ClaimId claim, const std::string& group, const std::string& gens,
                          const std::string& what) {
    ClaimReport r;
    r.claim = claim;
    r.group_id = group;
    r.gens_label = gens;
    r.pass = false;
    r.notes = "error: " + what;
    ++result.errors;
    record(std::move(r));
  };

  for (std::size_t ei = 0; ei < corpus.size(); ++ei) {
    const CorpusEntry& entry = corpus[ei];
    FiniteGroup G;
    std::optional<GeneratingSet> entry_gens;
    try {
      G = construct(cli::parse_group_spec(entry.group_spec), config.order_cap);
      G.order();
      if (entry.gens_spec)
        entry_gens = cli::resolve_generating_set(G, cli::parse_gens_spec(*entry.gens_spec));
    } catch (const Error& e) {
      record_error(claims.empty() ? ClaimId::abelian_diam : claims.front(), entry.group_spec,
                   entry.gens_spec.value_or(""), e.what());
      continue;
    }

    const std::uint64_t order = G.order();
    const std::uint64_t set_seed = config.seed * 1000003ull + ei;

    std::optional<std::vector<GeneratingSet>> sampled;  // filled on demand
    auto gen_sets = [&]() -> const std::vector<GeneratingSet>& {
      if (!sampled) {
        if (entry_gens)
          sampled = std::vector<GeneratingSet>{*entry_gens};
        else
          sampled = sample_generating_sets(G, set_seed, config.max_gens_size,
                                           config.sample_limit, config.exhaustive_limit);
      }
      return *sampled;
    };

    for (ClaimId claim : claims) {
      try {
        switch (claim) {
          case ClaimId::abelian_diam: {
            if (!is_abelian(G) || order > config.abelian_order_gate) break;
            for (const auto& S : gen_sets()) record(check_abelian_diameter(G, S));
            break;
          }
          case ClaimId::schreier:
          case ClaimId::theorem_b: {
            if (order > config.schreier_order_gate) break;
            const auto& subs = structure::all_subgroups(G, config.subgroup_cap);
            for (const auto& S : gen_sets())
              for (const auto& H : subs)
                record(claim == ClaimId::schreier ? check_schreier(G, H, S)
                                                  : check_theorem_B(G, H, S));
            break;
          }
          case ClaimId::conj_bound: {
            if (order > config.subgroup_order_gate) break;
            record(check_conjugacy_bound(G));
            break;
          }
          case ClaimId::nilp2: {
            if (order > config.subgroup_order_gate) break;
            record(check_lemma_nilp2(G));
            break;
          }
          case ClaimId::normal_set: {
            if (order > config.schreier_order_gate) break;
            auto classes = structure::conjugacy_class_members(G, config.subgroup_cap);
            for (std::size_t ci = 0; ci < classes.size(); ++ci) {
              std::vector<GroupElement> elems;
              elems.reserve(classes[ci].size());
              for (const auto& key : classes[ci]) elems.push_back(G.element_for_key(key));
              GeneratingSet S =
                  GeneratingSet::make(G, std::move(elems), "class:" + std::to_string(ci));
              record(check_normal_set(G, S));
            }
            break;
          }
          case ClaimId::bt_hypothesis: {
            GeneratingSet S = entry_gens ? *entry_gens : standard_gens(G);
            record(growth_hypothesis_report(G, S, config.theta, config.delta));
            break;
          }
          case ClaimId::bt_witness: {
            if (order > config.subgroup_order_gate) break;
            GeneratingSet S = entry_gens ? *entry_gens : standard_gens(G);
            record(check_bt(G, S, config.theta, config.delta, config.index_cap));
            break;
          }
          case ClaimId::scaling:
            break;  // scaling runs through its own experiment entry point
        }
      } catch (const Error& e) {
        record_error(claim, G.id(), entry_gens ? entry_gens->label() : "", e.what());
      }
    }
  }
  return result;
}

std::vector<CorpusEntry> standard_corpus() {
  const char* specs[] = {
      // abelian, orders up to 512
      "cyclic:5", "cyclic:6", "cyclic:8", "cyclic:9", "cyclic:12", "cyclic:16",
      "cyclic:24", "cyclic:30", "cyclic:64", "cyclic:128", "cyclic:256", "cyclic:512",
      "elemab:2:2", "elemab:2:3", "elemab:2:4", "elemab:2:5", "elemab:3:2", "elemab:3:3",
      "elemab:5:2", "product:cyclic:2,cyclic:4", "product:cyclic:4,cyclic:8",
      "product:cyclic:2,cyclic:6", "product:cyclic:3,cyclic:9",
      "product:cyclic:6,cyclic:10", "product:elemab:2:2,cyclic:4",
      // non-abelian
      "sym:3", "sym:4", "sym:5", "dihedral:4", "dihedral:5", "dihedral:6", "dihedral:7",
      "dihedral:8", "dihedral:10", "dihedral:12", "q8", "sl2:3", "sl2:5", "sl2:7",
      "wreath:2", "wreath:3", "wreath:4", "product:sym:3,cyclic:2",
      "product:sym:3,cyclic:4", "product:q8,cyclic:3", "product:dihedral:4,cyclic:3",
      "product:sym:3,sym:3", "product:q8,q8", "product:sl2:3,cyclic:2",
  };
  std::vector<CorpusEntry> out;
  for (const char* s : specs) out.push_back({s, std::nullopt});
  return out;
}

std::vector<CorpusEntry> product_corpus(std::uint64_t max_order) {
  struct Base {
    std::string spec;
    std::uint64_t order;
  };
  std::vector<Base> bases;
  for (std::uint64_t n = 2; n <= 31; ++n)
    bases.push_back({"cyclic:" + std::to_string(n), n});
  for (std::uint64_t n = 3; n <= 15; ++n)
    bases.push_back({"dihedral:" + std::to_string(n), 2 * n});
  bases.push_back({"sym:3", 6});
  bases.push_back({"sym:4", 24});
  bases.push_back({"q8", 8});
  bases.push_back({"elemab:2:2", 4});
  bases.push_back({"elemab:2:3", 8});
  bases.push_back({"elemab:2:4", 16});
  bases.push_back({"elemab:3:2", 9});
  bases.push_back({"elemab:3:3", 27});
  bases.push_back({"elemab:5:2", 25});
  bases.push_back({"sl2:3", 24});
  bases.push_back({"wreath:2", 8});
  bases.push_back({"wreath:3", 24});

  std::set<std::string> seen;
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i; j < bases.size(); ++j) {
      if (bases[i].order * bases[j].order > max_order) continue;
      std::string spec = "product:" + bases[i].spec + "," + bases[j].spec;
      if (seen.insert(spec).second) out.push_back({std::move(spec), std::nullopt});
    }
  return out;
}

}  // namespace cayleylab::verifier
