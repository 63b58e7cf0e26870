#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cayleylab/cayley.hpp"
#include "cayleylab/genset.hpp"
#include "cayleylab/group.hpp"
#include "cayleylab/numeric.hpp"
#include "cayleylab/structure.hpp"

namespace cayleylab::verifier {

enum class ClaimId : std::uint8_t {
  abelian_diam,
  theorem_b,
  schreier,
  conj_bound,
  nilp2,
  normal_set,
  bt_hypothesis,
  bt_witness,
  scaling,
};

std::string claim_name(ClaimId id);
std::optional<ClaimId> claim_from_name(const std::string& name);

/// Structured pass/fail record for one claim on one instance. `pass` is a
/// pure function of the witnesses; recompute_pass re-derives it.
struct ClaimReport {
  ClaimId claim = ClaimId::abelian_diam;
  std::string group_id;
  std::string gens_label;
  bool pass = false;
  std::map<std::string, BigRat> witnesses;
  std::string notes;
};

/// Re-evaluates the claim formula from the witnesses alone.
bool recompute_pass(const ClaimReport& report);

/// Abelian diameter bound in corrected combinatorial form:
/// |G| <= C(diam + |S|, |S|). Also records whether the literal form
/// diam >= |G|^(1/|S|) holds under this distance convention.
ClaimReport check_abelian_diameter(const FiniteGroup& G, const GeneratingSet& S);

/// The four conclusions of the Schreier construction: Sbar inside H,
/// |Sbar| <= |G:H||S|, <Sbar> = H, diam(H,Sbar) <= diam(G,S).
ClaimReport check_schreier(const FiniteGroup& G, const structure::SubgroupRecord& H,
                           const GeneratingSet& S);

/// The three-link chain
///   diam(G,S) >= diam(H,Sbar) >= diam(H/H', rho(Sbar))
/// and |H/H'| <= C(diam(H/H',rho(Sbar)) + m, m) with
/// m = |rho(Sbar) \ {e}| <= |G:H||S|.
ClaimReport check_theorem_B(const FiniteGroup& G, const structure::SubgroupRecord& H,
                            const GeneratingSet& S);

/// k(G) >= k(H)/|G:H| and k(H) >= |H/H'| for every subgroup H.
ClaimReport check_conjugacy_bound(const FiniteGroup& G);

/// The best-abelian-section witness is nilpotent of class at most 2.
ClaimReport check_lemma_nilp2(const FiniteGroup& G);

/// For conjugation-closed S: if S generates, the conjugation kernel equals
/// the center, |G/Z| <= |S|!, and the Schreier/abelian chain holds on Z;
/// vacuous pass when S does not generate.
ClaimReport check_normal_set(const FiniteGroup& G, const GeneratingSet& S);

/// Growth hypothesis scan, informational: always passes, records whether a
/// witness exists and its numbers.
ClaimReport growth_hypothesis_report(const FiniteGroup& G, const GeneratingSet& S,
                                     const BigRat& theta, const BigRat& delta);

/// If the growth condition holds, require a (N, H) pair with N normal,
/// contained in the ball of radius floor(diam^(1/2+delta)), H/N abelian of
/// index <= index_cap; vacuous pass when the growth scan finds no witness.
ClaimReport check_bt(const FiniteGroup& G, const GeneratingSet& S, const BigRat& theta,
                     const BigRat& delta, std::uint64_t index_cap);

enum class ScalingFamily : std::uint8_t { cyclic, dihedral, wreath, sl2, elemab };

std::string scaling_family_name(ScalingFamily family);
std::optional<ScalingFamily> scaling_family_from_name(const std::string& name);

struct ScalingRow {
  std::uint64_t parameter = 0;
  std::uint64_t group_order = 0;
  std::uint64_t diameter = 0;
  double log_order = 0.0;     // natural log
  double fit_exponent = 0.0;  // per-table least-squares slope, repeated per row
};

struct ScalingTable {
  ScalingFamily family = ScalingFamily::cyclic;
  std::vector<ScalingRow> rows;  // sorted by group order
  double fit_exponent = 0.0;
  std::map<std::string, double> extras;  // e.g. wreath max diam/n
};

/// Exact diameters with standard generators across a parameter range, plus
/// the least-squares slope of log diam against log |G|. ELEMAB uses p = 2
/// with the parameter as the rank.
ScalingTable scaling_experiment(ScalingFamily family,
                                const std::vector<std::uint64_t>& parameters);

struct CorpusEntry {
  std::string group_spec;
  std::optional<std::string> gens_spec;
};

struct SweepConfig {
  std::uint64_t seed = 0;
  std::uint64_t sample_limit = 50;     // generating sets per group
  std::uint64_t max_gens_size = 3;
  std::uint64_t exhaustive_limit = 500;  // enumerate all subsets when fewer
  BigRat theta = BigRat(5);
  BigRat delta = BigRat(1, 4);
  std::uint64_t index_cap = 2;
  std::uint64_t order_cap = FiniteGroup::kDefaultOrderCap;
  std::uint64_t subgroup_cap = structure::kDefaultSubgroupCap;
  // Order gates: a claim is skipped for groups above its gate.
  std::uint64_t abelian_order_gate = 512;    // ABELIAN_DIAM
  std::uint64_t schreier_order_gate = 200;   // SCHREIER, THEOREM_B, NORMAL_SET
  std::uint64_t subgroup_order_gate = 500;   // CONJ_BOUND, NILP2
};

struct SweepResult {
  std::vector<ClaimReport> reports;
  std::uint64_t failures = 0;
  std::uint64_t errors = 0;
};

/// Deterministic sweep of the claims over the corpus: sampled generating
/// sets for the per-set claims, conjugacy classes for NORMAL_SET, every
/// subgroup for SCHREIER/THEOREM_B. Per-instance errors become failed
/// reports; the sweep never aborts.
SweepResult run_corpus(const std::vector<CorpusEntry>& corpus,
                       const std::vector<ClaimId>& claims, const SweepConfig& config);

/// Seeded sample of generating sets of size 1..max_size: exhaustive over all
/// subsets when there are at most `exhaustive_limit` of them, random draws
/// otherwise; keeps only generating sets, at most `limit` of them.
std::vector<GeneratingSet> sample_generating_sets(const FiniteGroup& G, std::uint64_t seed,
                                                  std::uint64_t max_size = 3,
                                                  std::uint64_t limit = 50,
                                                  std::uint64_t exhaustive_limit = 500);

/// The curated corpus used by the verification suites.
std::vector<CorpusEntry> standard_corpus();

/// Every product:a,b spec over the constructible base families whose order
/// is at most max_order (factors drawn from a bounded parameter universe),
/// deduplicated by spec text.
std::vector<CorpusEntry> product_corpus(std::uint64_t max_order);

}  // namespace cayleylab::verifier
