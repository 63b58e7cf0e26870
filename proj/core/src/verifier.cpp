#include "cayleylab/verifier.hpp"

#include <algorithm>

#include "cayleylab/errors.hpp"

namespace cayleylab::verifier {

namespace {

void put(ClaimReport& r, const std::string& name, const BigRat& value) {
  r.witnesses[name] = value;
}
void put(ClaimReport& r, const std::string& name, std::uint64_t value) {
  r.witnesses[name] = BigRat(BigInt(value));
}
void put(ClaimReport& r, const std::string& name, const BigInt& value) {
  r.witnesses[name] = BigRat(value);
}
void put_flag(ClaimReport& r, const std::string& name, bool value) {
  r.witnesses[name] = BigRat(value ? 1 : 0);
}

BigRat get(const ClaimReport& r, const std::string& name) {
  auto it = r.witnesses.find(name);
  if (it == r.witnesses.end()) throw DomainError("missing witness: " + name);
  return it->second;
}

std::uint64_t get_u64(const ClaimReport& r, const std::string& name) {
  const BigRat v = get(r, name);
  if (!is_integer(v)) throw DomainError("witness is not an integer: " + name);
  return boost::multiprecision::numerator(v).convert_to<std::uint64_t>();
}

BigInt get_int(const ClaimReport& r, const std::string& name) {
  const BigRat v = get(r, name);
  if (!is_integer(v)) throw DomainError("witness is not an integer: " + name);
  return boost::multiprecision::numerator(v);
}

std::uint64_t require_diameter(const FiniteGroup& G, const GeneratingSet& S) {
  std::optional<std::uint64_t> d = cayley::diameter(G, S);
  if (!d) throw PreconditionError("generating set does not generate " + G.id());
  return *d;
}

// Diameter of a (sub)group under possibly-empty generators: the empty set is
// allowed exactly when the group is trivial.
std::uint64_t diameter_allow_trivial(const FiniteGroup& G, const GeneratingSet& S) {
  if (S.empty() && G.order() == 1) return 0;
  return require_diameter(G, S);
}

GeneratingSet project_gens(const QuotientGroup& Q, const std::vector<GroupElement>& elems,
                           const std::string& label) {
  std::vector<GroupElement> images;
  for (const auto& e : elems) {
    GroupElement img = Q.project(e);
    if (!Q.group().is_identity(img)) images.push_back(std::move(img));
  }
  return GeneratingSet::make(Q.group(), std::move(images), label);
}

}  // namespace

std::string claim_name(ClaimId id) {
  switch (id) {
    case ClaimId::abelian_diam: return "ABELIAN_DIAM";
    case ClaimId::theorem_b: return "THEOREM_B";
    case ClaimId::schreier: return "SCHREIER";
    case ClaimId::conj_bound: return "CONJ_BOUND";
    case ClaimId::nilp2: return "NILP2";
    case ClaimId::normal_set: return "NORMAL_SET";
    case ClaimId::bt_hypothesis: return "BT_HYPOTHESIS";
    case ClaimId::bt_witness: return "BT_WITNESS";
    case ClaimId::scaling: return "SCALING";
  }
  return "?";
}

std::optional<ClaimId> claim_from_name(const std::string& name) {
  for (ClaimId id :
       {ClaimId::abelian_diam, ClaimId::theorem_b, ClaimId::schreier, ClaimId::conj_bound,
        ClaimId::nilp2, ClaimId::normal_set, ClaimId::bt_hypothesis, ClaimId::bt_witness,
        ClaimId::scaling})
    if (claim_name(id) == name) return id;
  return std::nullopt;
}

ClaimReport check_abelian_diameter(const FiniteGroup& G, const GeneratingSet& S) {
  if (!is_abelian(G)) throw PreconditionError(G.id() + " is not abelian");
  ClaimReport r;
  r.claim = ClaimId::abelian_diam;
  r.group_id = G.id();
  r.gens_label = S.label();

  const std::uint64_t diam = require_diameter(G, S);
  const std::uint64_t order = G.order();
  const std::uint64_t set_size = S.size();
  const BigInt bound = binomial(diam + set_size, set_size);

  r.pass = BigInt(order) <= bound;
  put(r, "order", order);
  put(r, "diameter", diam);
  put(r, "set_size", set_size);
  put(r, "binomial_bound", bound);
  put_flag(r, "tight", BigInt(order) == bound);
  // The paper's literal bound diam >= |G|^(1/|S|), i.e. diam^|S| >= |G|,
  // recorded under this distance convention but not part of pass.
  put_flag(r, "literal_form_holds", ipow(BigInt(diam), set_size) >= order);
  return r;
}

ClaimReport check_schreier(const FiniteGroup& G, const structure::SubgroupRecord& H,
                           const GeneratingSet& S) {
  ClaimReport r;
  r.claim = ClaimId::schreier;
  r.group_id = G.id();
  r.gens_label = S.label();

  const std::uint64_t diam_g = require_diameter(G, S);
  structure::SchreierData sd = structure::schreier_generators(G, H, S);

  bool subset_ok = true;
  for (const auto& g : sd.generators)
    if (!H.contains_key(g.canonical_key())) subset_ok = false;

  FiniteGroup Hg = structure::as_group(H);
  GeneratingSet Sbar = GeneratingSet::make(Hg, sd.generators, "schreier");
  const bool gen_ok = generates(Hg, Sbar) || (H.order == 1 && Sbar.empty());
  const std::uint64_t diam_h = diameter_allow_trivial(Hg, Sbar);

  r.pass = subset_ok && gen_ok && sd.generators.size() <= sd.size_bound && diam_h <= diam_g;
  put(r, "subgroup_order", H.order);
  put(r, "index", H.index);
  put(r, "set_size", S.size());
  put(r, "schreier_size", sd.generators.size());
  put(r, "size_bound", sd.size_bound);
  put(r, "diam_g", diam_g);
  put(r, "diam_h", diam_h);
  put_flag(r, "subset_ok", subset_ok);
  put_flag(r, "generates_ok", gen_ok);
  return r;
}

ClaimReport check_theorem_B(const FiniteGroup& G, const structure::SubgroupRecord& H,
                            const GeneratingSet& S) {
  ClaimReport r;
  r.claim = ClaimId::theorem_b;
  r.group_id = G.id();
  r.gens_label = S.label();

  const std::uint64_t diam_g = require_diameter(G, S);
  structure::SchreierData sd = structure::schreier_generators(G, H, S);

  FiniteGroup Hg = structure::as_group(H);
  GeneratingSet Sbar = GeneratingSet::make(Hg, sd.generators, "schreier");
  const std::uint64_t diam_h = diameter_allow_trivial(Hg, Sbar);

  structure::SubgroupRecord Hd = structure::derived_subgroup(H);
  QuotientGroup Q = structure::quotient_of(H, Hd);
  GeneratingSet rho = project_gens(Q, sd.generators, "schreier/derived");
  const std::uint64_t diam_q = diameter_allow_trivial(Q.group(), rho);

  const std::uint64_t m = rho.size();
  const std::uint64_t m_bound = H.index * S.size();
  const std::uint64_t ab = H.order / Hd.order;
  const BigInt bound = binomial(diam_q + m, m);

  r.pass = diam_g >= diam_h && diam_h >= diam_q && BigInt(ab) <= bound && m <= m_bound;
  put(r, "subgroup_order", H.order);
  put(r, "index", H.index);
  put(r, "diam_g", diam_g);
  put(r, "diam_h", diam_h);
  put(r, "diam_q", diam_q);
  put(r, "m", m);
  put(r, "m_bound", m_bound);
  put(r, "abelianization", ab);
  put(r, "binomial_bound", bound);
  put_flag(r, "tight", BigInt(ab) == bound);
  return r;
}

ClaimReport check_conjugacy_bound(const FiniteGroup& G) {
  ClaimReport r;
  r.claim = ClaimId::conj_bound;
  r.group_id = G.id();

  const std::uint64_t k_g = structure::conjugacy_classes(G).class_count;
  const auto& subs = structure::all_subgroups(G);

  BigRat max_ratio(0);
  std::uint64_t worst_order = 0, worst_kh = 0;
  BigInt min_slack;  // min over H of k(H) - |H/H'|
  bool first = true;
  for (const auto& H : subs) {
    const std::uint64_t k_h = structure::subgroup_class_count(H);
    const std::uint64_t ab = H.order / structure::derived_subgroup(H).order;
    const BigRat ratio(BigInt(k_h), BigInt(H.index));
    if (ratio > max_ratio) {
      max_ratio = ratio;
      worst_order = H.order;
      worst_kh = k_h;
    }
    const BigInt slack = BigInt(k_h) - BigInt(ab);
    if (first || slack < min_slack) {
      min_slack = slack;
      first = false;
    }
  }

  r.pass = BigRat(BigInt(k_g)) >= max_ratio && min_slack >= 0;
  put(r, "k_g", k_g);
  put(r, "subgroup_count", subs.size());
  put(r, "max_kh_over_index", max_ratio);
  put(r, "min_kh_minus_ab", min_slack);
  put(r, "worst_subgroup_order", worst_order);
  put(r, "worst_subgroup_k", worst_kh);
  return r;
}

ClaimReport check_lemma_nilp2(const FiniteGroup& G) {
  ClaimReport r;
  r.claim = ClaimId::nilp2;
  r.group_id = G.id();

  structure::AbelianSection sec = structure::best_abelian_section(G);
  structure::LowerCentralSeries lcs = structure::lower_central_series(sec.witness);

  r.pass = lcs.nilpotent() && *lcs.nilpotency_class <= 2;
  put(r, "max_abelian_order", sec.max_abelian_order);
  put(r, "witness_order", sec.witness.order);
  put_flag(r, "nilpotent", lcs.nilpotent());
  put(r, "nilpotency_class", lcs.nilpotent() ? *lcs.nilpotency_class : 0);
  return r;
}

ClaimReport check_normal_set(const FiniteGroup& G, const GeneratingSet& S) {
  if (!S.conjugation_closed())
    throw PreconditionError("generating set is not closed under conjugation");
  ClaimReport r;
  r.claim = ClaimId::normal_set;
  r.group_id = G.id();
  r.gens_label = S.label();

  if (!generates(G, S)) {
    r.pass = true;
    r.notes = "S does not generate; the claim holds vacuously";
    put_flag(r, "generates", false);
    return r;
  }
  put_flag(r, "generates", true);

  structure::SubgroupRecord kernel = structure::conjugation_kernel(G, S);
  structure::SubgroupRecord Z = structure::center(G);
  const bool kernel_is_center = kernel.element_keys == Z.element_keys;

  const std::uint64_t center_index = G.order() / Z.order;
  const BigInt fact = factorial(S.size());

  structure::SchreierData sd = structure::schreier_generators(G, Z, S);
  FiniteGroup Zg = structure::as_group(Z);
  GeneratingSet Sbar = GeneratingSet::make(Zg, sd.generators, "schreier");
  const std::uint64_t diam_g = require_diameter(G, S);
  const std::uint64_t diam_z = diameter_allow_trivial(Zg, Sbar);
  const std::uint64_t m = sd.generators.size();
  const std::uint64_t m_bound = S.size() * center_index;
  const BigInt bound = binomial(diam_z + m, m);

  r.pass = kernel_is_center && BigInt(center_index) <= fact && diam_g >= diam_z &&
           BigInt(Z.order) <= bound && m <= m_bound;
  put_flag(r, "kernel_is_center", kernel_is_center);
  put(r, "set_size", S.size());
  put(r, "center_order", Z.order);
  put(r, "center_index", center_index);
  put(r, "factorial_bound", fact);
  put_flag(r, "factorial_tight", BigInt(center_index) == fact);
  put(r, "diam_g", diam_g);
  put(r, "diam_z", diam_z);
  put(r, "m", m);
  put(r, "m_bound", m_bound);
  put(r, "binomial_bound", bound);
  return r;
}

ClaimReport growth_hypothesis_report(const FiniteGroup& G, const GeneratingSet& S,
                                     const BigRat& theta, const BigRat& delta) {
  ClaimReport r;
  r.claim = ClaimId::bt_hypothesis;
  r.group_id = G.id();
  r.gens_label = S.label();
  r.notes = "informational growth scan";

  std::optional<cayley::GrowthWitness> w = cayley::growth_condition(G, S, theta, delta);
  r.pass = true;
  put(r, "theta", theta);
  put(r, "delta", delta);
  put_flag(r, "witness_found", w.has_value());
  if (w) {
    put(r, "n", w->n);
    put(r, "ratio", w->ratio);
    put(r, "alpha", w->alpha);
    put(r, "scan_bound", w->scan_bound);
    put(r, "diameter", w->diameter);
  } else {
    const std::uint64_t diam = require_diameter(G, S);
    put(r, "diameter", diam);
    put(r, "alpha", growth_alpha(diam));
    put(r, "scan_bound", floor_rational_power(diam, delta));
  }
  return r;
}

ClaimReport check_bt(const FiniteGroup& G, const GeneratingSet& S, const BigRat& theta,
                     const BigRat& delta, std::uint64_t index_cap) {
  ClaimReport r;
  r.claim = ClaimId::bt_witness;
  r.group_id = G.id();
  r.gens_label = S.label();

  put(r, "theta", theta);
  put(r, "delta", delta);
  put(r, "index_cap", index_cap);

  std::optional<cayley::GrowthWitness> w = cayley::growth_condition(G, S, theta, delta);
  if (!w) {
    r.pass = true;
    r.notes = "growth condition has no witness; the conclusion is vacuous";
    put_flag(r, "growth_witness", false);
    return r;
  }
  put_flag(r, "growth_witness", true);
  put(r, "n", w->n);
  put(r, "ratio", w->ratio);
  put(r, "diameter", w->diameter);

  const std::uint64_t radius = floor_rational_power(w->diameter, BigRat(1, 2) + delta);
  FiniteGroup::KeySet ball = cayley::ball_keys(G, S, radius);
  put(r, "ball_radius", radius);
  put(r, "ball_size", ball.size());

  std::optional<structure::BtWitness> bt = structure::find_bt_witness(G, index_cap, &ball);
  put_flag(r, "witness_found", bt.has_value());
  if (!bt) {
    r.pass = false;
    r.notes = "no normal subgroup inside the ball yields an abelian section of small index";
    put_flag(r, "n_in_ball", false);
    return r;
  }

  bool n_in_ball = true;
  for (const auto& key : bt->normal_part.element_keys)
    if (!ball.count(key)) n_in_ball = false;

  r.pass = n_in_ball && bt->abelian_over.index <= index_cap;
  put(r, "normal_order", bt->normal_part.order);
  put(r, "h_order", bt->abelian_over.order);
  put(r, "h_index", bt->abelian_over.index);
  put_flag(r, "n_in_ball", n_in_ball);
  return r;
}

bool recompute_pass(const ClaimReport& r) {
  auto flag = [&](const std::string& name) { return get(r, name) == 1; };
  switch (r.claim) {
    case ClaimId::abelian_diam: {
      const std::uint64_t diam = get_u64(r, "diameter");
      const std::uint64_t s = get_u64(r, "set_size");
      return get_int(r, "order") <= binomial(diam + s, s);
    }
    case ClaimId::schreier:
      return flag("subset_ok") && flag("generates_ok") &&
             get_u64(r, "schreier_size") <= get_u64(r, "size_bound") &&
             get_u64(r, "diam_h") <= get_u64(r, "diam_g");
    case ClaimId::theorem_b: {
      const std::uint64_t diam_q = get_u64(r, "diam_q");
      const std::uint64_t m = get_u64(r, "m");
      return get_u64(r, "diam_g") >= get_u64(r, "diam_h") &&
             get_u64(r, "diam_h") >= diam_q &&
             get_int(r, "abelianization") <= binomial(diam_q + m, m) &&
             m <= get_u64(r, "m_bound");
    }
    case ClaimId::conj_bound:
      return BigRat(get_int(r, "k_g")) >= get(r, "max_kh_over_index") &&
             get_int(r, "min_kh_minus_ab") >= 0;
    case ClaimId::nilp2:
      return flag("nilpotent") && get_u64(r, "nilpotency_class") <= 2;
    case ClaimId::normal_set: {
      if (!flag("generates")) return true;
      const std::uint64_t diam_z = get_u64(r, "diam_z");
      const std::uint64_t m = get_u64(r, "m");
      return flag("kernel_is_center") &&
             get_int(r, "center_index") <= factorial(get_u64(r, "set_size")) &&
             get_u64(r, "diam_g") >= diam_z &&
             get_int(r, "center_order") <= binomial(diam_z + m, m) &&
             m <= get_u64(r, "m_bound");
    }
    case ClaimId::bt_hypothesis:
      return true;
    case ClaimId::bt_witness:
      if (!flag("growth_witness")) return true;
      return flag("witness_found") && flag("n_in_ball") &&
             get_u64(r, "h_index") <= get_u64(r, "index_cap");
    case ClaimId::scaling:
      return true;
  }
  return false;
}

}  // namespace cayleylab::verifier
