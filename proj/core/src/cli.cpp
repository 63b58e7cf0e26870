#include "cayleylab/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cayleylab/cayley.hpp"
#include "cayleylab/errors.hpp"
#include "cayleylab/families.hpp"
#include "cayleylab/structure.hpp"
#include "cayleylab/version.hpp"

namespace cayleylab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string hex_key(const std::string& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * key.size());
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::vector<GroupElement> parse_gens_file(const FiniteGroup& G, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open generator file: " + path);
  std::vector<GroupElement> out;
  std::string line;
  const GroupElement::Kind kind = G.identity().kind();
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;

    auto to_num = [&](const std::string& t) -> std::uint64_t {
      std::uint64_t v = 0;
      for (char c : t) {
        if (c < '0' || c > '9') throw FormatError("non-numeric token '" + t + "' in " + path);
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
      }
      return v;
    };

    GroupElement elem;
    switch (kind) {
      case GroupElement::Kind::perm: {
        const std::size_t degree = G.identity().as_perm().images.size();
        if (tokens.size() != degree)
          throw FormatError("expected " + std::to_string(degree) + " images per line");
        std::vector<std::uint16_t> images;
        for (const auto& t : tokens) images.push_back(static_cast<std::uint16_t>(to_num(t)));
        elem = GroupElement::perm(std::move(images));
        break;
      }
      case GroupElement::Kind::mat2: {
        if (tokens.size() != 4) throw FormatError("expected 4 matrix entries per line");
        std::array<std::uint16_t, 4> entries;
        for (int i = 0; i < 4; ++i) entries[i] = static_cast<std::uint16_t>(to_num(tokens[i]));
        elem = GroupElement::mat2(entries, G.identity().as_mat2().mod);
        break;
      }
      case GroupElement::Kind::wreath: {
        const unsigned n = G.identity().as_wreath().points;
        if (tokens.size() != 2 || tokens[0].size() != n)
          throw FormatError("expected '<bits> <shift>' with " + std::to_string(n) + " bits");
        std::uint16_t bits = 0;
        for (unsigned i = 0; i < n; ++i) {
          if (tokens[0][i] == '1')
            bits |= std::uint16_t(1) << i;
          else if (tokens[0][i] != '0')
            throw FormatError("bits must be 0/1");
        }
        elem = GroupElement::wreath(bits, static_cast<std::uint8_t>(to_num(tokens[1])),
                                    static_cast<std::uint8_t>(n));
        break;
      }
      case GroupElement::Kind::coset:
        throw FormatError("generator files are not supported for quotient groups");
    }
    if (!G.contains_key(elem.canonical_key()))
      throw FormatError("element in " + path + " does not belong to " + G.id());
    out.push_back(std::move(elem));
  }
  if (out.empty()) throw FormatError("generator file " + path + " is empty");
  return out;
}

}  // namespace

GeneratingSet resolve_generating_set(const FiniteGroup& G, const GensSpec& spec) {
  GeneratingSet S;
  switch (spec.kind) {
    case GensKind::standard:
      S = GeneratingSet::make(G, G.generators(), "standard");
      break;
    case GensKind::all_nonid: {
      std::vector<GroupElement> elems;
      for (const auto& key : G.sorted_keys()) {
        const GroupElement& e = G.element_for_key(key);
        if (!G.is_identity(e)) elems.push_back(e);
      }
      S = GeneratingSet::make(G, std::move(elems), "all-nonid");
      break;
    }
    case GensKind::random: {
      if (spec.count < 1) throw PreconditionError("random gens size must be positive");
      const auto& keys = G.sorted_keys();
      const std::uint64_t size = std::min<std::uint64_t>(spec.count, keys.size());
      std::mt19937_64 rng(spec.seed);
      bool found = false;
      for (int attempt = 0; attempt < 10'000 && !found; ++attempt) {
        std::vector<std::string> picked;
        std::sample(keys.begin(), keys.end(), std::back_inserter(picked), size, rng);
        std::vector<GroupElement> elems;
        for (const auto& key : picked) elems.push_back(G.element_for_key(key));
        S = GeneratingSet::make(G, std::move(elems), spec.to_string());
        if (generates(G, S)) found = true;
      }
      if (!found)
        throw LimitError("no generating set of size " + std::to_string(spec.count) +
                         " found in 10000 attempts");
      break;
    }
    case GensKind::file:
      S = GeneratingSet::make(G, parse_gens_file(G, spec.path), "file:" + spec.path);
      break;
  }
  if (spec.modifier == GensModifier::symmetric) S = S.symmetric_closure(G);
  if (spec.modifier == GensModifier::conj_close) S = S.conjugation_closure(G);
  return S;
}

std::vector<verifier::CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<verifier::CorpusEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string group_spec, gens_spec, extra;
    if (!(ls >> group_spec)) continue;
    verifier::CorpusEntry entry;
    entry.group_spec = group_spec;
    if (ls >> gens_spec) entry.gens_spec = gens_spec;
    if (ls >> extra) throw FormatError("unexpected token '" + extra + "' in corpus line");
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<verifier::CorpusEntry> parse_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open corpus file: " + path);
  return parse_corpus(in);
}

namespace {

std::vector<std::uint64_t> parse_range(const std::string& text) {
  std::vector<std::uint64_t> out;
  auto number = [](const std::string& t) -> std::uint64_t {
    if (t.empty()) throw ParseError("empty number in range", 0);
    std::uint64_t v = 0;
    for (char c : t) {
      if (c < '0' || c > '9') throw ParseError("bad range component '" + t + "'", 0);
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
  };
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(number(part));
    return out;
  }
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    out.push_back(number(text));
    return out;
  }
  const std::uint64_t lo = number(text.substr(0, dots));
  std::string rest = text.substr(dots + 2);
  std::uint64_t factor = 0, step = 1;
  if (auto colon = rest.find(':'); colon != std::string::npos) {
    std::string suffix = rest.substr(colon + 1);
    rest = rest.substr(0, colon);
    if (suffix.size() > 1 && suffix[0] == 'x')
      factor = number(suffix.substr(1));
    else if (suffix.size() > 1 && suffix[0] == '+')
      step = number(suffix.substr(1));
    else
      throw ParseError("range suffix must be xK or +K", 0);
  }
  const std::uint64_t hi = number(rest);
  if (lo > hi) throw ParseError("range low end exceeds high end", 0);
  if (factor >= 2)
    for (std::uint64_t v = lo; v <= hi; v *= factor) out.push_back(v);
  else
    for (std::uint64_t v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

void emit(const RunConfig& config, const std::string& payload) {
  if (config.output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(config.output_path, std::ios::binary);
  if (!out) throw FormatError("cannot open output file: " + config.output_path);
  out << payload;
}

int failures_to_exit(std::uint64_t failures) { return failures > 0 ? 1 : 0; }

struct Options {
  RunConfig config;
  std::string group_spec;
  std::string gens_spec = "standard";
  std::string claim;
  std::string corpus_path;
  std::string claims = "ABELIAN_DIAM,SCHREIER,THEOREM_B,CONJ_BOUND,NILP2,NORMAL_SET,BT_WITNESS";
  std::string family;
  std::string range;
  std::string theta = "5";
  std::string delta = "1/4";
  std::uint64_t index_cap = 2;
  std::uint64_t max_n = 10;
  bool list_subgroups = false;
  bool list_classes = false;
  bool best_section = false;
};

FiniteGroup build_group(const Options& opt) {
  return construct(parse_group_spec(opt.group_spec), opt.config.order_cap);
}

GeneratingSet build_gens(const Options& opt, const FiniteGroup& G) {
  return resolve_generating_set(G, parse_gens_spec(opt.gens_spec));
}

int cmd_diameter(const Options& opt) {
  FiniteGroup G = build_group(opt);
  GeneratingSet S = build_gens(opt, G);
  cayley::BallProfile profile = cayley::ball_profile(G, S);
  emit(opt.config, serialize_ball_profile(G.id(), S.label(), profile, opt.config.format));
  return 0;
}

int cmd_growth(const Options& opt) {
  FiniteGroup G = build_group(opt);
  GeneratingSet S = build_gens(opt, G);
  const BigRat theta = parse_rational(opt.theta);
  const BigRat delta = parse_rational(opt.delta);
  cayley::PowerProfile profile = cayley::power_profile(G, S, opt.max_n, opt.config.power_cap);
  std::optional<cayley::GrowthWitness> witness =
      cayley::growth_condition(G, S, theta, delta);

  if (opt.config.format == Format::json) {
    ordered_json j;
    j["tool-version"] = kToolVersion;
    j["instance"] = ordered_json{{"group", G.id()}, {"gens", S.label()}};
    j["power_sizes"] = profile.sizes;
    j["cap_hit"] = profile.cap_hit;
    if (witness) {
      j["witness"] = ordered_json{{"n", witness->n},
                                  {"ratio", rational_to_string(witness->ratio)},
                                  {"alpha", witness->alpha},
                                  {"scan_bound", witness->scan_bound},
                                  {"diameter", witness->diameter}};
    } else {
      j["witness"] = nullptr;
    }
    emit(opt.config, j.dump(2) + "\n");
  } else {
    std::string out = serialize_power_profile(G.id(), S.label(), profile, Format::text);
    if (witness)
      out += "growth witness: n=" + std::to_string(witness->n) +
             " ratio=" + rational_to_string(witness->ratio) +
             " alpha=" + std::to_string(witness->alpha) + "\n";
    else
      out += "growth witness: NONE\n";
    emit(opt.config, out);
  }
  return 0;
}

int cmd_structure(const Options& opt) {
  FiniteGroup G = build_group(opt);
  ordered_json j;
  j["tool-version"] = kToolVersion;
  j["group"] = G.id();
  j["order"] = G.order();
  std::ostringstream text;
  text << G.id() << " order " << G.order() << '\n';

  if (opt.list_subgroups) {
    const auto& subs = structure::all_subgroups(G, opt.config.subgroup_cap);
    ordered_json arr = ordered_json::array();
    for (const auto& H : subs) {
      structure::SubgroupRecord rec = H;
      const bool normal = structure::is_normal(rec);
      ordered_json sj;
      sj["order"] = rec.order;
      sj["index"] = rec.index;
      sj["normal"] = normal;
      ordered_json gens = ordered_json::array();
      for (const auto& key : rec.generator_keys) gens.push_back(hex_key(key));
      sj["generators"] = std::move(gens);
      arr.push_back(std::move(sj));
      text << "subgroup order=" << rec.order << " index=" << rec.index
           << (normal ? " normal" : "") << '\n';
    }
    j["subgroups"] = std::move(arr);
    text << subs.size() << " subgroups\n";
  }
  if (opt.list_classes) {
    structure::ConjugacyData data = structure::conjugacy_classes(G, opt.config.subgroup_cap);
    j["class_count"] = data.class_count;
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < data.sizes.size(); ++i)
      arr.push_back(ordered_json{{"representative", hex_key(data.representatives[i])},
                                 {"size", data.sizes[i]}});
    j["classes"] = std::move(arr);
    text << data.class_count << " conjugacy classes, sizes:";
    for (auto s : data.sizes) text << ' ' << s;
    text << '\n';
  }
  if (opt.best_section) {
    structure::AbelianSection sec = structure::best_abelian_section(G, opt.config.subgroup_cap);
    structure::LowerCentralSeries lcs = structure::lower_central_series(sec.witness);
    j["best_abelian_section"] =
        ordered_json{{"max_abelian_order", sec.max_abelian_order},
                     {"witness_order", sec.witness.order},
                     {"witness_index", sec.witness.index},
                     {"nilpotency_class",
                      lcs.nilpotent() ? ordered_json(*lcs.nilpotency_class)
                                      : ordered_json("NOT_NILPOTENT")}};
    text << "best abelian section " << sec.max_abelian_order << " from subgroup of order "
         << sec.witness.order << " (class ";
    if (lcs.nilpotent())
      text << *lcs.nilpotency_class;
    else
      text << "NOT_NILPOTENT";
    text << ")\n";
  }
  emit(opt.config,
       opt.config.format == Format::json ? j.dump(2) + "\n" : text.str());
  return 0;
}

int cmd_verify(const Options& opt) {
  FiniteGroup G = build_group(opt);
  std::optional<verifier::ClaimId> claim = verifier::claim_from_name(opt.claim);
  if (!claim) throw ParseError("unknown claim '" + opt.claim + "'", 0);

  const BigRat theta = parse_rational(opt.theta);
  const BigRat delta = parse_rational(opt.delta);
  std::vector<verifier::ClaimReport> reports;
  switch (*claim) {
    case verifier::ClaimId::abelian_diam:
      reports.push_back(verifier::check_abelian_diameter(G, build_gens(opt, G)));
      break;
    case verifier::ClaimId::schreier:
    case verifier::ClaimId::theorem_b: {
      GeneratingSet S = build_gens(opt, G);
      for (const auto& H : structure::all_subgroups(G, opt.config.subgroup_cap))
        reports.push_back(*claim == verifier::ClaimId::schreier
                              ? verifier::check_schreier(G, H, S)
                              : verifier::check_theorem_B(G, H, S));
      break;
    }
    case verifier::ClaimId::conj_bound:
      reports.push_back(verifier::check_conjugacy_bound(G));
      break;
    case verifier::ClaimId::nilp2:
      reports.push_back(verifier::check_lemma_nilp2(G));
      break;
    case verifier::ClaimId::normal_set:
      reports.push_back(verifier::check_normal_set(G, build_gens(opt, G)));
      break;
    case verifier::ClaimId::bt_hypothesis:
      reports.push_back(
          verifier::growth_hypothesis_report(G, build_gens(opt, G), theta, delta));
      break;
    case verifier::ClaimId::bt_witness:
      reports.push_back(
          verifier::check_bt(G, build_gens(opt, G), theta, delta, opt.index_cap));
      break;
    case verifier::ClaimId::scaling:
      throw ParseError("use the scaling subcommand for SCALING", 0);
  }
  emit(opt.config, serialize_reports(reports, opt.config.format));
  std::uint64_t failures = 0;
  for (const auto& r : reports)
    if (!r.pass) ++failures;
  return failures_to_exit(failures);
}

int cmd_sweep(const Options& opt) {
  std::vector<verifier::CorpusEntry> corpus = parse_corpus_file(opt.corpus_path);
  std::vector<verifier::ClaimId> claims;
  std::stringstream ss(opt.claims);
  std::string name;
  while (std::getline(ss, name, ',')) {
    auto id = verifier::claim_from_name(name);
    if (!id) throw ParseError("unknown claim '" + name + "'", 0);
    claims.push_back(*id);
  }
  verifier::SweepConfig sweep;
  sweep.seed = opt.config.seed;
  sweep.theta = parse_rational(opt.theta);
  sweep.delta = parse_rational(opt.delta);
  sweep.index_cap = opt.index_cap;
  sweep.order_cap = opt.config.order_cap;
  sweep.subgroup_cap = opt.config.subgroup_cap;
  verifier::SweepResult result = verifier::run_corpus(corpus, claims, sweep);
  emit(opt.config, serialize_reports(result.reports, opt.config.format));
  return failures_to_exit(result.failures);
}

int cmd_scaling(const Options& opt) {
  auto family = verifier::scaling_family_from_name(opt.family);
  if (!family) throw ParseError("unknown scaling family '" + opt.family + "'", 0);
  verifier::ScalingTable table = verifier::scaling_experiment(*family, parse_range(opt.range));
  Format format = opt.config.format == Format::text ? Format::csv : opt.config.format;
  emit(opt.config, serialize_scaling(table, format));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  Options opt;
  if (const char* env_cap = std::getenv("CAYLEYLAB_CAP_ELEMENTS")) {
    try {
      opt.config.order_cap = std::stoull(env_cap);
    } catch (...) {
      std::cerr << "cayleylab: bad CAYLEYLAB_CAP_ELEMENTS value\n";
      return 2;
    }
  }

  CLI::App app{"exact Cayley-graph diameters, product-set growth, and structural "
               "verification for finite groups"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format: json, csv, text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", opt.config.output_path, "write output to a file");
  app.add_option("--seed", opt.config.seed, "seed for sampled generating sets");
  app.add_option("--threads", opt.config.threads,
                 "worker threads (results do not depend on this)");
  app.add_option("--cap-elements", opt.config.order_cap, "enumeration cap");
  app.add_option("--cap-power", opt.config.power_cap, "per-level power-set cap");
  app.add_option("--cap-subgroup", opt.config.subgroup_cap, "subgroup machinery cap");

  auto add_group = [&](CLI::App* cmd) {
    cmd->fallthrough();  // let global options appear after the subcommand
    cmd->add_option("--group", opt.group_spec, "group spec, e.g. sym:4 or wreath:3")
        ->required();
  };
  auto add_gens = [&](CLI::App* cmd) {
    cmd->add_option("--gens", opt.gens_spec,
                    "gens spec: standard | random:k:seed | all-nonid | file:path "
                    "(+symmetric / +conj-close)");
  };

  CLI::App* diameter = app.add_subcommand("diameter", "exact diameter and ball profile");
  add_group(diameter);
  add_gens(diameter);

  CLI::App* growth = app.add_subcommand("growth", "exact power-set sizes and growth scan");
  add_group(growth);
  add_gens(growth);
  growth->add_option("--max-n", opt.max_n, "compute |S^1|..|S^max-n|");
  growth->add_option("--theta", opt.theta, "growth ratio bound");
  growth->add_option("--delta", opt.delta, "scan exponent in (0,1]");

  CLI::App* structure_cmd = app.add_subcommand("structure", "subgroup structure reports");
  add_group(structure_cmd);
  structure_cmd->add_flag("--subgroups", opt.list_subgroups, "list every subgroup");
  structure_cmd->add_flag("--classes", opt.list_classes, "conjugacy classes");
  structure_cmd->add_flag("--best-section", opt.best_section, "best abelian section");

  CLI::App* verify = app.add_subcommand("verify", "check one claim on one instance");
  verify->fallthrough();
  verify->add_option("--claim", opt.claim, "claim id (e.g. SCHREIER, NILP2)")->required();
  add_group(verify);
  add_gens(verify);
  verify->add_option("--theta", opt.theta, "growth ratio bound");
  verify->add_option("--delta", opt.delta, "growth scan exponent");
  verify->add_option("--index-cap", opt.index_cap, "abelian subgroup index cap");

  CLI::App* sweep = app.add_subcommand("sweep", "run claims over a corpus file");
  sweep->fallthrough();
  sweep->add_option("--corpus", opt.corpus_path, "corpus file")->required();
  sweep->add_option("--claims", opt.claims, "comma-separated claim ids");
  sweep->add_option("--theta", opt.theta, "growth ratio bound");
  sweep->add_option("--delta", opt.delta, "growth scan exponent");
  sweep->add_option("--index-cap", opt.index_cap, "abelian subgroup index cap");

  CLI::App* scaling = app.add_subcommand("scaling", "diameter scaling across a family");
  scaling->fallthrough();
  scaling->add_option("--family", opt.family, "CYCLIC, DIHEDRAL, WREATH, SL2, ELEMAB")
      ->required();
  scaling->add_option("--range", opt.range, "parameters: a,b,c or lo..hi or lo..hi:xK")
      ->required();

  std::vector<const char*> argv;
  argv.push_back("cayleylab");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  opt.config.format = format == "json" ? Format::json
                      : format == "csv" ? Format::csv
                                        : Format::text;

  try {
    if (app.got_subcommand(diameter)) return cmd_diameter(opt);
    if (app.got_subcommand(growth)) return cmd_growth(opt);
    if (app.got_subcommand(structure_cmd)) return cmd_structure(opt);
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    if (app.got_subcommand(sweep)) return cmd_sweep(opt);
    if (app.got_subcommand(scaling)) return cmd_scaling(opt);
  } catch (const LimitError& e) {
    std::cerr << "cayleylab: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "cayleylab: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cayleylab: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace cayleylab::cli
