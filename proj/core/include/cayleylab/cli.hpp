#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cayleylab/genset.hpp"
#include "cayleylab/group.hpp"
#include "cayleylab/groupspec.hpp"
#include "cayleylab/serialize.hpp"
#include "cayleylab/verifier.hpp"

namespace cayleylab::cli {

struct RunConfig {
  Format format = Format::text;
  std::uint64_t order_cap = FiniteGroup::kDefaultOrderCap;
  std::uint64_t power_cap = cayley::kDefaultLevelCap;
  std::uint64_t subgroup_cap = structure::kDefaultSubgroupCap;
  std::uint64_t seed = 0;
  std::string output_path;  // empty = stdout
  unsigned threads = 1;     // accepted for compatibility; engine is sequential
};

/// Resolves a gens-spec against a concrete group. random:k:seed rejection
/// samples until the set generates (10,000 attempts).
GeneratingSet resolve_generating_set(const FiniteGroup& G, const GensSpec& spec);

/// Corpus file: one group-spec plus optional whitespace-separated gens-spec
/// per line; '#' starts a comment.
std::vector<verifier::CorpusEntry> parse_corpus_file(const std::string& path);
std::vector<verifier::CorpusEntry> parse_corpus(std::istream& in);

/// Exit codes: 0 all pass, 1 some claim failed, 2 usage/parse error,
/// 3 cap exceeded. `args` excludes the program name.
int run(const std::vector<std::string>& args);

}  // namespace cayleylab::cli
