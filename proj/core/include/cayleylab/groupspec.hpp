#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cayleylab {

enum class Family : std::uint8_t {
  cyclic,
  dihedral,
  sym,
  q8,
  elemab,
  sl2,
  wreath,
  product,
  table,
};

std::string family_name(Family family);

/// Parsed form of the group-spec DSL:
///   spec    := family ":" params | "q8"
///   family  in {cyclic, dihedral, sym, q8, elemab, sl2, wreath, product, table}
///   product := "product:" spec "," spec   (factors parenthesized when nested)
///   table   := "table:" path
struct GroupSpec {
  Family family = Family::cyclic;
  std::vector<std::uint64_t> params;
  std::string path;               // table file
  std::vector<GroupSpec> factors; // product

  bool operator==(const GroupSpec&) const = default;

  /// Canonical text; parse(to_string()) reproduces the spec exactly.
  std::string to_string() const;
};

enum class GensKind : std::uint8_t { standard, random, all_nonid, file };
enum class GensModifier : std::uint8_t { none, symmetric, conj_close };

/// gens-spec grammar: "standard" | "random:k:seed" | "all-nonid" | "file:path",
/// optionally followed by "+symmetric" or "+conj-close".
struct GensSpec {
  GensKind kind = GensKind::standard;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  std::string path;
  GensModifier modifier = GensModifier::none;

  bool operator==(const GensSpec&) const = default;
  std::string to_string() const;
};

namespace cli {

/// Both parsers throw ParseError with the byte offset of the failure.
GroupSpec parse_group_spec(std::string_view text);
GensSpec parse_gens_spec(std::string_view text);

}  // namespace cli
}  // namespace cayleylab
