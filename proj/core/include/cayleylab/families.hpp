#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cayleylab/group.hpp"
#include "cayleylab/groupspec.hpp"

namespace cayleylab {

/// Builds the group described by `spec` with its standard generators
/// attached:
///   cyclic:n    shift-by-one on n points, generator {1}
///   dihedral:n  rotation and reflection on n vertices (n >= 3)
///   sym:d       (0 1) and (0 1 ... d-1), 2 <= d <= 8
///   q8          quaternion group via its regular representation, gens {i, j}
///   elemab:p:k  (C_p)^k on k disjoint p-cycles, unit-vector generators
///   sl2:p       SL2(F_p) with the two unipotent generators, prime p <= 13
///   wreath:n    (C2)^n semidirect C_n, gens {bit-flip e1, shift}, 2 <= n <= 12
///   product:a,b direct product acting on the disjoint union of the factors'
///               point sets (non-permutation factors pass through their
///               regular representation)
///   table:path  multiplication-table file, regular representation
FiniteGroup construct(const GroupSpec& spec,
                      std::uint64_t order_cap = FiniteGroup::kDefaultOrderCap);

/// Convenience: parse + construct.
FiniteGroup construct(const std::string& spec_text,
                      std::uint64_t order_cap = FiniteGroup::kDefaultOrderCap);

/// Multiplication-table file: line 1 holds n, lines 2..n+1 hold n 0-based
/// indices each (row i, column j = index of i*j), element 0 is the identity.
/// An optional final line "gens: i j ..." selects generators; the default is
/// all non-identity elements. '#' starts a comment.
FiniteGroup load_table_group(const std::string& path, const std::string& id,
                             std::uint64_t order_cap);
FiniteGroup load_table_group(std::istream& in, const std::string& id,
                             std::uint64_t order_cap);

}  // namespace cayleylab
