#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace cayleylab {

/// Permutation of {0..d-1} stored as its image list. Composition is
/// apply-left-then-right: (a.b)(x) = b[a[x]].
struct PermPayload {
  std::vector<std::uint16_t> images;
  bool operator==(const PermPayload&) const = default;
};

/// 2x2 matrix over Z/p, row-major entries (a b ; c d), determinant 1 mod p.
struct MatPayload {
  std::array<std::uint16_t, 4> entries{};
  std::uint16_t mod = 0;
  bool operator==(const MatPayload&) const = default;
};

/// Element of (C2)^n semidirect C_n: bit i of `bits` is coordinate i,
/// `shift` lives in Z_n. Product rule:
///   (b1,s1)(b2,s2) = (b1 xor rot_{s1}(b2), s1+s2 mod n)
/// where rot_s(b)[i] = b[(i+s) mod n] (left cyclic rotation by s).
struct WreathPayload {
  std::uint16_t bits = 0;
  std::uint8_t shift = 0;
  std::uint8_t points = 0;
  bool operator==(const WreathPayload&) const = default;
};

/// Coset of a quotient group, identified by the canonical key of its
/// representative in the parent group.
struct CosetPayload {
  std::string rep_key;
  bool operator==(const CosetPayload&) const = default;
};

class GroupElement {
public:
  enum class Kind : std::uint8_t { perm, mat2, wreath, coset };

  GroupElement() = default;

  static GroupElement perm(std::vector<std::uint16_t> images);
  static GroupElement mat2(std::array<std::uint16_t, 4> entries, std::uint16_t mod);
  static GroupElement wreath(std::uint16_t bits, std::uint8_t shift, std::uint8_t points);
  static GroupElement coset(std::string rep_key);

  Kind kind() const;

  const PermPayload& as_perm() const;
  const MatPayload& as_mat2() const;
  const WreathPayload& as_wreath() const;
  const CosetPayload& as_coset() const;

  /// Byte-exact canonical encoding; injective within one group. Layouts:
  ///   perm    one byte per point for degree <= 255, else two bytes
  ///           little-endian per point
  ///   mat2    bytes a,b,c,d then one byte p
  ///   wreath  ceil(n/8) bytes of bits (LSB = coordinate 0) then one byte shift
  ///   coset   the representative's key verbatim
  std::string canonical_key() const;

  bool operator==(const GroupElement&) const = default;

private:
  using Payload = std::variant<PermPayload, MatPayload, WreathPayload, CosetPayload>;
  explicit GroupElement(Payload payload) : payload_(std::move(payload)) {}

  Payload payload_;
};

/// Products and inverses of the self-contained kinds. Coset arithmetic needs
/// the quotient context and lives on FiniteGroup.
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement invert(const GroupElement& a);

/// Decoders for the documented key layouts (round-trip checks, file input).
GroupElement perm_from_key(const std::string& key, std::size_t degree);
GroupElement mat2_from_key(const std::string& key);
GroupElement wreath_from_key(const std::string& key, unsigned points);

std::string kind_name(GroupElement::Kind kind);

}  // namespace cayleylab
