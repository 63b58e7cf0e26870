#include "cayleylab/element.hpp"

#include <algorithm>

#include "cayleylab/errors.hpp"

namespace cayleylab {

namespace {

void check_perm(const std::vector<std::uint16_t>& images) {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v])
      throw DomainError("permutation images are not a bijection");
    seen[v] = true;
  }
}

std::uint32_t det_mod(const MatPayload& m) {
  const std::uint32_t p = m.mod;
  const auto& e = m.entries;
  std::uint32_t det = (std::uint32_t(e[0]) * e[3] % p + p * p -
                       std::uint32_t(e[1]) * e[2] % p) %
                      p;
  return det;
}

}  // namespace

GroupElement GroupElement::perm(std::vector<std::uint16_t> images) {
  check_perm(images);
  return GroupElement(PermPayload{std::move(images)});
}

GroupElement GroupElement::mat2(std::array<std::uint16_t, 4> entries, std::uint16_t mod) {
  if (mod < 2) throw DomainError("matrix modulus must be at least 2");
  for (auto& v : entries) v = static_cast<std::uint16_t>(v % mod);
  MatPayload payload{entries, mod};
  if (det_mod(payload) != 1 % mod)
    throw DomainError("matrix determinant is not 1 mod p");
  return GroupElement(Payload{payload});
}

GroupElement GroupElement::wreath(std::uint16_t bits, std::uint8_t shift, std::uint8_t points) {
  if (points == 0 || points > 12) throw DomainError("wreath size must be in 1..12");
  if (shift >= points) throw DomainError("wreath shift out of range");
  if (bits >> points) throw DomainError("wreath bits out of range");
  return GroupElement(Payload{WreathPayload{bits, shift, points}});
}

GroupElement GroupElement::coset(std::string rep_key) {
  return GroupElement(Payload{CosetPayload{std::move(rep_key)}});
}

GroupElement::Kind GroupElement::kind() const {
  return static_cast<Kind>(payload_.index());
}

const PermPayload& GroupElement::as_perm() const {
  if (auto* p = std::get_if<PermPayload>(&payload_)) return *p;
  throw DomainError("element is not a permutation");
}

const MatPayload& GroupElement::as_mat2() const {
  if (auto* p = std::get_if<MatPayload>(&payload_)) return *p;
  throw DomainError("element is not a matrix");
}

const WreathPayload& GroupElement::as_wreath() const {
  if (auto* p = std::get_if<WreathPayload>(&payload_)) return *p;
  throw DomainError("element is not a wreath pair");
}

const CosetPayload& GroupElement::as_coset() const {
  if (auto* p = std::get_if<CosetPayload>(&payload_)) return *p;
  throw DomainError("element is not a coset");
}

std::string GroupElement::canonical_key() const {
  std::string key;
  switch (kind()) {
    case Kind::perm: {
      const auto& images = as_perm().images;
      if (images.size() <= 255) {
        key.reserve(images.size());
        for (auto v : images) key.push_back(static_cast<char>(v));
      } else {
        key.reserve(2 * images.size());
        for (auto v : images) {
          key.push_back(static_cast<char>(v & 0xff));
          key.push_back(static_cast<char>(v >> 8));
        }
      }
      break;
    }
    case Kind::mat2: {
      const auto& m = as_mat2();
      for (auto v : m.entries) key.push_back(static_cast<char>(v));
      key.push_back(static_cast<char>(m.mod));
      break;
    }
    case Kind::wreath: {
      const auto& w = as_wreath();
      const unsigned bytes = (w.points + 7u) / 8u;
      for (unsigned i = 0; i < bytes; ++i)
        key.push_back(static_cast<char>((w.bits >> (8 * i)) & 0xff));
      key.push_back(static_cast<char>(w.shift));
      break;
    }
    case Kind::coset:
      key = as_coset().rep_key;
      break;
  }
  return key;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.kind() != b.kind())
    throw DomainError("cannot multiply " + kind_name(a.kind()) + " by " +
                      kind_name(b.kind()));
  switch (a.kind()) {
    case GroupElement::Kind::perm: {
      const auto& pa = a.as_perm().images;
      const auto& pb = b.as_perm().images;
      if (pa.size() != pb.size()) throw DomainError("permutation degree mismatch");
      std::vector<std::uint16_t> out(pa.size());
      for (std::size_t i = 0; i < pa.size(); ++i) out[i] = pb[pa[i]];
      return GroupElement::perm(std::move(out));
    }
    case GroupElement::Kind::mat2: {
      const auto& ma = a.as_mat2();
      const auto& mb = b.as_mat2();
      if (ma.mod != mb.mod) throw DomainError("matrix modulus mismatch");
      const std::uint32_t p = ma.mod;
      const auto& x = ma.entries;
      const auto& y = mb.entries;
      std::array<std::uint16_t, 4> out{
          static_cast<std::uint16_t>((std::uint32_t(x[0]) * y[0] + std::uint32_t(x[1]) * y[2]) % p),
          static_cast<std::uint16_t>((std::uint32_t(x[0]) * y[1] + std::uint32_t(x[1]) * y[3]) % p),
          static_cast<std::uint16_t>((std::uint32_t(x[2]) * y[0] + std::uint32_t(x[3]) * y[2]) % p),
          static_cast<std::uint16_t>((std::uint32_t(x[2]) * y[1] + std::uint32_t(x[3]) * y[3]) % p)};
      return GroupElement::mat2(out, ma.mod);
    }
    case GroupElement::Kind::wreath: {
      const auto& wa = a.as_wreath();
      const auto& wb = b.as_wreath();
      if (wa.points != wb.points) throw DomainError("wreath size mismatch");
      const unsigned n = wa.points;
      std::uint16_t rotated = 0;
      for (unsigned i = 0; i < n; ++i)
        if ((wb.bits >> ((i + wa.shift) % n)) & 1) rotated |= std::uint16_t(1) << i;
      return GroupElement::wreath(wa.bits ^ rotated,
                                  static_cast<std::uint8_t>((wa.shift + wb.shift) % n),
                                  wa.points);
    }
    case GroupElement::Kind::coset:
      throw DomainError("coset elements need their quotient group to multiply");
  }
  throw DomainError("unknown element kind");
}

GroupElement invert(const GroupElement& a) {
  switch (a.kind()) {
    case GroupElement::Kind::perm: {
      const auto& images = a.as_perm().images;
      std::vector<std::uint16_t> out(images.size());
      for (std::size_t i = 0; i < images.size(); ++i)
        out[images[i]] = static_cast<std::uint16_t>(i);
      return GroupElement::perm(std::move(out));
    }
    case GroupElement::Kind::mat2: {
      const auto& m = a.as_mat2();
      const std::uint32_t p = m.mod;
      const auto& e = m.entries;
      // det = 1, so the inverse is the adjugate.
      std::array<std::uint16_t, 4> out{
          e[3], static_cast<std::uint16_t>((p - e[1]) % p),
          static_cast<std::uint16_t>((p - e[2]) % p), e[0]};
      return GroupElement::mat2(out, m.mod);
    }
    case GroupElement::Kind::wreath: {
      const auto& w = a.as_wreath();
      const unsigned n = w.points;
      const std::uint8_t inv_shift = static_cast<std::uint8_t>((n - w.shift) % n);
      std::uint16_t rotated = 0;
      for (unsigned i = 0; i < n; ++i)
        if ((w.bits >> ((i + inv_shift) % n)) & 1) rotated |= std::uint16_t(1) << i;
      return GroupElement::wreath(rotated, inv_shift, w.points);
    }
    case GroupElement::Kind::coset:
      throw DomainError("coset elements need their quotient group to invert");
  }
  throw DomainError("unknown element kind");
}

GroupElement perm_from_key(const std::string& key, std::size_t degree) {
  std::vector<std::uint16_t> images(degree);
  if (degree <= 255) {
    if (key.size() != degree) throw FormatError("permutation key has wrong length");
    for (std::size_t i = 0; i < degree; ++i)
      images[i] = static_cast<std::uint8_t>(key[i]);
  } else {
    if (key.size() != 2 * degree) throw FormatError("permutation key has wrong length");
    for (std::size_t i = 0; i < degree; ++i)
      images[i] = static_cast<std::uint16_t>(static_cast<std::uint8_t>(key[2 * i]) |
                                             (static_cast<std::uint8_t>(key[2 * i + 1]) << 8));
  }
  return GroupElement::perm(std::move(images));
}

GroupElement mat2_from_key(const std::string& key) {
  if (key.size() != 5) throw FormatError("matrix key has wrong length");
  std::array<std::uint16_t, 4> entries;
  for (int i = 0; i < 4; ++i) entries[i] = static_cast<std::uint8_t>(key[i]);
  return GroupElement::mat2(entries, static_cast<std::uint8_t>(key[4]));
}

GroupElement wreath_from_key(const std::string& key, unsigned points) {
  const unsigned bytes = (points + 7u) / 8u;
  if (key.size() != bytes + 1) throw FormatError("wreath key has wrong length");
  std::uint16_t bits = 0;
  for (unsigned i = 0; i < bytes; ++i)
    bits |= std::uint16_t(static_cast<std::uint8_t>(key[i])) << (8 * i);
  return GroupElement::wreath(bits, static_cast<std::uint8_t>(key[bytes]),
                              static_cast<std::uint8_t>(points));
}

std::string kind_name(GroupElement::Kind kind) {
  switch (kind) {
    case GroupElement::Kind::perm: return "permutation";
    case GroupElement::Kind::mat2: return "matrix";
    case GroupElement::Kind::wreath: return "wreath";
    case GroupElement::Kind::coset: return "coset";
  }
  return "unknown";
}

}  // namespace cayleylab
