#include <doctest.h>

#include "cayleylab/element.hpp"
#include "cayleylab/errors.hpp"

using namespace cayleylab;

TEST_CASE("permutation composition applies left then right") {
  // (12)*(123) = (13) in 1-based cycle names: [1,0,2]*[1,2,0] = [2,1,0]
  GroupElement t = GroupElement::perm({1, 0, 2});
  GroupElement c = GroupElement::perm({1, 2, 0});
  CHECK(compose(t, c) == GroupElement::perm({2, 1, 0}));
  CHECK(invert(c) == GroupElement::perm({2, 0, 1}));
}

TEST_CASE("identity laws") {
  GroupElement e = GroupElement::perm({0, 1, 2, 3});
  GroupElement x = GroupElement::perm({1, 2, 3, 0});
  CHECK(compose(e, x) == x);
  CHECK(compose(x, e) == x);
  CHECK(compose(x, invert(x)) == e);
}

TEST_CASE("matrix inverse mod 5") {
  GroupElement m = GroupElement::mat2({1, 1, 0, 1}, 5);
  CHECK(invert(m) == GroupElement::mat2({1, 4, 0, 1}, 5));
  CHECK(compose(m, invert(m)) == GroupElement::mat2({1, 0, 0, 1}, 5));
}

TEST_CASE("matrix determinant must be 1") {
  CHECK_THROWS_AS(GroupElement::mat2({1, 0, 0, 2}, 5), DomainError);
  CHECK_THROWS_AS(GroupElement::mat2({0, 0, 0, 0}, 5), DomainError);
}

TEST_CASE("permutation payload must be a bijection") {
  CHECK_THROWS_AS(GroupElement::perm({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(GroupElement::perm({0, 3}), DomainError);
}

TEST_CASE("kind mismatch is a domain error") {
  GroupElement p = GroupElement::perm({0, 1});
  GroupElement m = GroupElement::mat2({1, 0, 0, 1}, 5);
  CHECK_THROWS_AS(compose(p, m), DomainError);
}

TEST_CASE("canonical key layouts") {
  CHECK(GroupElement::perm({1, 0, 2}).canonical_key() == std::string("\x01\x00\x02", 3));
  // wreath pair: ceil(n/8) bytes of bits, LSB = coordinate 0, then the shift
  CHECK(GroupElement::wreath(0b01, 1, 2).canonical_key() == std::string("\x01\x01", 2));
  CHECK(GroupElement::wreath(0b1000000001, 3, 10).canonical_key() ==
        std::string("\x01\x02\x03", 3));
  GroupElement m = GroupElement::mat2({1, 2, 3, 12}, 13);
  CHECK(m.canonical_key() == std::string("\x01\x02\x03\x0c\x0d", 5));
  CHECK(GroupElement::coset("abc").canonical_key() == "abc");
}

TEST_CASE("equal elements have equal keys, distinct elements distinct keys") {
  GroupElement a = GroupElement::perm({2, 0, 1});
  GroupElement b = GroupElement::perm({2, 0, 1});
  GroupElement c = GroupElement::perm({1, 2, 0});
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK(a.canonical_key() != c.canonical_key());
}

TEST_CASE("key decoding round-trips every kind") {
  GroupElement p = GroupElement::perm({3, 1, 0, 2});
  CHECK(perm_from_key(p.canonical_key(), 4) == p);

  std::vector<std::uint16_t> big(300);
  for (std::size_t i = 0; i < 300; ++i) big[i] = static_cast<std::uint16_t>((i + 7) % 300);
  GroupElement wide = GroupElement::perm(big);
  CHECK(wide.canonical_key().size() == 600);
  CHECK(perm_from_key(wide.canonical_key(), 300) == wide);

  GroupElement m = GroupElement::mat2({1, 1, 1, 2}, 3);
  CHECK(mat2_from_key(m.canonical_key()) == m);

  GroupElement w = GroupElement::wreath(0b101, 2, 3);
  CHECK(wreath_from_key(w.canonical_key(), 3) == w);
}

TEST_CASE("wreath product law and inverse") {
  // (b1,s1)(b2,s2) = (b1 ^ rot_{s1}(b2), s1+s2); rot_s(b)[i] = b[(i+s) % n]
  GroupElement delta = GroupElement::wreath(0b01, 0, 2);
  GroupElement sigma = GroupElement::wreath(0b00, 1, 2);
  GroupElement sd = compose(sigma, delta);
  CHECK(sd == GroupElement::wreath(0b10, 1, 2));
  GroupElement e = GroupElement::wreath(0, 0, 2);
  for (const GroupElement& x : {delta, sigma, sd}) CHECK(compose(x, invert(x)) == e);
}
