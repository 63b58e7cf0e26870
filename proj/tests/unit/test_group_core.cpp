#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "cayleylab/errors.hpp"
#include "cayleylab/families.hpp"
#include "cayleylab/genset.hpp"
#include "cayleylab/quotient.hpp"
#include "cayleylab/structure.hpp"

#include "oracles.hpp"

using namespace cayleylab;

namespace {

FiniteGroup g(const std::string& spec) { return construct(spec); }

std::string fixture(const std::string& name) {
  return std::string(CAYLEYLAB_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("family orders") {
  CHECK(g("cyclic:6").order() == 6);
  CHECK(g("dihedral:5").order() == 10);
  CHECK(g("sym:4").order() == 24);   // 4!
  CHECK(g("q8").order() == 8);
  CHECK(g("elemab:2:3").order() == 8);
  CHECK(g("elemab:3:2").order() == 9);
  CHECK(g("sl2:3").order() == 24);   // 3 * 8
  CHECK(g("sl2:5").order() == 120);  // p(p^2-1)
  CHECK(g("wreath:2").order() == 8);  // 2^2 * 2
  CHECK(g("wreath:3").order() == 24);
  CHECK(g("product:cyclic:2,cyclic:3").order() == 6);
  CHECK(g("product:sl2:3,cyclic:2").order() == 48);
}

TEST_CASE("parameter range errors") {
  CHECK_THROWS_AS(g("sym:9"), LimitError);
  CHECK_THROWS_AS(g("sym:1"), LimitError);
  CHECK_THROWS_AS(g("sl2:4"), LimitError);
  CHECK_THROWS_AS(g("sl2:17"), LimitError);
  CHECK_THROWS_AS(g("wreath:13"), LimitError);
  CHECK_THROWS_AS(g("dihedral:2"), LimitError);
  CHECK_THROWS_AS(g("elemab:4:2"), LimitError);
}

TEST_CASE("enumeration cap reports a limit error") {
  CHECK_THROWS_AS(construct("sym:8", 1000).order(), LimitError);
}

TEST_CASE("group axioms hold on sampled triples") {
  std::mt19937_64 rng(99);
  for (const char* spec : {"sym:4", "sl2:5", "wreath:3", "q8", "dihedral:7"}) {
    FiniteGroup G = g(spec);
    const auto& keys = G.sorted_keys();
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    for (int t = 0; t < 1000; ++t) {
      const GroupElement& a = G.element_for_key(keys[pick(rng)]);
      const GroupElement& b = G.element_for_key(keys[pick(rng)]);
      const GroupElement& c = G.element_for_key(keys[pick(rng)]);
      REQUIRE(G.multiply(G.multiply(a, b), c) == G.multiply(a, G.multiply(b, c)));
    }
    for (int t = 0; t < 100; ++t) {
      const GroupElement& a = G.element_for_key(keys[pick(rng)]);
      REQUIRE(G.multiply(a, G.identity()) == a);
      REQUIRE(G.multiply(G.identity(), a) == a);
      REQUIRE(G.is_identity(G.multiply(a, G.inverse(a))));
    }
  }
}

TEST_CASE("enumeration is closed under products and inverses") {
  for (const char* spec : {"sym:3", "wreath:2", "sl2:3", "product:q8,cyclic:3"}) {
    FiniteGroup G = g(spec);
    const auto& keys = G.sorted_keys();
    REQUIRE(G.contains_key(G.identity().canonical_key()));
    for (const auto& ka : keys) {
      const GroupElement& a = G.element_for_key(ka);
      CHECK(G.contains_key(G.inverse(a).canonical_key()));
      for (const auto& kb : keys)
        CHECK(G.contains_key(G.multiply(a, G.element_for_key(kb)).canonical_key()));
    }
  }
}

TEST_CASE("table group: cyclic 7 fixture") {
  FiniteGroup G = construct("table:" + fixture("tables/c7.tbl"));
  CHECK(G.order() == 7);
  CHECK(G.generators().size() == 6);  // defaults to all non-identity
  CHECK(is_abelian(G));
}

TEST_CASE("table group: s3 fixture with explicit generators") {
  FiniteGroup G = construct("table:" + fixture("tables/s3.tbl"));
  CHECK(G.order() == 6);
  CHECK(G.generators().size() == 2);
  CHECK(!is_abelian(G));
  GeneratingSet S = GeneratingSet::make(G, G.generators(), "standard");
  CHECK(generates(G, S));
}

TEST_CASE("table format errors") {
  auto load = [](const std::string& text) {
    std::istringstream in(text);
    return load_table_group(in, "table:test", 1000);
  };
  CHECK_THROWS_AS(load(""), FormatError);
  CHECK_THROWS_AS(load("2\n0 1\n1 x\n"), FormatError);
  CHECK_THROWS_AS(load("2\n0 1\n"), FormatError);          // truncated
  CHECK_THROWS_AS(load("2\n0 1\n1 5\n"), FormatError);     // out of range
  CHECK_THROWS_AS(load("2\n1 0\n0 1\n"), FormatError);     // 0 not identity
  CHECK_THROWS_AS(load("3\n0 1 2\n1 0 0\n2 0 1\n"), FormatError);  // row repeats
  CHECK(load("2\n0 1\n1 0\n").order() == 2);
  CHECK_THROWS_AS(construct("table:/nonexistent/x.tbl"), FormatError);
}

TEST_CASE("quotient S3/A3 has order 2") {
  FiniteGroup G = g("sym:3");
  structure::SubgroupRecord A3 =
      structure::subgroup_closure(G, {G.element_for_key(GroupElement::perm({1, 2, 0}).canonical_key())});
  REQUIRE(A3.order == 3);
  QuotientGroup Q = quotient(G, A3.element_key_set());
  CHECK(Q.order() == 2);
  CHECK(Q.order() * 3 == G.order());

  // (123) lies in A3, (12) does not
  CHECK(Q.group().is_identity(Q.project(GroupElement::perm({1, 2, 0}))));
  CHECK(!Q.group().is_identity(Q.project(GroupElement::perm({1, 0, 2}))));
  CHECK(Q.group().is_identity(Q.project(G.identity())));
}

TEST_CASE("quotient by the trivial subgroup preserves the order") {
  FiniteGroup G = g("dihedral:4");
  FiniteGroup::KeySet trivial{G.identity().canonical_key()};
  QuotientGroup Q = quotient(G, trivial);
  CHECK(Q.order() == G.order());
}

TEST_CASE("quotient of q8 by its center is the Klein four group") {
  FiniteGroup G = g("q8");
  structure::SubgroupRecord Z = structure::center(G);
  REQUIRE(Z.order == 2);
  QuotientGroup Q = quotient(G, Z.element_key_set());
  CHECK(Q.order() == 4);
  CHECK(is_abelian(Q.group()));
  // every non-identity coset squares to the identity
  for (const auto& key : Q.group().sorted_keys()) {
    const GroupElement& x = Q.group().element_for_key(key);
    CHECK(Q.group().is_identity(Q.group().multiply(x, x)));
  }
}

TEST_CASE("projection is a homomorphism") {
  FiniteGroup G = g("sym:4");
  structure::SubgroupRecord V4 = structure::subgroup_closure(
      G, {GroupElement::perm({1, 0, 3, 2}), GroupElement::perm({2, 3, 0, 1})});
  REQUIRE(V4.order == 4);
  QuotientGroup Q = quotient(G, V4.element_key_set());
  CHECK(Q.order() == 6);

  std::mt19937_64 rng(7);
  const auto& keys = G.sorted_keys();
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  for (int t = 0; t < 500; ++t) {
    const GroupElement& a = G.element_for_key(keys[pick(rng)]);
    const GroupElement& b = G.element_for_key(keys[pick(rng)]);
    CHECK(Q.project(G.multiply(a, b)) ==
          Q.group().multiply(Q.project(a), Q.project(b)));
  }
}

TEST_CASE("quotient requires a normal subgroup") {
  FiniteGroup G = g("sym:3");
  structure::SubgroupRecord C2 =
      structure::subgroup_closure(G, {GroupElement::perm({1, 0, 2})});
  REQUIRE(C2.order == 2);
  CHECK_THROWS_AS(quotient(G, C2.element_key_set()), PreconditionError);
  FiniteGroup::KeySet not_closed{G.identity().canonical_key(),
                                 GroupElement::perm({1, 2, 0}).canonical_key()};
  CHECK_THROWS_AS(quotient(G, not_closed), PreconditionError);
}

TEST_CASE("quotients nest") {
  FiniteGroup G = g("cyclic:12");
  GroupElement six = G.identity();
  for (int i = 0; i < 6; ++i) six = G.multiply(six, G.generators()[0]);
  structure::SubgroupRecord N = structure::subgroup_closure(G, {six});
  REQUIRE(N.order == 2);
  QuotientGroup Q = quotient(G, N.element_key_set());  // C6
  CHECK(Q.order() == 6);
  // quotient the quotient by its order-3 subgroup
  GroupElement g2 = Q.group().multiply(Q.group().generators()[0], Q.group().generators()[0]);
  structure::SubgroupRecord C3 = structure::subgroup_closure(Q.group(), {g2});
  REQUIRE(C3.order == 3);
  QuotientGroup Q2 = quotient(Q.group(), C3.element_key_set());
  CHECK(Q2.order() == 2);
}

TEST_CASE("generating set flags") {
  FiniteGroup G = g("sym:3");
  GroupElement t = GroupElement::perm({1, 0, 2});
  GroupElement c = GroupElement::perm({1, 2, 0});
  GeneratingSet S = GeneratingSet::make(G, {t, c}, "test");
  CHECK(!S.symmetric_closed());  // (123)^-1 = (132) missing
  CHECK(!S.conjugation_closed());

  GeneratingSet sym = S.symmetric_closure(G);
  CHECK(sym.size() == 3);
  CHECK(sym.symmetric_closed());

  GeneratingSet conj = S.conjugation_closure(G);
  CHECK(conj.conjugation_closed());
  CHECK(conj.size() == 5);  // all transpositions + both 3-cycles

  GeneratingSet dup = GeneratingSet::make(G, {t, t, c}, "dups");
  CHECK(dup.size() == 2);
}

TEST_CASE("abelian groups are automatically conjugation closed") {
  FiniteGroup G = g("cyclic:9");
  GeneratingSet S = GeneratingSet::make(G, {G.generators()[0]}, "standard");
  CHECK(S.conjugation_closed());
}
