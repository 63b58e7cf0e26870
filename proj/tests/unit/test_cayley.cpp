#include <doctest.h>

#include <algorithm>

#include "cayleylab/cayley.hpp"
#include "cayleylab/errors.hpp"
#include "cayleylab/families.hpp"
#include "cayleylab/quotient.hpp"
#include "cayleylab/structure.hpp"

#include "oracles.hpp"

using namespace cayleylab;
using cayleylab::cayley::ball_profile;
using cayleylab::cayley::diameter;
using cayleylab::cayley::power_profile;

namespace {

GeneratingSet standard(const FiniteGroup& G) {
  return GeneratingSet::make(G, G.generators(), "standard");
}

GeneratingSet gens(const FiniteGroup& G, std::vector<GroupElement> elems) {
  return GeneratingSet::make(G, std::move(elems), "test");
}

}  // namespace

TEST_CASE("ball profiles pinned by hand") {
  FiniteGroup c5 = construct("cyclic:5");
  CHECK(ball_profile(c5, standard(c5)).sizes == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
  CHECK(diameter(c5, standard(c5)) == 4);

  FiniteGroup s3 = construct("sym:3");
  CHECK(ball_profile(s3, standard(s3)).sizes == std::vector<std::uint64_t>{1, 3, 6});
  CHECK(diameter(s3, standard(s3)) == 2);

  GeneratingSet three_cycle = gens(s3, {GroupElement::perm({1, 2, 0})});
  cayley::BallProfile p = ball_profile(s3, three_cycle);
  CHECK(p.sizes == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(!p.generates);
  CHECK(diameter(s3, three_cycle) == std::nullopt);  // the INFINITE marker

  FiniteGroup w2 = construct("wreath:2");
  CHECK(ball_profile(w2, standard(w2)).sizes ==
        std::vector<std::uint64_t>{1, 3, 5, 7, 8});
  CHECK(diameter(w2, standard(w2)) == 4);

  FiniteGroup c6 = construct("cyclic:6");
  GroupElement one = c6.generators()[0];
  GeneratingSet two_gens = gens(c6, {one, c6.multiply(one, one)});
  CHECK(ball_profile(c6, two_gens).sizes == std::vector<std::uint64_t>{1, 3, 5, 6});
  CHECK(diameter(c6, two_gens) == 3);
}

TEST_CASE("diameter agrees with the naive oracle on a spread of groups") {
  for (const char* spec : {"sym:4", "dihedral:6", "q8", "sl2:3", "wreath:3",
                           "product:sym:3,cyclic:2"}) {
    FiniteGroup G = construct(spec);
    const std::int64_t expect = oracle::diameter(G, G.generators());
    REQUIRE(expect >= 0);
    CHECK(diameter(G, standard(G)) == static_cast<std::uint64_t>(expect));
  }
}

TEST_CASE("power profiles pinned by hand and against the oracle") {
  FiniteGroup s3 = construct("sym:3");
  CHECK(power_profile(s3, standard(s3), 3).sizes == std::vector<std::uint64_t>{2, 4, 6});
  CHECK(power_profile(s3, standard(s3), 5).sizes ==
        oracle::power_sizes(s3, s3.generators(), 5));

  FiniteGroup c1000 = construct("cyclic:1000");
  auto p = power_profile(c1000, standard(c1000), 10);
  CHECK(p.sizes == std::vector<std::uint64_t>(10, 1));  // singleton powers

  GeneratingSet withid = gens(s3, {s3.identity()});
  CHECK(power_profile(s3, withid, 4).sizes == std::vector<std::uint64_t>(4, 1));

  FiniteGroup q8 = construct("q8");
  CHECK(power_profile(q8, standard(q8), 6).sizes ==
        oracle::power_sizes(q8, q8.generators(), 6));
}

TEST_CASE("power level cap reports partial profile") {
  FiniteGroup s4 = construct("sym:4");
  auto p = power_profile(s4, standard(s4), 8, 10);
  CHECK(p.cap_hit);
  CHECK(!p.sizes.empty());
  for (auto s : p.sizes) CHECK(s <= 10);
}

TEST_CASE("ball equals union of exact powers") {
  for (const char* spec : {"sym:3", "q8", "dihedral:5", "wreath:2", "cyclic:12"}) {
    FiniteGroup G = construct(spec);
    GeneratingSet S = standard(G);
    cayley::BallProfile balls = ball_profile(G, S);

    // accumulate the oracle's exact power levels
    std::set<std::string> acc{G.identity().canonical_key()};
    std::map<std::string, GroupElement> level;
    for (const auto& e : G.generators()) level.emplace(e.canonical_key(), e);
    for (std::size_t n = 1; n < balls.sizes.size(); ++n) {
      for (const auto& [k, v] : level) acc.insert(k);
      CHECK(acc.size() == balls.sizes[n]);
      std::map<std::string, GroupElement> next;
      for (const auto& [k, x] : level)
        for (const auto& g : G.generators()) {
          GroupElement y = G.multiply(x, g);
          next.emplace(y.canonical_key(), y);
        }
      level = std::move(next);
    }
  }
}

TEST_CASE("if the identity is in S then S^n equals B_n") {
  FiniteGroup G = construct("sym:3");
  std::vector<GroupElement> elems = G.generators();
  elems.push_back(G.identity());
  GeneratingSet S = GeneratingSet::make(G, elems, "with-identity");
  auto powers = power_profile(G, S, 6).sizes;
  auto balls = ball_profile(G, S).sizes;
  for (std::size_t n = 1; n < balls.size(); ++n) CHECK(powers[n - 1] == balls[n]);
}

TEST_CASE("quotient diameters never exceed the parent diameter") {
  for (const char* spec : {"sym:3", "sym:4", "q8", "dihedral:6", "wreath:2"}) {
    FiniteGroup G = construct(spec);
    GeneratingSet S = standard(G);
    const std::uint64_t diam_g = *diameter(G, S);
    for (const auto& N : structure::normal_subgroups(G)) {
      QuotientGroup Q = quotient(G, N.element_key_set());
      std::vector<GroupElement> images;
      for (const auto& s : S.elements()) images.push_back(Q.project(s));
      GeneratingSet rho = GeneratingSet::make(Q.group(), images, "projected");
      if (rho.empty()) {
        CHECK(Q.order() == 1);
        continue;
      }
      auto dq = diameter(Q.group(), rho);
      REQUIRE(dq.has_value());
      CHECK(*dq <= diam_g);
    }
  }
}

TEST_CASE("ball growth bound: |G| <= (|S|+1)^(diam+1)") {
  for (const char* spec : {"sym:4", "q8", "cyclic:30", "wreath:3", "sl2:5"}) {
    FiniteGroup G = construct(spec);
    GeneratingSet S = standard(G);
    const std::uint64_t d = *diameter(G, S);
    CHECK(BigInt(G.order()) <= ipow(BigInt(S.size() + 1), d + 1));
  }
}

TEST_CASE("profiles do not depend on generator order") {
  FiniteGroup G = construct("sym:4");
  std::vector<GroupElement> fwd = G.generators();
  std::vector<GroupElement> rev(fwd.rbegin(), fwd.rend());
  CHECK(ball_profile(G, gens(G, fwd)).sizes == ball_profile(G, gens(G, rev)).sizes);
  CHECK(power_profile(G, gens(G, fwd), 6).sizes == power_profile(G, gens(G, rev), 6).sizes);
}

TEST_CASE("empty generating set is allowed only for the trivial group") {
  FiniteGroup triv = construct("cyclic:1");
  GeneratingSet none = GeneratingSet::make(triv, {}, "empty");
  CHECK(ball_profile(triv, none).sizes == std::vector<std::uint64_t>{1});
  CHECK(diameter(triv, none) == 0);

  FiniteGroup c2 = construct("cyclic:2");
  CHECK_THROWS_AS(ball_profile(c2, GeneratingSet::make(c2, {}, "empty")),
                  PreconditionError);
}

TEST_CASE("growth condition witnesses") {
  FiniteGroup c1000 = construct("cyclic:1000");
  auto w = cayley::growth_condition(c1000, standard(c1000), BigRat(5), BigRat(1, 4));
  REQUIRE(w.has_value());
  CHECK(w->n == 1);
  CHECK(w->ratio == 1);
  CHECK(w->diameter == 999);
  CHECK(w->scan_bound == 5);  // floor(999^(1/4))

  FiniteGroup s3 = construct("sym:3");
  auto ws = cayley::growth_condition(s3, standard(s3), BigRat(3), BigRat(1));
  REQUIRE(ws.has_value());
  CHECK(ws->n == 1);
  CHECK(ws->ratio == 3);  // |S^5| = 6 = 3 * |S^1|

  // theta = |G|, delta = 1 always yields n = 1 on a nontrivial group
  FiniteGroup q8 = construct("q8");
  auto wq = cayley::growth_condition(q8, standard(q8), BigRat(8), BigRat(1));
  REQUIRE(wq.has_value());
  CHECK(wq->n == 1);

  GeneratingSet bad = gens(s3, {GroupElement::perm({1, 2, 0})});
  CHECK_THROWS_AS(cayley::growth_condition(s3, bad, BigRat(5), BigRat(1, 4)),
                  PreconditionError);
}

TEST_CASE("growth alpha is the smallest a with 5^a > diam^(1/8)") {
  CHECK(growth_alpha(1) == 1);
  CHECK(growth_alpha(390624) == 1);   // 5^8 - 1
  CHECK(growth_alpha(390625) == 2);   // 5^8
  CHECK(growth_alpha(999) == 1);
}

TEST_CASE("find_log_set: explicit power-of-two witness on cyclic:64") {
  FiniteGroup G = construct("cyclic:64");
  GroupElement one = G.generators()[0];
  std::vector<GroupElement> powers;
  GroupElement cur = one;
  for (int k = 0; k < 6; ++k) {  // 1, 2, 4, 8, 16, 32
    powers.push_back(cur);
    cur = G.multiply(cur, cur);
  }
  GeneratingSet S = GeneratingSet::make(G, powers, "powers-of-two");
  REQUIRE(S.size() == 6);
  auto d = diameter(G, S);
  REQUIRE(d.has_value());
  CHECK(*d <= 6);

  auto found = cayley::find_log_set(G, BigRat(4), BigRat(4), 100, 7);
  REQUIRE(found.has_value());
  auto fd = diameter(G, *found);
  REQUIRE(fd.has_value());
  CHECK(*fd <= 24);  // ceil(4 * log2 64)
}

TEST_CASE("find_log_set on the order-2 group") {
  FiniteGroup G = construct("cyclic:2");
  auto found = cayley::find_log_set(G, BigRat(1), BigRat(1), 50, 3);
  REQUIRE(found.has_value());
  CHECK(*diameter(G, *found) <= 1);
}

TEST_CASE("find_log_set succeeds on sym:6 with generous constants") {
  FiniteGroup G = construct("sym:6");
  auto found = cayley::find_log_set(G, BigRat(4), BigRat(4), 100, 7);
  CHECK(found.has_value());
}
