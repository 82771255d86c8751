#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ggal/families.hpp"
#include "ggal/skew.hpp"
#include "helpers.hpp"

using namespace ggal;

TEST_CASE("skew ring of the trivial groupoid is R itself") {
  Action triv = pair_transport_action(1, 5);
  SkewRing s = build_skew(triv);
  CHECK(s.ring.dim == 1);
  CHECK(s.ring.unit == Vec{1});
  CHECK(s.ring.c(0, 0, 0) == 1);
}

TEST_CASE("skew ring of EX1") {
  Action ex1 = ex1_action(5);
  SkewRing s = build_skew(ex1);
  CHECK(s.ring.dim == 4);

  // u_g * u_gi = 1_f u_f
  Vec ug = s.embed_cell(2, Vec{0, 1});   // 1_f u_g (E_g = E_f)
  Vec ugi = s.embed_cell(3, Vec{1, 0});  // 1_e u_gi
  Vec uf = s.embed_cell(1, Vec{0, 1});
  CHECK(s.ring.mul(ug, ugi) == uf);

  // unit is two-sided on every basis element
  for (std::size_t i = 0; i < s.ring.dim; ++i) {
    Vec b(s.ring.dim, 0);
    b[i] = 1;
    CHECK(s.ring.mul(s.ring.unit, b) == b);
    CHECK(s.ring.mul(b, s.ring.unit) == b);
  }
}

TEST_CASE("skew ring of EX2") {
  Action ex2 = ex2_action(5);
  SkewRing s = build_skew(ex2);
  CHECK(s.ring.dim == 8);

  // (1 u_g)^2 = 1 u_e since beta_g fixes 1
  Vec ug = s.embed_cell(1, ex2.alg.unit);
  Vec ue = s.embed_cell(0, ex2.alg.unit);
  CHECK(s.ring.mul(ug, ug) == ue);
  CHECK(ue == s.ring.unit);
}

TEST_CASE("R embeds as a unital subring") {
  for (const Action& act : {ex1_action(5), ex2_action(5), ex3_action(5)}) {
    SkewRing s = build_skew(act);
    CHECK(s.embed_algebra(act, act.alg.unit) == s.ring.unit);
    // multiplicative on a basis sweep
    for (std::size_t i = 0; i < act.alg.dim; ++i)
      for (std::size_t j = 0; j < act.alg.dim; ++j) {
        Vec bi(act.alg.dim, 0), bj(act.alg.dim, 0);
        bi[i] = 1;
        bj[j] = 1;
        CHECK(s.ring.mul(s.embed_algebra(act, bi), s.embed_algebra(act, bj)) ==
              s.embed_algebra(act, act.alg.mul(bi, bj)));
      }
  }
}

TEST_CASE("coset decomposition of the skew ring") {
  {
    Action ex2 = ex2_action(5);
    SkewRing s = build_skew(ex2);
    // h = G: a single summand, the whole ring
    auto whole = coset_decomposition_check(s, ex2, Subgroupoid{0b11});
    CHECK(whole.pass);
    REQUIRE(whole.right.size() == 1);
    CHECK(whole.right[0].dim == 8);
    // h = {e}: two summands of dim 4
    auto half = coset_decomposition_check(s, ex2, Subgroupoid{0b01});
    CHECK(half.pass);
    REQUIRE(half.right.size() == 2);
    CHECK(half.right[0].dim == 4);
    CHECK(half.right[1].dim == 4);
  }
  {
    Action ex1 = ex1_action(5);
    SkewRing s = build_skew(ex1);
    auto ids = coset_decomposition_check(s, ex1, Subgroupoid{ex1.gpd.identity_mask()});
    CHECK(ids.pass);
    REQUIRE(ids.right.size() == 4);
    for (const auto& sm : ids.right) CHECK(sm.dim == 1);
  }
}

TEST_CASE("summand dimensions always add up to dim R*G") {
  for (const Action& act : {ex1_action(5), ex2_action(5), ex3_action(5), pair_transport_action(3, 3),
                            elementary_abelian_perm_action(2, 3)}) {
    SkewRing s = build_skew(act);
    for (const Subgroupoid& h : wide_subgroupoids(act.gpd)) {
      auto rep = coset_decomposition_check(s, act, h);
      CHECK(rep.pass);
      std::size_t right_total = 0, left_total = 0;
      for (const auto& sm : rep.right) right_total += sm.dim;
      for (const auto& sm : rep.left) left_total += sm.dim;
      CHECK(right_total == s.ring.dim);
      CHECK(left_total == s.ring.dim);
    }
  }
}

TEST_CASE("build_skew rejects a broken action") {
  Action act = ex2_action(5);
  act.beta[1].at(1, 1) = 1;  // no longer an automorphism
  CHECK_THROWS_AS(build_skew(act), error);
}
