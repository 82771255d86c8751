#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ggal/families.hpp"
#include "random_instances.hpp"

using namespace ggal;
using testhelp::all_vectors;
using testhelp::random_small_action;
using testhelp::Rng;

namespace {

u64 mask_of(std::initializer_list<int> ids) {
  u64 m = 0;
  for (int i : ids) m |= u64(1) << i;
  return m;
}

// oracle: enumerate every element of R and keep the beta-fixed ones
Subspace brute_force_invariants(const Action& act) {
  const Algebra& a = act.alg;
  std::vector<Vec> fixed;
  for (const Vec& r : all_vectors(a.f, a.dim)) {
    bool inv = true;
    for (int g = 0; g < act.gpd.size() && inv; ++g)
      inv = act.apply(g, r) == a.mul(r, act.one_of(g));
    if (inv) fixed.push_back(r);
  }
  return Subspace::from_spanning(a.f, a.dim, fixed);
}

Subspace brute_force_j(const Action& act, int g) {
  const Algebra& a = act.alg;
  Subspace eg = act.ideal_of(g);
  std::vector<Vec> members;
  for (const Vec& r : all_vectors(a.f, a.dim)) {
    if (!eg.contains(r)) continue;
    bool ok = true;
    for (const Vec& x : all_vectors(a.f, a.dim)) {
      if (a.mul(r, act.apply(g, x)) != a.mul(x, r)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(r);
  }
  return Subspace::from_spanning(a.f, a.dim, members);
}

}  // namespace

TEST_CASE("bundled actions validate") {
  CHECK(validate_action(ex1_action(5)).ok());
  CHECK(validate_action(ex2_action(5)).ok());
  CHECK(validate_action(ex3_action(5)).ok());
  CHECK(validate_action(pair_transport_action(3, 3)).ok());
  CHECK(validate_action(z2_swap_action(2)).ok());
  CHECK(validate_action(z2_trivial_field_action(3)).ok());
  CHECK(validate_action(elementary_abelian_perm_action(2, 3)).ok());
}

TEST_CASE("validate flags a non-invertible beta") {
  Action act = ex2_action(5);
  Mat bad(Fp(5), 4, 4);  // conjugation by the rank-1 idempotent e11
  bad.at(0, 0) = 1;
  act.beta[1] = bad;
  ValidationReport rep = validate_action(act);
  CHECK(!rep.ok());
  CHECK(rep.has("beta-bijective"));
}

TEST_CASE("validate flags broken idempotent decomposition") {
  Action act = ex1_action(5);
  act.unit_idem[1] = {1, 1};
  ValidationReport rep = validate_action(act);
  CHECK(rep.has("idempotent-sum"));
  CHECK(rep.has("idempotent-orthogonal"));
}

TEST_CASE("invariants subalgebra fixed values") {
  // trivial action: everything is invariant
  Action triv = pair_transport_action(1, 5);
  CHECK(invariants_subalgebra(triv).space == Subspace::full(Fp(5), 1));

  Subalg ex1 = invariants_subalgebra(ex1_action(5));
  CHECK(ex1.space == Subspace::from_spanning(Fp(5), 2, {{1, 1}}));
  CHECK(ex1.unital);

  Subalg ex2 = invariants_subalgebra(ex2_action(5));
  CHECK(ex2.space == Subspace::from_spanning(Fp(5), 4, {{1, 0, 0, 0}, {0, 0, 0, 1}}));

  Subalg ex3 = invariants_subalgebra(ex3_action(5));
  CHECK(ex3.dim() == 3);
}

TEST_CASE("invariants match the exhaustive oracle at p in {2,3}") {
  Rng rng(303);
  for (int trial = 0; trial < 25; ++trial) {
    u32 p = trial % 2 == 0 ? 2 : 3;
    Action act = random_small_action(rng, p);
    REQUIRE(validate_action(act).ok());
    CHECK(invariants_subalgebra(act).space == brute_force_invariants(act));
  }
}

TEST_CASE("restriction to wide subgroupoids") {
  Action ex2 = ex2_action(5);
  const u64 whole = mask_of({0, 1});

  Action same = restrict_action(ex2, Subgroupoid{whole});
  CHECK(validate_action(same).ok());
  CHECK(invariants_subalgebra(same).space == invariants_subalgebra(ex2).space);

  Action identity_only = restrict_action(ex2, Subgroupoid{mask_of({0})});
  CHECK(validate_action(identity_only).ok());
  CHECK(invariants_subalgebra(identity_only).space == Subspace::full(Fp(5), 4));

  Action ex1 = ex1_action(5);
  Action ids = restrict_action(ex1, Subgroupoid{ex1.gpd.identity_mask()});
  CHECK(invariants_subalgebra(ids).space == Subspace::full(Fp(5), 2));

  CHECK_THROWS_AS(restrict_action(ex2, Subgroupoid{mask_of({1})}), error);

  // invariants_over computes the restricted invariants without rebuilding
  for (const Subgroupoid& h : wide_subgroupoids(ex3_action(5).gpd)) {
    Action ex3 = ex3_action(5);
    CHECK(invariants_over(ex3, h.mask).space ==
          invariants_subalgebra(restrict_action(ex3, h)).space);
  }
}

TEST_CASE("j_module fixed values") {
  Action ex2 = ex2_action(5);
  // J_e = C(R) 1_e: the scalars
  CHECK(j_module(ex2, 0).space == Subspace::from_spanning(Fp(5), 4, {{1, 0, 0, 1}}));
  // J_g = span{diag(1,-1)}
  JModule jg = j_module(ex2, 1);
  CHECK(jg.space == Subspace::from_spanning(Fp(5), 4, {{1, 0, 0, 4}}));
  Vec u = {1, 0, 0, 4};
  for (std::size_t i = 0; i < 4; ++i) {
    Vec x(4, 0);
    x[i] = 1;
    CHECK(ex2.alg.mul(u, ex2.apply(1, x)) == ex2.alg.mul(x, u));
  }

  Action ex1 = ex1_action(5);
  CHECK(j_module(ex1, 2).space.dim() == 0);
  CHECK(j_module(ex1, 3).space.dim() == 0);
  CHECK(j_module(ex1, 0).space == Subspace::from_spanning(Fp(5), 2, {{1, 0}}));
}

TEST_CASE("j_module against the exhaustive oracle and C(R)-stability") {
  Rng rng(404);
  for (int trial = 0; trial < 15; ++trial) {
    u32 p = trial % 2 == 0 ? 2 : 3;
    Action act = random_small_action(rng, p);
    Subalg ctr = center(act.alg);
    for (int g = 0; g < act.gpd.size(); ++g) {
      Subspace j = j_module(act, g).space;
      CHECK(j == brute_force_j(act, g));
      CHECK(act.ideal_of(g).contains(j));
      // C(R) J_g inside J_g
      for (std::size_t ci = 0; ci < ctr.dim(); ++ci)
        for (std::size_t ji = 0; ji < j.dim(); ++ji)
          CHECK(j.contains(act.alg.mul(ctr.space.basis_row(ci), j.basis_row(ji))));
    }
  }
}

TEST_CASE("s and t sets") {
  Action ex1 = ex1_action(5);
  auto jtab1 = j_table(ex1);
  CHECK(s_set(jtab1, mask_of({0, 1, 2, 3})) == ex1.gpd.identity_mask());
  CHECK(t_set(jtab1, mask_of({0, 1, 2, 3})) == mask_of({2, 3}));

  Action ex2 = ex2_action(5);
  auto jtab2 = j_table(ex2);
  CHECK(s_set(jtab2, mask_of({0, 1})) == mask_of({0, 1}));
  CHECK(t_set(jtab2, mask_of({0, 1})) == 0);

  // S depends only on the morphism, not the ambient subgroupoid
  Action ex3 = ex3_action(5);
  auto jtab3 = j_table(ex3);
  u64 sg = s_set(jtab3, (u64(1) << ex3.gpd.size()) - 1);
  for (const Subgroupoid& h : wide_subgroupoids(ex3.gpd)) CHECK(s_set(jtab3, h.mask) == (sg & h.mask));
}

TEST_CASE("h_bar classes") {
  Action ex1 = ex1_action(5);
  auto jtab1 = j_table(ex1);
  auto wide1 = wide_subgroupoids(ex1.gpd);
  // both wide subgroupoids share S = G_0
  auto cls = h_bar_class(jtab1, wide1, wide1[0]);
  REQUIRE(cls.size() == 2);
  CHECK(h_bar_class(jtab1, wide1, wide1[1]).size() == 2);

  Action ex2 = ex2_action(5);
  auto jtab2 = j_table(ex2);
  auto wide2 = wide_subgroupoids(ex2.gpd);
  for (const Subgroupoid& h : wide2) {
    auto c = h_bar_class(jtab2, wide2, h);
    REQUIRE(c.size() == 1);
    CHECK(c[0].mask == h.mask);
  }

  // class membership is an equivalence: reflexive and consistent
  Action ex3 = ex3_action(5);
  auto jtab3 = j_table(ex3);
  auto wide3 = wide_subgroupoids(ex3.gpd);
  for (const Subgroupoid& h : wide3) {
    auto c = h_bar_class(jtab3, wide3, h);
    bool contains_h = false;
    for (const Subgroupoid& l : c) {
      contains_h = contains_h || l.mask == h.mask;
      auto c2 = h_bar_class(jtab3, wide3, l);
      REQUIRE(c2.size() == c.size());
      for (std::size_t i = 0; i < c.size(); ++i) CHECK(c2[i].mask == c[i].mask);
    }
    CHECK(contains_h);
  }
}
